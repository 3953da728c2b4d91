#pragma once

#include "ugggr/descent.hpp"
#include "ugggr/lusztig.hpp"
#include "ugggr/orbits.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ugggr {

struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// shortcut: once every remaining part is 1 the remaining model is the regular
// representation, so the fold returns sum(coeff * dim) instead of restricting further.
// full: restrict all the way down to U_0.
enum class Fold { shortcut, full };

QPoly whittaker_dim(const LusztigDatum& d, const Partition& lam, Mode mode, Fold fold = Fold::shortcut);

struct TableEntry {
    FamilyShape shape;
    QPoly f;
};

struct DecompositionTable {
    int n = 0;
    Partition orbit;
    Mode mode = Mode::canonical;
    std::vector<TableEntry> entries;  // enumerate_families(n) order, zeros included
};

// OpenMP over family shapes; thread count from thread_count().
DecompositionTable gggr_table(int n, const Partition& lam, Mode mode);
DecompositionTable gggr_table_serial(int n, const Partition& lam, Mode mode);

struct IdentityResult {
    Partition lambda;  // empty for the sum-of-squares identity
    QPoly lhs, rhs;
    std::string error;  // set when a term could not be computed in this mode

    bool pass() const { return error.empty() && lhs == rhs; }
    QPoly residual() const { return lhs - rhs; }
};

struct ConsistencyReport {
    int n = 0;
    Mode mode = Mode::canonical;
    std::vector<IdentityResult> identities;  // one per partition of n
    IdentityResult sum_of_squares;

    bool pass() const;
};

// OpenMP over partitions of n.
ConsistencyReport consistency_check(int n, Mode mode);
ConsistencyReport consistency_check_serial(int n, Mode mode);

// UGGGR_THREADS if set to a positive integer, else the OpenMP default.
int thread_count();

}  // namespace ugggr
