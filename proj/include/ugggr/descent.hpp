#pragma once

#include "ugggr/lusztig.hpp"

#include <vector>

namespace ugggr {

Partition descent_index(const LusztigDatum& d);
LusztigDatum first_descent(const LusztigDatum& d);

// Multiplicity with which the unipotent piece `to` occurs in `from` for one class.
// Paper mode: the 2-transverse indicator for every class.
// Canonical mode: same for odd sizes; for even sizes (general linear factor) the
// number of nu with from/nu and to/nu both vertical strips.
int slot_multiplicity(ClassKind kind, const Partition& from, const Partition& to, Mode mode);

// Product of slot multiplicities over every label present in either datum.
int multiplicity(const LusztigDatum& d, const LusztigDatum& dp, Mode mode);

struct BranchTerm {
    QPoly coeff;
    LusztigDatum datum;
};

// Decomposition of the hook-orbit model (l,1,...,1) of d as a formal sum over U_{n-l}.
std::vector<BranchTerm> branch(const LusztigDatum& d, int l, Mode mode);

}  // namespace ugggr
