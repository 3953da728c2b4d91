#pragma once

#include "ugggr/partitions.hpp"
#include "ugggr/qpoly.hpp"

#include <map>
#include <stdexcept>

namespace ugggr {

struct OddG1 : std::logic_error {
    using std::logic_error::logic_error;
};
struct NotInImage : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NilpotentOrbit {
    int n = 0;
    Partition lambda;
};

// Throws std::invalid_argument if |lambda| != n.
NilpotentOrbit make_orbit(int n, Partition lambda);

// dim g_j for j >= 1 (zero entries omitted)
std::map<int, int> grading_dims(const NilpotentOrbit& o);
// dim g_0
int grading_dim0(const NilpotentOrbit& o);
QPoly gggr_dimension(const NilpotentOrbit& o);
Partition moment_descent(const Partition& lam_prime, int n);

}  // namespace ugggr
