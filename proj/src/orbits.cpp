#include "ugggr/orbits.hpp"

#include "ugggr/lusztig.hpp"

namespace ugggr {

NilpotentOrbit make_orbit(int n, Partition lambda) {
    if (lambda.size() != n)
        throw std::invalid_argument("orbit " + to_string(lambda) + " is not a partition of " + std::to_string(n));
    return {n, std::move(lambda)};
}

std::map<int, int> grading_dims(const NilpotentOrbit& o) {
    auto w = weights(o.lambda);
    std::map<int, int> g;
    for (int a : w)
        for (int b : w)
            if (a - b >= 1) ++g[a - b];
    return g;
}

int grading_dim0(const NilpotentOrbit& o) {
    auto w = weights(o.lambda);
    int c = 0;
    for (int a : w)
        for (int b : w) c += a == b;
    return c;
}

QPoly gggr_dimension(const NilpotentOrbit& o) {
    auto g = grading_dims(o);
    int e2 = 0;
    for (auto [j, dim] : g)
        if (j >= 2) e2 += dim;
    int g1 = g.count(1) ? g.at(1) : 0;
    if (g1 % 2) throw OddG1("dim g_1 = " + std::to_string(g1) + " is odd for " + to_string(o.lambda));
    return div_exact(unitary_order(o.n), QPoly::monomial(1, e2 + g1 / 2));
}

Partition moment_descent(const Partition& lam_prime, int n) {
    std::vector<int> parts;
    int shrunk = 0, twos = 0;
    for (int x : lam_prime.parts()) {
        if (x >= 3) {
            parts.push_back(x - 1);
            shrunk += x - 1;
        } else if (x == 2) {
            ++twos;
        }
    }
    int j = n - shrunk;
    if (j < 0 || j < twos)
        throw NotInImage(to_string(lam_prime) + " does not descend to a partition of " + std::to_string(n));
    parts.insert(parts.end(), j, 1);
    return Partition(std::move(parts));
}

}  // namespace ugggr
