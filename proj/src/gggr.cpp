#include "ugggr/gggr.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <map>

namespace ugggr {

namespace {

bool all_ones(const std::vector<int>& parts, size_t from) {
    return std::all_of(parts.begin() + from, parts.end(), [](int x) { return x == 1; });
}

// Same shape, labels assigned in reverse slot order.
LusztigDatum relabeled(const FamilyShape& s) {
    LusztigDatum d = representative(s);
    int k = static_cast<int>(d.slots.size());
    for (auto& sl : d.slots) sl.label.id = "c" + std::to_string(k--);
    return d;
}

QPoly table_entry(const FamilyShape& s, const Partition& lam, Mode mode) {
    QPoly f = whittaker_dim(representative(s), lam, mode);
    if (whittaker_dim(relabeled(s), lam, mode) != f)
        throw std::logic_error("multiplicity depends on the label assignment for " + display_name(s));
    return f;
}

void check_size(int n, const Partition& lam) {
    if (lam.size() != n)
        throw SizeMismatch("orbit " + to_string(lam) + " is not a partition of " + std::to_string(n));
}

void rethrow_first(const std::vector<std::exception_ptr>& errs) {
    for (const auto& e : errs)
        if (e) std::rethrow_exception(e);
}

struct Sector {
    std::vector<FamilyShape> shapes;
    std::vector<QPoly> card, dim;
    std::string error;
};

Sector sector(int n, Mode mode) {
    Sector s;
    s.shapes = enumerate_families(n);
    for (const auto& sh : s.shapes) s.dim.push_back(dimension(sh));
    try {
        for (const auto& sh : s.shapes) s.card.push_back(family_cardinality(sh, mode));
    } catch (const UnsupportedMode& e) {
        s.error = e.what();
    }
    return s;
}

IdentityResult identity_for(const Sector& s, int n, const Partition& lam, Mode mode) {
    IdentityResult r{lam, {}, gggr_dimension(make_orbit(n, lam)), s.error};
    if (!r.error.empty()) return r;
    try {
        for (size_t i = 0; i < s.shapes.size(); ++i)
            r.lhs += s.card[i] * s.dim[i] * whittaker_dim(representative(s.shapes[i]), lam, mode);
    } catch (const UnsupportedMode& e) {
        r.error = e.what();
    }
    return r;
}

IdentityResult squares_for(const Sector& s, int n) {
    IdentityResult r{Partition{}, {}, unitary_order(n), s.error};
    if (!r.error.empty()) return r;
    for (size_t i = 0; i < s.shapes.size(); ++i) r.lhs += s.card[i] * s.dim[i] * s.dim[i];
    return r;
}

}  // namespace

int thread_count() {
    if (const char* env = std::getenv("UGGGR_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 1024L));
    }
    return omp_get_max_threads();
}

QPoly whittaker_dim(const LusztigDatum& d, const Partition& lam, Mode mode, Fold fold) {
    if (lam.size() != d.n)
        throw SizeMismatch("orbit " + to_string(lam) + " does not match datum of U_" + std::to_string(d.n));
    const auto& parts = lam.parts();
    if (parts.empty()) return 1;
    if (fold == Fold::shortcut && all_ones(parts, 0)) return dimension(shape_of(d));

    std::map<FamilyShape, QPoly> terms;
    for (auto& t : branch(d, parts[0], mode)) terms[shape_of(t.datum)] += t.coeff;
    for (size_t i = 1; i < parts.size(); ++i) {
        if (fold == Fold::shortcut && all_ones(parts, i)) {
            QPoly r;
            for (const auto& [s, c] : terms) r += c * dimension(s);
            return r;
        }
        std::map<FamilyShape, QPoly> next;
        for (const auto& [s, c] : terms)
            for (auto& t : branch(representative(s), parts[i], mode)) next[shape_of(t.datum)] += c * t.coeff;
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        terms = std::move(next);
    }
    QPoly r;
    for (const auto& kv : terms) r += kv.second;
    return r;
}

DecompositionTable gggr_table_serial(int n, const Partition& lam, Mode mode) {
    check_size(n, lam);
    DecompositionTable t{n, lam, mode, {}};
    for (auto& s : enumerate_families(n)) {
        QPoly f = table_entry(s, lam, mode);
        t.entries.push_back({std::move(s), std::move(f)});
    }
    return t;
}

DecompositionTable gggr_table(int n, const Partition& lam, Mode mode) {
    check_size(n, lam);
    auto shapes = enumerate_families(n);
    const int count = static_cast<int>(shapes.size());
    std::vector<QPoly> f(count);
    std::vector<std::exception_ptr> errs(count);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (int i = 0; i < count; ++i) {
        try {
            f[i] = table_entry(shapes[i], lam, mode);
        } catch (...) {
            errs[i] = std::current_exception();
        }
    }
    rethrow_first(errs);
    DecompositionTable t{n, lam, mode, {}};
    for (int i = 0; i < count; ++i) t.entries.push_back({std::move(shapes[i]), std::move(f[i])});
    return t;
}

bool ConsistencyReport::pass() const {
    return sum_of_squares.pass() &&
           std::all_of(identities.begin(), identities.end(), [](const auto& r) { return r.pass(); });
}

ConsistencyReport consistency_check_serial(int n, Mode mode) {
    if (n < 1) throw std::invalid_argument("consistency check needs n >= 1");
    Sector s = sector(n, mode);
    ConsistencyReport rep{n, mode, {}, squares_for(s, n)};
    for (const auto& lam : partitions_of(n)) rep.identities.push_back(identity_for(s, n, lam, mode));
    return rep;
}

ConsistencyReport consistency_check(int n, Mode mode) {
    if (n < 1) throw std::invalid_argument("consistency check needs n >= 1");
    Sector s = sector(n, mode);
    auto lams = partitions_of(n);
    const int count = static_cast<int>(lams.size());
    std::vector<IdentityResult> res(count);
    std::vector<std::exception_ptr> errs(count);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (int i = 0; i < count; ++i) {
        try {
            res[i] = identity_for(s, n, lams[i], mode);
        } catch (...) {
            errs[i] = std::current_exception();
        }
    }
    rethrow_first(errs);
    return {n, mode, std::move(res), squares_for(s, n)};
}

}  // namespace ugggr
