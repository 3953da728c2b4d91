#include "ugggr/lusztig.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace ugggr {

namespace {

bool display_less(const ShapeSlot& a, const ShapeSlot& b) {
    if (a.size != b.size) return a.size > b.size;
    int sa = a.partition.size(), sb = b.partition.size();
    if (sa != sb) return sa < sb;
    return a.partition < b.partition;
}

// Order of enumerate_families: more slots first, then by class sizes, then slotwise.
struct FamilyKey {
    int neg_slots;
    std::vector<int> sizes;
    std::vector<int> weights;
    std::vector<Partition> parts;
    auto operator<=>(const FamilyKey&) const = default;
};

FamilyKey family_key(const FamilyShape& s) {
    FamilyKey k{-static_cast<int>(s.slots.size()), {}, {}, {}};
    for (const auto& sl : s.slots) {
        k.sizes.push_back(sl.size);
        k.weights.push_back(sl.partition.size());
        k.parts.push_back(sl.partition);
    }
    return k;
}

QPoly substitute_power(const QPoly& p, int d, int sign) {
    // p(Q) with Q = sign * q^d
    std::vector<Rational> c(p.is_zero() ? 0 : p.degree() * d + 1);
    for (int k = 0; k <= p.degree(); ++k) {
        Rational v = p.coeffs()[k];
        if (sign < 0 && k % 2) v = -v;
        c[k * d] = v;
    }
    return QPoly(std::move(c));
}

}  // namespace

void validate(const LusztigDatum& d) {
    if (d.n < 0) throw std::invalid_argument("datum n must be nonnegative");
    int w = 0;
    std::set<std::string> ids;
    std::map<std::string, int> sizes;
    for (const auto& s : d.slots) {
        if (s.label.size < 1) throw std::invalid_argument("class size must be positive");
        if (s.partition.empty()) throw std::invalid_argument("slot '" + s.label.id + "' has an empty partition");
        if (!ids.insert(s.label.id).second) throw std::invalid_argument("duplicate label '" + s.label.id + "'");
        sizes[s.label.id] = s.label.size;
        w += s.label.size * s.partition.size();
    }
    if (w != d.n)
        throw std::invalid_argument("weight identity fails: slots sum to " + std::to_string(w) + ", n = " +
                                    std::to_string(d.n));
    for (const auto& s : d.slots)
        for (const auto& x : s.label.exclusions) {
            auto it = sizes.find(x);
            if (it != sizes.end() && it->second != s.label.size)
                throw std::invalid_argument("label '" + s.label.id + "' excludes '" + x + "' of a different size");
        }
}

FamilyShape make_shape(std::vector<ShapeSlot> slots) {
    std::sort(slots.begin(), slots.end(), display_less);
    FamilyShape s;
    for (const auto& sl : slots) s.n += sl.size * sl.partition.size();
    s.slots = std::move(slots);
    return s;
}

FamilyShape shape_of(const LusztigDatum& d) {
    std::vector<ShapeSlot> v;
    v.reserve(d.slots.size());
    for (const auto& s : d.slots) v.push_back({s.label.size, s.partition});
    return make_shape(std::move(v));
}

LusztigDatum representative(const FamilyShape& s) {
    LusztigDatum d{s.n, {}};
    int i = 0;
    for (const auto& sl : s.slots) d.slots.push_back({{"a" + std::to_string(++i), sl.size, Origin::original, {}}, sl.partition});
    return d;
}

std::vector<FamilyShape> enumerate_families(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<ShapeSlot> items;
    for (int d = 1; d <= n; ++d)
        for (int k = 1; k * d <= n; ++k)
            for (auto& p : partitions_of(k)) items.push_back({d, p});
    std::vector<FamilyShape> out;
    std::vector<ShapeSlot> cur;
    std::function<void(size_t, int)> rec = [&](size_t i, int rest) {
        if (rest == 0) {
            out.push_back(make_shape(cur));
            return;
        }
        for (size_t j = i; j < items.size(); ++j) {
            int w = items[j].size * items[j].partition.size();
            if (w > rest) continue;
            cur.push_back(items[j]);
            rec(j, rest - w);
            cur.pop_back();
        }
    };
    rec(0, n);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return family_key(a) < family_key(b); });
    for (const auto& s : out)
        if (s.n != n) throw std::logic_error("enumerated shape violates the weight identity");
    return out;
}

QPoly family_cardinality(const FamilyShape& s, Mode mode) {
    std::map<int, int> per_size;
    std::map<ShapeSlot, int> identical;
    for (const auto& sl : s.slots) {
        ++per_size[sl.size];
        ++identical[sl];
    }
    QPoly c = 1;
    for (auto [d, k] : per_size) c *= falling(n_count(d, mode), k);
    if (mode == Mode::canonical) {
        Integer sym = 1;
        for (const auto& kv : identical)
            for (int i = 2; i <= kv.second; ++i) sym *= i;
        c *= QPoly(Rational(Integer(1), sym));
    }
    return c;
}

QPoly generic_degree(ClassKind kind, const Partition& lam) {
    auto st = stats(lam);
    QPoly Q = QPoly::q();
    QPoly num = QPoly::monomial(1, st.n_stat);
    for (int i = 1; i <= lam.size(); ++i) num *= pow(Q, i) - QPoly(1);
    QPoly den = 1;
    for (int h : st.hooks) den *= pow(Q, h) - QPoly(1);
    QPoly in_Q = div_exact(num, den);
    bool unitary = kind.family() == GroupFamily::unitary;
    QPoly r = substitute_power(in_Q, kind.size(), unitary ? -1 : 1);
    if (r.leading() < 0) r = -r;
    return r;
}

QPoly unitary_order_ppart(int n) {
    QPoly r = 1;
    for (int i = 1; i <= n; ++i) r *= QPoly::monomial(1, i) - QPoly(i % 2 ? -1 : 1);
    return r;
}

QPoly unitary_order(int n) { return QPoly::monomial(1, n * (n - 1) / 2) * unitary_order_ppart(n); }

QPoly dimension(const FamilyShape& s) {
    QPoly cent = 1, degs = 1;
    for (const auto& sl : s.slots) {
        ClassKind k(sl.size);
        cent *= centralizer_order_ppart(k, sl.partition.size());
        degs *= generic_degree(k, sl.partition);
    }
    return div_exact(unitary_order_ppart(s.n), cent) * degs;
}

std::vector<std::pair<int, int>> coarse_case(const FamilyShape& s) {
    std::vector<std::pair<int, int>> v;
    for (const auto& sl : s.slots) v.emplace_back(sl.size, sl.partition.size());
    std::sort(v.begin(), v.end());
    return v;
}

std::string display_name(const FamilyShape& s) {
    using Case = std::vector<std::pair<int, int>>;
    static const std::map<Case, std::string> u4 = {
        {{{1, 1}, {1, 1}, {1, 1}, {1, 1}}, "A"},
        {{{1, 1}, {1, 1}, {1, 2}}, "B"},
        {{{1, 1}, {1, 1}, {2, 1}}, "C"},
        {{{1, 1}, {1, 3}}, "D"},
        {{{1, 2}, {1, 2}}, "E"},
        {{{1, 2}, {2, 1}}, "F"},
        {{{2, 1}, {2, 1}}, "G"},
        {{{1, 1}, {3, 1}}, "H"},
        {{{1, 4}}, "I"},
        {{{2, 2}}, "J"},
        {{{4, 1}}, "K"},
    };
    if (s.n == 2) {
        if (s.slots.size() == 2) return "C'";
        if (s.slots[0].size == 2) return "D'";
        return s.slots[0].partition == Partition{2} ? "A'" : "B'";
    }
    if (s.n == 4) {
        std::string name = u4.at(coarse_case(s));
        std::vector<Partition> refine;
        for (const auto& sl : s.slots)
            if (sl.partition.size() >= 2) refine.push_back(sl.partition);
        std::sort(refine.begin(), refine.end(), std::greater<>());
        if (!refine.empty()) {
            name += "[";
            for (size_t i = 0; i < refine.size(); ++i) name += (i ? "," : "") + to_string(refine[i]);
            name += "]";
        }
        return name;
    }
    std::string name = "{";
    for (size_t i = 0; i < s.slots.size(); ++i)
        name += (i ? ";" : "") + std::to_string(s.slots[i].size) + ":" + to_string(s.slots[i].partition);
    return name + "}";
}

}  // namespace ugggr
