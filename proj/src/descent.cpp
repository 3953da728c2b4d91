#include "ugggr/descent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace ugggr {

Partition descent_index(const LusztigDatum& d) {
    std::vector<int> ell;
    for (const auto& s : d.slots) {
        Partition t = transpose(s.partition);
        if (static_cast<int>(ell.size()) < t.length()) ell.resize(t.length());
        for (int i = 0; i < t.length(); ++i) ell[i] += s.label.size * t[i];
    }
    return Partition(std::move(ell));
}

LusztigDatum first_descent(const LusztigDatum& d) {
    if (d.n < 1) throw std::invalid_argument("first descent needs n >= 1");
    Partition ell = descent_index(d);
    LusztigDatum r{d.n - ell[0], {}};
    for (const auto& s : d.slots) {
        Partition p = remove_columns(s.partition, 1);
        if (!p.empty()) r.slots.push_back({s.label, p});
    }
    return r;
}

int slot_multiplicity(ClassKind kind, const Partition& from, const Partition& to, Mode mode) {
    if (mode == Mode::canonical && kind.family() == GroupFamily::general_linear)
        return vertical_strip_pairs(from, to);
    return two_transverse(from, to) ? 1 : 0;
}

int multiplicity(const LusztigDatum& d, const LusztigDatum& dp, Mode mode) {
    std::map<std::string, std::pair<int, Partition>> src, dst;
    for (const auto& s : d.slots) src[s.label.id] = {s.label.size, s.partition};
    for (const auto& s : dp.slots) dst[s.label.id] = {s.label.size, s.partition};
    int m = 1;
    for (const auto& [id, v] : src) {
        auto it = dst.find(id);
        if (it != dst.end() && it->second.first != v.first)
            throw std::invalid_argument("label '" + id + "' changes size");
        m *= slot_multiplicity(ClassKind(v.first), v.second, it == dst.end() ? Partition{} : it->second.second, mode);
        if (!m) return 0;
    }
    for (const auto& [id, v] : dst) {
        if (src.count(id)) continue;
        m *= slot_multiplicity(ClassKind(v.first), Partition{}, v.second, mode);
        if (!m) return 0;
    }
    return m;
}

namespace {

struct Target {
    Partition mu;
    int mult;
};

// Every mu with nonzero multiplicity differs from lam by at most one in each row,
// so candidates are generated row by row and filtered by the rule.
std::vector<Target> targets(ClassKind kind, const Partition& lam, int max_cells, Mode mode) {
    std::vector<Target> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int i, int cells) {
        // a zero row ends mu
        if (lam[i] <= 1) {
            Partition mu(cur);
            if (int m = slot_multiplicity(kind, lam, mu, mode)) out.push_back({std::move(mu), m});
        }
        int hi = std::min(lam[i] + 1, i ? cur[i - 1] : lam[i] + 1);
        for (int x = std::max(lam[i] - 1, 1); x <= hi && cells + x <= max_cells; ++x) {
            cur.push_back(x);
            rec(i + 1, cells + x);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

// Multisets of fresh single-column slots (size, column length) of total weight w,
// listed in nondecreasing order.
void fresh_multisets(int w, std::pair<int, int> floor, std::vector<std::pair<int, int>>& cur,
                     std::vector<std::vector<std::pair<int, int>>>& out) {
    if (w == 0) {
        out.push_back(cur);
        return;
    }
    for (int d = floor.first; d <= w; ++d)
        for (int k = 1; d * k <= w; ++k) {
            if (std::make_pair(d, k) < floor) continue;
            cur.emplace_back(d, k);
            fresh_multisets(w - d * k, {d, k}, cur, out);
            cur.pop_back();
        }
}

struct Signature {
    std::vector<std::pair<std::string, Partition>> kept;
    std::vector<ShapeSlot> fresh;
    auto operator<=>(const Signature&) const = default;
};

}  // namespace

std::vector<BranchTerm> branch(const LusztigDatum& d, int l, Mode mode) {
    if (l < 0 || l > d.n) throw std::invalid_argument("hook size must lie in [0, n]");
    if (l == 0) return {{QPoly(1), d}};
    const int m = d.n - l;

    std::map<int, int> same_size;
    std::set<std::string> used_ids;
    for (const auto& s : d.slots) {
        ++same_size[s.label.size];
        used_ids.insert(s.label.id);
    }

    std::vector<std::vector<Target>> opts;
    for (const auto& s : d.slots) opts.push_back(targets(ClassKind(s.label.size), s.partition, m / s.label.size, mode));

    std::map<int, QPoly> ncache;
    auto available = [&](int size) -> const QPoly& {
        auto it = ncache.find(size);
        if (it == ncache.end()) it = ncache.emplace(size, n_count(size, mode) - QPoly(same_size[size])).first;
        return it->second;
    };

    struct FreshChoice {
        std::vector<ShapeSlot> slots;
        QPoly coeff;
    };
    std::map<int, std::vector<FreshChoice>> fresh_by_weight;
    auto fresh_for = [&](int w) -> const std::vector<FreshChoice>& {
        auto it = fresh_by_weight.find(w);
        if (it != fresh_by_weight.end()) return it->second;
        std::vector<std::vector<std::pair<int, int>>> sets;
        std::vector<std::pair<int, int>> cur;
        fresh_multisets(w, {1, 1}, cur, sets);
        std::vector<FreshChoice> choices;
        for (const auto& fs : sets) {
            std::map<int, int> per_size;
            std::map<std::pair<int, int>, int> identical;
            FreshChoice fc{{}, QPoly(1)};
            for (auto [size, k] : fs) {
                ++per_size[size];
                ++identical[{size, k}];
                fc.slots.push_back({size, Partition(std::vector<int>(k, 1))});
            }
            for (auto [size, j] : per_size) fc.coeff *= falling(available(size), j);
            if (mode == Mode::canonical) {
                Integer sym = 1;
                for (const auto& kv : identical)
                    for (int i = 2; i <= kv.second; ++i) sym *= i;
                fc.coeff *= QPoly(Rational(Integer(1), sym));
            }
            std::sort(fc.slots.begin(), fc.slots.end());
            choices.push_back(std::move(fc));
        }
        return fresh_by_weight.emplace(w, std::move(choices)).first->second;
    };

    std::map<Signature, QPoly> acc;
    std::vector<const Target*> pick(d.slots.size());
    std::function<void(size_t, int, int)> rec = [&](size_t i, int weight, int mult) {
        if (i == d.slots.size()) {
            Signature base;
            for (size_t k = 0; k < d.slots.size(); ++k)
                if (!pick[k]->mu.empty()) base.kept.emplace_back(d.slots[k].label.id, pick[k]->mu);
            std::sort(base.kept.begin(), base.kept.end());
            for (const auto& fc : fresh_for(m - weight)) {
                Signature sig = base;
                sig.fresh = fc.slots;
                auto [it, inserted] = acc.try_emplace(std::move(sig));
                it->second += QPoly(mult) * fc.coeff;
            }
            return;
        }
        int size = d.slots[i].label.size;
        for (const auto& t : opts[i]) {
            int w = weight + size * t.mu.size();
            if (w > m) continue;
            pick[i] = &t;
            rec(i + 1, w, mult * t.mult);
        }
    };
    rec(0, 0, 1);

    std::map<std::string, const ClassLabel*> by_id;
    for (const auto& s : d.slots) by_id[s.label.id] = &s.label;

    std::vector<BranchTerm> out;
    for (auto& [sig, coeff] : acc) {
        if (coeff.is_zero()) continue;
        BranchTerm t{coeff, {m, {}}};
        for (const auto& [id, mu] : sig.kept) t.datum.slots.push_back({*by_id.at(id), mu});
        int next = 0;
        for (const auto& fs : sig.fresh) {
            std::string id;
            do id = "b" + std::to_string(++next);
            while (used_ids.count(id));
            ClassLabel lab{id, fs.size, Origin::fresh, {}};
            for (const auto& s : d.slots)
                if (s.label.size == fs.size) lab.exclusions.push_back(s.label.id);
            std::sort(lab.exclusions.begin(), lab.exclusions.end());
            t.datum.slots.push_back({std::move(lab), fs.partition});
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace ugggr
