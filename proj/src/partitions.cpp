#include "ugggr/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ugggr {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    for (size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && p_[i] > p_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase_if(parts, [](int x) { return x <= 0; });
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

Partition transpose(const Partition& lam) {
    std::vector<int> t;
    for (int i = 1; i <= lam[0]; ++i) {
        int c = 0;
        for (int x : lam.parts()) c += x >= i;
        t.push_back(c);
    }
    return Partition(std::move(t));
}

Partition remove_columns(const Partition& lam, int j) {
    std::vector<int> r;
    for (int x : lam.parts())
        if (x > j) r.push_back(x - j);
    return Partition(std::move(r));
}

bool leq_parabolic(const Partition& lam, const Partition& mu) {
    int len = std::max(lam.length(), mu.length());
    int a = 0, b = 0;
    for (int i = 0; i < len; ++i) {
        a += lam[i];
        b += mu[i];
        if (a > b) return false;
    }
    return true;
}

bool two_transverse(const Partition& lam, const Partition& mu) {
    int len = std::max(lam.length(), mu.length());
    std::map<int, int> equal_rows;
    for (int i = 0; i < len; ++i) {
        if (std::abs(lam[i] - mu[i]) > 1) return false;
        if (lam[i] == mu[i] && lam[i] > 0) ++equal_rows[lam[i]];
    }
    return std::all_of(equal_rows.begin(), equal_rows.end(), [](auto& kv) { return kv.second % 2 == 0; });
}

bool vertical_strip(const Partition& lam, const Partition& mu) {
    int len = std::max(lam.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        int d = lam[i] - mu[i];
        if (d < 0 || d > 1) return false;
    }
    return true;
}

int vertical_strip_pairs(const Partition& lam, const Partition& mu) {
    int count = 0;
    for (const auto& nu : subpartitions(lam))
        if (vertical_strip(lam, nu) && vertical_strip(mu, nu)) ++count;
    return count;
}

std::vector<int> weights(const Partition& lam) {
    std::vector<int> w;
    for (int k : lam.parts())
        for (int x = k - 1; x >= -(k - 1); x -= 2) w.push_back(x);
    return w;
}

PartitionStats stats(const Partition& lam) {
    PartitionStats s;
    for (int i = 0; i < lam.length(); ++i) s.n_stat += i * lam[i];
    Partition t = transpose(lam);
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam[i]; ++j) s.hooks.push_back(lam[i] - j - 1 + t[j] - i - 1 + 1);
    std::sort(s.hooks.begin(), s.hooks.end(), std::greater<>());
    return s;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, cap); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> subpartitions(const Partition& lam) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int i) {
        if (i == lam.length()) {
            out.push_back(Partition::from_unsorted(cur));
            return;
        }
        int cap = i ? cur[i - 1] : lam[0];
        for (int x = std::min(cap, lam[i]); x >= 0; --x) {
            cur.push_back(x);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

bool is_hook(const Partition& lam) {
    for (int i = 1; i < lam.length(); ++i)
        if (lam[i] != 1) return false;
    return true;
}

static std::string joined(const Partition& lam, char open, char close) {
    std::string s(1, open);
    for (int i = 0; i < lam.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(lam[i]);
    }
    return s + close;
}

std::string to_string(const Partition& lam) { return joined(lam, '(', ')'); }

std::string to_json_string(const Partition& lam) { return joined(lam, '[', ']'); }

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition '" + text + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("bad partition '" + text + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

}  // namespace ugggr
