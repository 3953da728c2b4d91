#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace ugggr {

// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    // Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);
    // Sorts and drops zeros.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return p_; }
    int length() const { return static_cast<int>(p_.size()); }
    int size() const;
    bool empty() const { return p_.empty(); }
    // Zero beyond the last part.
    int operator[](int i) const { return i < length() ? p_[i] : 0; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> p_;
};

Partition transpose(const Partition& lam);
Partition remove_columns(const Partition& lam, int j);
bool leq_parabolic(const Partition& lam, const Partition& mu);
bool two_transverse(const Partition& lam, const Partition& mu);
// mu contained in lam with at most one cell removed per row.
bool vertical_strip(const Partition& lam, const Partition& mu);
// Number of nu with lam/nu and mu/nu both vertical strips.
int vertical_strip_pairs(const Partition& lam, const Partition& mu);

std::vector<int> weights(const Partition& lam);

struct PartitionStats {
    int n_stat = 0;
    std::vector<int> hooks;  // sorted descending
};
PartitionStats stats(const Partition& lam);

// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);
// Partitions nu contained in lam (all sizes).
std::vector<Partition> subpartitions(const Partition& lam);

bool is_hook(const Partition& lam);

// (2,1,1)
std::string to_string(const Partition& lam);
// [2,1,1]
std::string to_json_string(const Partition& lam);
// "2,1,1"; throws std::invalid_argument on malformed input.
Partition parse_partition(const std::string& text);

}  // namespace ugggr
