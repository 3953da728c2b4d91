#pragma once

#include "ugggr/classes.hpp"
#include "ugggr/partitions.hpp"
#include "ugggr/qpoly.hpp"

#include <compare>
#include <string>
#include <vector>

namespace ugggr {

struct Slot {
    ClassLabel label;
    Partition partition;

    bool operator==(const Slot&) const = default;
};

// An irreducible representation of U_n: partitions attached to distinct classes,
// with sum of size * |partition| equal to n.
struct LusztigDatum {
    int n = 0;
    std::vector<Slot> slots;

    bool operator==(const LusztigDatum&) const = default;
};

// Throws std::invalid_argument when the weight identity or label rules fail.
void validate(const LusztigDatum& d);

struct ShapeSlot {
    int size = 1;
    Partition partition;

    auto operator<=>(const ShapeSlot&) const = default;
};

// A datum with class identities forgotten. Slots are kept in display order:
// size descending, then |partition| ascending, then partition ascending.
struct FamilyShape {
    int n = 0;
    std::vector<ShapeSlot> slots;

    auto operator<=>(const FamilyShape&) const = default;
};

FamilyShape make_shape(std::vector<ShapeSlot> slots);
FamilyShape shape_of(const LusztigDatum& d);
// Labels a1, a2, ... assigned in slot order.
LusztigDatum representative(const FamilyShape& s);

std::vector<FamilyShape> enumerate_families(int n);
QPoly family_cardinality(const FamilyShape& s, Mode mode);

QPoly generic_degree(ClassKind kind, const Partition& lam);
QPoly dimension(const FamilyShape& s);

// q^{n(n-1)/2} * prod (q^i - (-1)^i)
QPoly unitary_order(int n);
QPoly unitary_order_ppart(int n);

// Letter names for n = 2 and n = 4 (e.g. "I[(2,1,1)]", "C'"), otherwise "{1:(2,1);2:(1)}".
std::string display_name(const FamilyShape& s);
// Coarse case: multiset of (size, |partition|).
std::vector<std::pair<int, int>> coarse_case(const FamilyShape& s);

}  // namespace ugggr
