#pragma once

#include "ugggr/qpoly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ugggr {

// canonical: classes counted as Frobenius orbits, unordered choices.
// paper: N_1 = q-1, N_2 = q^2-1, ordered choices, 2-transverse rule on every class.
enum class Mode { canonical, paper };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

struct UnsupportedMode : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class GroupFamily { unitary, general_linear };

// Centralizer factor attached to a class of size d. The family is a function of d.
class ClassKind {
public:
    explicit ClassKind(int size);
    int size() const { return d_; }
    GroupFamily family() const { return d_ % 2 ? GroupFamily::unitary : GroupFamily::general_linear; }

private:
    int d_;
};

enum class Origin { original, fresh };

struct ClassLabel {
    std::string id;
    int size = 1;
    Origin origin = Origin::original;
    std::vector<std::string> exclusions;  // ids of same-size labels this one differs from

    bool operator==(const ClassLabel&) const = default;
};

int mobius(int n);

// q^d - (-1)^d
QPoly m_count(int d);
// Number of classes of size d.
QPoly n_count(int d, Mode mode);
QPoly centralizer_order_ppart(ClassKind kind, int nu);

}  // namespace ugggr
