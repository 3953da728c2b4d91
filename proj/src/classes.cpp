#include "ugggr/classes.hpp"

namespace ugggr {

std::string to_string(Mode m) { return m == Mode::canonical ? "canonical" : "paper"; }

Mode parse_mode(const std::string& s) {
    if (s == "canonical") return Mode::canonical;
    if (s == "paper") return Mode::paper;
    throw std::invalid_argument("unknown mode '" + s + "' (expected canonical or paper)");
}

ClassKind::ClassKind(int size) : d_(size) {
    if (size < 1) throw std::invalid_argument("class size must be positive");
}

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

QPoly m_count(int d) { return QPoly::monomial(1, d) - QPoly(d % 2 ? -1 : 1); }

QPoly n_count(int d, Mode mode) {
    if (d < 1) throw std::invalid_argument("class size must be positive");
    if (mode == Mode::paper) {
        if (d == 1) return QPoly{-1, 1};
        if (d == 2) return QPoly{-1, 0, 1};
        throw UnsupportedMode("paper mode defines class counts only for sizes 1 and 2 (got " +
                              std::to_string(d) + ")");
    }
    QPoly s;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0) s += QPoly(mobius(d / e)) * m_count(e);
    return s * QPoly(Rational(1, d));
}

QPoly centralizer_order_ppart(ClassKind kind, int nu) {
    QPoly r = 1;
    int d = kind.size();
    bool unitary = kind.family() == GroupFamily::unitary;
    for (int i = 1; i <= nu; ++i) {
        int sign = unitary && i % 2 ? -1 : 1;
        r *= QPoly::monomial(1, d * i) - QPoly(sign);
    }
    return r;
}

}  // namespace ugggr
