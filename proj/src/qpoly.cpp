#include "ugggr/qpoly.hpp"

#include <json.hpp>

#include <sstream>

namespace ugggr {

QPoly::QPoly(long long c) : c_{Rational(c)} { trim(); }

QPoly::QPoly(const Rational& c) : c_{c} { trim(); }

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long long> coeffs) {
    for (auto x : coeffs) c_.emplace_back(x);
    trim();
}

QPoly QPoly::monomial(const Rational& c, int deg) {
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Rational QPoly::eval(const Integer& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly operator-(QPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
}

QPoly arith(const QPoly& a, const QPoly& b, Op op) {
    switch (op) {
        case Op::add: return a + b;
        case Op::sub: return a - b;
        case Op::mul: return a * b;
    }
    return {};
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {QPoly(), a};
    std::vector<Rational> quo(a.degree() - db + 1);
    const Rational& lead = b.coeffs().back();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational t = rem[k + db] / lead;
        quo[k] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) rem[k + j] -= t * b.coeffs()[j];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly div_exact(const QPoly& a, const QPoly& b) {
    auto [quo, rem] = divmod(a, b);
    if (!rem.is_zero())
        throw NotDivisible("(" + render(a, Render::expanded) + ") is not divisible by (" +
                           render(b, Render::expanded) + ")");
    return quo;
}

QPoly pow(const QPoly& a, unsigned k) {
    QPoly r = 1, base = a;
    while (k) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

QPoly falling(const QPoly& x, int k) {
    QPoly r = 1;
    for (int i = 0; i < k; ++i) r *= x - QPoly(i);
    return r;
}

std::string to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

std::string magnitude(const Rational& m, bool latex) {
    auto num = boost::multiprecision::numerator(m);
    auto den = boost::multiprecision::denominator(m);
    if (den == 1) return num.str();
    if (latex) return "\\frac{" + num.str() + "}{" + den.str() + "}";
    return num.str() + "/" + den.str();
}

std::string power(int k, bool latex) {
    if (k == 1) return "q";
    if (latex) return "q^{" + std::to_string(k) + "}";
    return "q^" + std::to_string(k);
}

std::string infix(const QPoly& a, bool latex) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = a.degree(); k >= 0; --k) {
        const Rational& c = a.coeffs()[k];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational m = neg ? Rational(-c) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (k == 0) {
            out += magnitude(m, latex);
            continue;
        }
        if (m != 1) {
            bool frac = boost::multiprecision::denominator(m) != 1;
            if (frac && !latex)
                out += "(" + magnitude(m, latex) + ")";
            else
                out += magnitude(m, latex);
        }
        out += power(k, latex);
    }
    return out;
}

}  // namespace

std::string render(const QPoly& a, Render fmt) {
    switch (fmt) {
        case Render::expanded: return infix(a, false);
        case Render::latex: return infix(a, true);
        case Render::coeff_json: {
            std::string out = "[";
            for (size_t i = 0; i < a.coeffs().size(); ++i) {
                if (i) out += ",";
                const Rational& c = a.coeffs()[i];
                if (boost::multiprecision::denominator(c) == 1)
                    out += to_string(c);
                else
                    out += "\"" + to_string(c) + "\"";
            }
            return out + "]";
        }
    }
    return {};
}

QPoly parse_coeff_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("coefficient list must be a JSON array");
    std::vector<Rational> c;
    for (const auto& e : j) {
        if (e.is_number_integer()) {
            c.emplace_back(e.get<long long>());
        } else if (e.is_string()) {
            c.emplace_back(Rational(e.get<std::string>()));
        } else {
            throw std::invalid_argument("bad coefficient: " + e.dump());
        }
    }
    return QPoly(std::move(c));
}

}  // namespace ugggr
