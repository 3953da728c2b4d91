#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ugggr {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct NotDivisible : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Render { expanded, latex, coeff_json };

// Dense univariate polynomial in q over the rationals.
// coeffs()[i] is the coefficient of q^i; the top coefficient is never zero.
class QPoly {
public:
    QPoly() = default;
    QPoly(long long c);  // NOLINT: integers promote implicitly
    QPoly(const Rational& c);  // NOLINT
    explicit QPoly(std::vector<Rational> coeffs);
    QPoly(std::initializer_list<long long> coeffs);

    static QPoly q() { return monomial(1, 1); }
    static QPoly monomial(const Rational& c, int deg);

    const std::vector<Rational>& coeffs() const { return c_; }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational coeff(int i) const;

    Rational eval(const Integer& x) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator-(QPoly a);
    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

enum class Op { add, sub, mul };
QPoly arith(const QPoly& a, const QPoly& b, Op op);

// Quotient and remainder of polynomial long division; b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
// Throws NotDivisible when b does not divide a.
QPoly div_exact(const QPoly& a, const QPoly& b);

QPoly pow(const QPoly& a, unsigned k);
// x (x-1) ... (x-k+1)
QPoly falling(const QPoly& x, int k);

std::string render(const QPoly& a, Render fmt);
std::string to_string(const Rational& r);
// Parses the coeff-json form produced by render(); accepts numbers or "p/q" strings.
QPoly parse_coeff_json(const std::string& text);

}  // namespace ugggr
