#pragma once

#include <string>
#include <vector>

#include "malcev/rational.hpp"

namespace malcev {

// Univariate polynomial in one indeterminate "l" with Rational coefficients.
// Coefficient list never has trailing zeros; the zero polynomial is the
// empty list. Division is provided only by nonzero rationals, which is all
// the exponential/logarithm series ever need.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c);
    UniPoly(long long c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly variable();  // the polynomial l
    // Accepts sums of terms "c", "c*l", "c*l^k", "l", "-l^k", joined by '+'
    // (negative coefficients carry their sign inside the term). Whitespace
    // is ignored.
    static UniPoly parse(const std::string& text);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int i) const;
    // Constant term; for is_constant() polynomials this is the whole value.
    Rational constant_value() const { return coeff(0); }

    Rational eval(const Rational& x) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);
    UniPoly& operator/=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator/(UniPoly a, const Rational& c) { return a /= c; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Increasing-degree emission "c0 + c1*l + c2*l^2"; zero terms skipped,
    // zero polynomial prints "0". With compact=true no spaces are emitted.
    std::string str(bool compact = false) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace malcev
