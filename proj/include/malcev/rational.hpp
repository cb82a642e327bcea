#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <utility>

#include "malcev/errors.hpp"

namespace malcev {

// Exact arbitrary-precision rational. Always normalized: lowest terms,
// positive denominator, zero stored as 0/1 (the boost backend maintains
// this invariant on every operation).
class Rational {
public:
    using Backend = boost::multiprecision::cpp_rational;
    using Int = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(long long n) : v_(n) {}
    Rational(long long num, long long den);
    explicit Rational(Backend v) : v_(std::move(v)) {}

    // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(const std::string& text);
    // C(n, k) as an exact integer; zero for k < 0 or k > n.
    static Rational binomial(long long n, long long k);

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    int sign() const { return v_.sign(); }

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const { return Rational(Backend(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "p" for integers, "p/q" otherwise; the canonical emission format.
    std::string str() const;

    const Backend& raw() const { return v_; }

private:
    Backend v_{};
};

}  // namespace malcev
