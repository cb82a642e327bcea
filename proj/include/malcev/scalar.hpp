#pragma once

#include <string>

#include "malcev/rational.hpp"
#include "malcev/unipoly.hpp"

namespace malcev {

// The scalar rings the engine is instantiated at. Both are exact unital
// commutative Q-algebras: default construction gives zero, construction
// from Rational embeds Q, operators +,-,* are ring operations, and
// division by a nonzero Rational is total. Generic code relies only on
// that shared surface.

template <class K>
inline std::string scalar_str(const K& x, bool compact = false);

template <>
inline std::string scalar_str<Rational>(const Rational& x, bool) {
    return x.str();
}

template <>
inline std::string scalar_str<UniPoly>(const UniPoly& x, bool compact) {
    return x.str(compact);
}

template <class K>
inline K scalar_parse(const std::string& text);

template <>
inline Rational scalar_parse<Rational>(const std::string& text) {
    return Rational::parse(text);
}

template <>
inline UniPoly scalar_parse<UniPoly>(const std::string& text) {
    return UniPoly::parse(text);
}

template <class K>
inline constexpr const char* scalar_name();

template <>
inline constexpr const char* scalar_name<Rational>() { return "rational"; }

template <>
inline constexpr const char* scalar_name<UniPoly>() { return "polynomial"; }

// lambda(lambda-1)...(lambda-i+1)/i!, the polynomial binomial coefficient
// appearing as a Hall-Petresco exponent; binomial_poly(0) = 1.
inline UniPoly binomial_poly(int i) {
    UniPoly out{Rational(1)};
    Rational factorial(1);
    for (int j = 0; j < i; ++j) {
        out *= UniPoly(std::vector<Rational>{Rational(-j), Rational(1)});
        factorial *= Rational(j + 1);
    }
    out /= factorial;
    return out;
}

}  // namespace malcev
