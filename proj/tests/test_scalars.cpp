#include <doctest.h>

#include "malcev/scalar.hpp"

using namespace malcev;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 5) == Rational());
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational());
    CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(7, 3).inverse() == Rational(3, 7));
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational().inverse(), DivisionByZero);
}

TEST_CASE("rational predicates and order") {
    CHECK(Rational().is_zero());
    CHECK(Rational(1).is_one());
    CHECK_FALSE(Rational(2).is_one());
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational().sign() == 0);
    CHECK(Rational(5).is_integer());
    CHECK_FALSE(Rational(5, 2).is_integer());
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
}

TEST_CASE("rational parse and str round-trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse(" 7 ") == Rational(7));
    CHECK(Rational::parse("-0") == Rational());
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational().str() == "0");
    CHECK(Rational::parse(Rational(22, 7).str()) == Rational(22, 7));
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("integer binomials") {
    CHECK(Rational::binomial(4, 2) == Rational(6));
    CHECK(Rational::binomial(5, 0) == Rational(1));
    CHECK(Rational::binomial(5, 5) == Rational(1));
    CHECK(Rational::binomial(3, 5) == Rational());
    CHECK(Rational::binomial(3, -1) == Rational());
    CHECK(Rational::binomial(10, 3) == Rational(120));
}

TEST_CASE("unipoly arithmetic and evaluation") {
    UniPoly l = UniPoly::variable();
    UniPoly p = l * l + l * Rational(2) + UniPoly(1);  // (l+1)^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(3)) == Rational(16));
    CHECK(p.coeff(1) == Rational(2));
    CHECK(p.coeff(5) == Rational());
    CHECK((p - p).is_zero());
    CHECK((l - l).degree() == -1);
    CHECK(UniPoly(Rational(1)).is_one());
    CHECK(UniPoly(Rational(2, 3)).is_constant());
    CHECK_FALSE(l.is_constant());
    CHECK(UniPoly(Rational(2, 3)).constant_value() == Rational(2, 3));
    CHECK((l * l) / Rational(2) == UniPoly(std::vector<Rational>{Rational(), Rational(), Rational(1, 2)}));
    CHECK_THROWS_AS(l / Rational(0), DivisionByZero);
}

TEST_CASE("unipoly parse and str") {
    UniPoly l = UniPoly::variable();
    CHECK(UniPoly::parse("l") == l);
    CHECK(UniPoly::parse("-l^2") == -(l * l));
    CHECK(UniPoly::parse("1/2*l") == l / Rational(2));
    CHECK(UniPoly::parse("3") == UniPoly(3));
    CHECK(UniPoly::parse("1 + -1/2*l + l^3") ==
          UniPoly(std::vector<Rational>{Rational(1), Rational(-1, 2), Rational(), Rational(1)}));
    UniPoly p = UniPoly(std::vector<Rational>{Rational(1), Rational(-1, 2), Rational(), Rational(1)});
    CHECK(p.str() == "1 + -1/2*l + l^3");
    CHECK(p.str(true) == "1+-1/2*l+l^3");
    CHECK(UniPoly::parse(p.str()) == p);
    CHECK(UniPoly::parse(p.str(true)) == p);
    CHECK(UniPoly().str() == "0");
    CHECK(UniPoly::parse("0").is_zero());
    CHECK_THROWS_AS(UniPoly::parse("l^"), ParseError);
    CHECK_THROWS_AS(UniPoly::parse("q"), ParseError);
}

TEST_CASE("polynomial binomial coefficients") {
    CHECK(binomial_poly(0) == UniPoly(1));
    CHECK(binomial_poly(1) == UniPoly::variable());
    // l(l-1)/2
    CHECK(binomial_poly(2) ==
          UniPoly(std::vector<Rational>{Rational(), Rational(-1, 2), Rational(1, 2)}));
    // Specializing at integers recovers the integer binomials.
    for (int i = 0; i <= 4; ++i)
        for (int n = 0; n <= 6; ++n)
            CHECK(binomial_poly(i).eval(Rational(n)) == Rational::binomial(n, i));
}

TEST_CASE("scalar trait surface") {
    CHECK(std::string(scalar_name<Rational>()) == "rational");
    CHECK(std::string(scalar_name<UniPoly>()) == "polynomial");
    CHECK(scalar_parse<Rational>("5/3") == Rational(5, 3));
    CHECK(scalar_str<Rational>(Rational(5, 3)) == "5/3");
    CHECK(scalar_parse<UniPoly>("1+l") == UniPoly(std::vector<Rational>{Rational(1), Rational(1)}));
    CHECK(scalar_str<UniPoly>(UniPoly::variable(), true) == "l");
}
