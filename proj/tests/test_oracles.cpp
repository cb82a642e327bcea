#include <doctest.h>

#include "malcev/oracles.hpp"
#include "malcev/rng.hpp"

using namespace malcev;

namespace {

using S = TruncatedSeries<Rational>;

}  // namespace

TEST_CASE("word ranks") {
    CHECK(oracle::word_rank(Word{}, 2) == 0);
    CHECK(oracle::word_rank(Word{1, 0, 1}, 2) == 5);
    CHECK(oracle::word_rank(Word{2, 1}, 3) == 7);
    CHECK(oracle::rank_word(5, 3, 2) == Word{1, 0, 1});
    for (int d = 0; d <= 4; ++d)
        for (long long r = 0; r < (1 << d); ++r)
            CHECK(oracle::word_rank(oracle::rank_word(r, d, 2), 2) == r);
}

TEST_CASE("dense arithmetic agrees with the sparse route") {
    Rng rng(99);
    for (int k = 0; k < 10; ++k) {
        auto a = rng.series(2, 4, 5);
        auto b = rng.series(2, 4, 5);
        auto da = oracle::dense_of_series(a), db = oracle::dense_of_series(b);
        CHECK(oracle::dense_equal(oracle::dense_of_series(a * b), oracle::dense_mul(da, db)));
        CHECK(oracle::dense_equal(oracle::dense_of_series(a + b), oracle::dense_add(da, db)));
        CHECK(oracle::dense_equal(oracle::dense_of_series(lie_bracket(a, b)),
                                  oracle::dense_bracket(da, db)));
    }
    for (int k = 0; k < 10; ++k) {
        auto eps = rng.proper_series(2, 4, 4);
        CHECK(oracle::dense_equal(oracle::dense_of_series(exp(eps).series()),
                                  oracle::dense_exp(oracle::dense_of_series(eps))));
        auto g = rng.unit_plus(2, 4, 4);
        CHECK(oracle::dense_equal(oracle::dense_of_series(log(g)),
                                  oracle::dense_log(oracle::dense_of_series(g.series()))));
    }
}

TEST_CASE("rotation lyndon test matches the suffix test") {
    for (int d = 1; d <= 6; ++d)
        for (const auto& w : oracle::all_words(2, d))
            CHECK(oracle::is_lyndon_rot(w) == is_lyndon(w));
    for (int d = 1; d <= 4; ++d)
        for (const auto& w : oracle::all_words(3, d))
            CHECK(oracle::is_lyndon_rot(w) == is_lyndon(w));
}

TEST_CASE("filtered enumeration matches successor enumeration") {
    CHECK(oracle::lyndon_by_filter(2, 6) == enumerate_lyndon(2, 6));
    CHECK(oracle::lyndon_by_filter(3, 5) == enumerate_lyndon(3, 5));
    CHECK(oracle::lyndon_by_filter(1, 4) == enumerate_lyndon(1, 4));
}

TEST_CASE("scan factorization matches the production loop") {
    for (const auto& w : enumerate_lyndon(2, 7)) {
        if (degree(w) < 2) continue;
        CHECK(oracle::factorization_by_scan(w) == standard_factorization(w));
    }
    for (const auto& w : enumerate_lyndon(3, 5)) {
        if (degree(w) < 2) continue;
        CHECK(oracle::factorization_by_scan(w) == standard_factorization(w));
    }
}

TEST_CASE("dense bracket expansion matches the series bracketing") {
    auto expansion = oracle::bracket_expansion(Word{0, 0, 1}, 2);
    CHECK(expansion[oracle::word_rank(Word{0, 0, 1}, 2)] == Rational(1));
    CHECK(expansion[oracle::word_rank(Word{0, 1, 0}, 2)] == Rational(-2));
    CHECK(expansion[oracle::word_rank(Word{1, 0, 0}, 2)] == Rational(1));
    for (const auto& w : enumerate_lyndon(2, 5)) {
        auto dense = oracle::bracket_expansion(w, 2);
        auto sparse = lyndon_bracket_series<Rational>(w, 2, degree(w));
        for (long long r = 0; r < static_cast<long long>(dense.size()); ++r)
            CHECK(dense[r] == sparse.coeff(oracle::rank_word(r, degree(w), 2)));
    }
}

TEST_CASE("linear lyndon coordinates match triangular elimination") {
    Rng rng(7);
    for (int k = 0; k < 10; ++k) {
        auto e = rng.lie(2, 4, 3);
        auto coords = oracle::lyndon_coordinates(oracle::dense_of_series(lie_to_series(e)));
        REQUIRE(coords.has_value());
        CHECK(*coords == e.coords());
    }
    // non-lie series have no coordinates
    auto bad = S::generator(2, 3, 0) * S::generator(2, 3, 1);
    CHECK_FALSE(oracle::lyndon_coordinates(oracle::dense_of_series(bad)).has_value());
    CHECK_FALSE(oracle::lyndon_coordinates(oracle::dense_of_series(S::unit(2, 3))).has_value());
}

TEST_CASE("dynkin criterion") {
    Rng rng(11);
    for (int k = 0; k < 10; ++k) {
        auto e = rng.lie(2, 4, 3);
        CHECK(oracle::dynkin_is_lie(lie_to_series(e)));
    }
    CHECK(oracle::dynkin_is_lie(S(2, 3)));
    CHECK_FALSE(oracle::dynkin_is_lie(S::generator(2, 3, 0) * S::generator(2, 3, 1)));
    CHECK_FALSE(oracle::dynkin_is_lie(S::unit(2, 3)));
    // symmetrized product of generators is not lie
    auto sym = S::generator(2, 2, 0) * S::generator(2, 2, 1) +
               S::generator(2, 2, 1) * S::generator(2, 2, 0);
    CHECK_FALSE(oracle::dynkin_is_lie(sym));
}

TEST_CASE("dense bch coordinates") {
    auto coords = oracle::bch_coordinates(4);
    CHECK(coords[Word{0}] == Rational(1));
    CHECK(coords[Word{1}] == Rational(1));
    CHECK(coords[Word{0, 1}] == Rational(1, 2));
    CHECK(coords[Word{0, 0, 1}] == Rational(1, 12));
    CHECK(coords[Word{0, 1, 1}] == Rational(1, 12));
    CHECK(coords[Word{0, 0, 1, 1}] == Rational(1, 24));
    CHECK(coords.size() == 6);
    // full agreement with the sparse engine
    auto prod = bch(S::generator(2, 4, 0), S::generator(2, 4, 1));
    CHECK(coords == prod.coords());
}

TEST_CASE("layered linear solver matches augmentation lifting") {
    auto h = SCLieAlgebra::heisenberg();
    auto t = term_to_lie(*parse_term("x0*x2*x1*x2"), 3, 2);
    std::vector<Vec> args{h.basis_vector(0), h.basis_vector(1)};
    auto direct = solve_equation(h, t, args);
    auto measured = oracle::solve_equation_linear(h, t, args);
    CHECK(direct == measured);
    CHECK(direct == Vec{Rational(-1, 2), Rational(-1, 2), Rational()});

    auto f23 = SCLieAlgebra::free_nilpotent(2, 3);
    auto u = term_to_lie(*parse_term("x0*2.x1"), 2, 3);
    std::vector<Vec> args2{vec_add(f23.basis_vector(0), f23.basis_vector(3))};
    CHECK(solve_equation(f23, u, args2) == oracle::solve_equation_linear(f23, u, args2));
}
