#include <doctest.h>

#include "malcev/term.hpp"

using namespace malcev;

namespace {

using L = LieElement<Rational>;

}  // namespace

TEST_CASE("term parsing and printing") {
    auto t = parse_term("x0*x1");
    CHECK(t->kind == MixedTerm::Kind::GroupMul);
    CHECK(t->max_variable() == 1);
    CHECK(term_str(*t) == "(x0 * x1)");
    CHECK(term_str(*parse_term(" [ x0 , x1 ] ")) == "[x0, x1]");
    CHECK(term_str(*parse_term("x0+x1+x2")) == "((x0 + x1) + x2)");
    CHECK(parse_term("0")->kind == MixedTerm::Kind::Zero);
    CHECK(parse_term("x3")->max_variable() == 3);
    CHECK(parse_term("0")->max_variable() == -1);
    auto s = parse_term("1/2.x0");
    CHECK(s->kind == MixedTerm::Kind::Scale);
    CHECK(s->scalar == Rational(1, 2));
    auto neg = parse_term("-x0");
    CHECK(neg->kind == MixedTerm::Kind::Scale);
    CHECK(neg->scalar == Rational(-1));
    // the printer's output reparses to the same print
    for (const char* src : {"x0*x1", "[x0,[x1,x2]]", "x0+-1/2.x1", "(x0+x1)*x2", "2.[x0,x1]"}) {
        auto u = parse_term(src);
        CHECK(term_str(*parse_term(term_str(*u))) == term_str(*u));
    }
    CHECK_THROWS_AS(parse_term(""), ParseError);
    CHECK_THROWS_AS(parse_term("x"), ParseError);
    CHECK_THROWS_AS(parse_term("[x0]"), ParseError);
    CHECK_THROWS_AS(parse_term("x0*"), ParseError);
    CHECK_THROWS_AS(parse_term("x0)"), ParseError);
    CHECK_THROWS_AS(parse_term("5"), ParseError);
}

TEST_CASE("hat map structural cases") {
    int m = 2, N = 3;
    CHECK(term_to_lie(*parse_term("x0"), m, N) == L::generator(m, N, 0));
    CHECK(term_to_lie(*parse_term("0"), m, N).is_zero());
    CHECK(term_to_lie(*parse_term("x0+x1"), m, N) ==
          L::generator(m, N, 0) + L::generator(m, N, 1));
    CHECK(term_to_lie(*parse_term("[x0,x1]"), m, N) ==
          lie_bracket(L::generator(m, N, 0), L::generator(m, N, 1)));
    CHECK(term_to_lie(*parse_term("3/2.x1"), m, N) == L::generator(m, N, 1) * Rational(3, 2));
    // group multiplication reads as bch
    CHECK(term_to_lie(*parse_term("x0*x1"), m, N) ==
          bch(L::generator(m, N, 0), L::generator(m, N, 1)));
    CHECK(term_to_lie(*parse_term("x0*(-x0)"), m, N).is_zero());
    CHECK_THROWS_AS(term_to_lie(*parse_term("x2"), m, N), ArityMismatch);
}

TEST_CASE("group word printing") {
    CHECK(group_word_str(*GroupWord::unit()) == "1");
    CHECK(group_word_str(*GroupWord::variable(2)) == "x2");
    auto w = GroupWord::mul(GroupWord::variable(0),
                            GroupWord::power(GroupWord::comm(GroupWord::variable(0),
                                                             GroupWord::variable(1)),
                                             Rational(-1, 2)));
    CHECK(group_word_str(*w) == "x0*comm(x0,x1)^(-1/2)");
    CHECK(group_word_str(*GroupWord::inv(GroupWord::variable(1))) == "x1^(-1)");
    auto nested = GroupWord::power(GroupWord::mul(GroupWord::variable(0), GroupWord::variable(1)),
                                   Rational(3));
    CHECK(group_word_str(*nested) == "(x0*x1)^(3)");
}

TEST_CASE("decompositions become group words") {
    MlsDecomposition<Rational> d{{Word{0}, Rational(1)},
                                 {Word{1}, Rational(1)},
                                 {Word{0, 1}, Rational(-1, 2)}};
    CHECK(group_word_str(*decomposition_group_word(d)) == "x0*x1*comm(x0,x1)^(-1/2)");
    CHECK(group_word_str(*decomposition_group_word({})) == "1");
    MlsDecomposition<Rational> deep{{Word{0, 0, 1}, Rational(2)}};
    CHECK(group_word_str(*decomposition_group_word(deep)) == "comm(x0,comm(x0,x1))^(2)");
}

TEST_CASE("truncated normal forms for nilpotent models") {
    auto prod = parse_term("x0*x1");
    auto [lie2, word2] = lie_term_truncations(*prod, 2, 2);
    CHECK(lie2 == term_to_lie(*prod, 2, 1));
    CHECK(lie2.coeff(Word{0}) == Rational(1));
    CHECK(lie2.coeff(Word{1}) == Rational(1));
    CHECK(group_word_str(*word2) == "x0*x1");
    // exp(bch(x0, x1)) collects back to the plain product
    auto [lie3, word3] = lie_term_truncations(*prod, 2, 3);
    CHECK(lie3.coeff(Word{0, 1}) == Rational(1, 2));
    CHECK(group_word_str(*word3) == "x0*x1");
    // the sum needs a commutator correction in class 3
    auto sum = parse_term("x0+x1");
    auto [lie_sum, word_sum] = lie_term_truncations(*sum, 2, 3);
    CHECK(lie_sum == term_to_lie(*sum, 2, 2));
    CHECK(group_word_str(*word_sum) == "x0*x1*comm(x0,x1)^(-1/2)");
    // class 1: everything is abelian
    auto [lie1, word1] = lie_term_truncations(*parse_term("[x0,x1]"), 2, 1);
    CHECK(lie1.is_zero());
    CHECK(group_word_str(*word1) == "1");
}

TEST_CASE("group word evaluation matches the series route") {
    using S = TruncatedSeries<Rational>;
    using G = GroupElement<Rational>;
    std::vector<G> args{exp(S::generator(2, 3, 0)), exp(S::generator(2, 3, 1))};
    auto q = group_mul(args[0], args[1]);
    auto d = collect(q);
    auto w = decomposition_group_word(d);
    CHECK(eval_group_word(*w, args) == q);
    CHECK(eval_group_word(*GroupWord::unit(), args) == G::unit(2, 3));
    CHECK_THROWS_AS(eval_group_word(*GroupWord::variable(5), args), ArityMismatch);
    CHECK_THROWS_AS(eval_group_word(*GroupWord::unit(), std::vector<G>{}), ArityMismatch);
}

TEST_CASE("mixed term evaluation with lie arguments") {
    int m = 2, N = 3;
    std::vector<L> args{L::generator(m, N, 0), L::generator(m, N, 1)};
    auto t = parse_term("x0*x1");
    CHECK(eval_term_lie(*t, args) == term_to_lie(*t, m, N));
    // substituting non-generators
    std::vector<L> swapped{args[1], args[0]};
    CHECK(eval_term_lie(*t, swapped) == bch(args[1], args[0]));
    CHECK_THROWS_AS(eval_term_lie(*parse_term("x2"), args), ArityMismatch);
}
