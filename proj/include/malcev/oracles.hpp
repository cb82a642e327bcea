#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "malcev/models.hpp"

// Second, deliberately different implementations of the core computations,
// used to cross-check the production routes. Polynomials are dense vectors
// indexed by word rank instead of sparse maps, Lyndon words come from a
// filtered odometer instead of successor stepping, Lie membership and
// coordinates come from linear algebra and the Dynkin criterion instead of
// triangular elimination, and equations are solved against a measured
// difference system instead of augmentation lifting. Keep both routes
// intact: their agreement is the point.
namespace malcev::oracle {

// Truncated polynomial on m letters, one dense coefficient vector per
// degree; component d has length m^d and index sum_k w_k m^{d-1-k}.
struct Dense {
    int m = 0;
    std::vector<std::vector<Rational>> comps;

    int truncation_order() const { return static_cast<int>(comps.size()) - 1; }
};

long long word_rank(const Word& w, int m);
Word rank_word(long long r, int d, int m);

Dense dense_zero(int m, int N);
Dense dense_unit(int m, int N);
Dense dense_generator(int m, int N, int i);
Dense dense_add(Dense a, const Dense& b);
Dense dense_sub(Dense a, const Dense& b);
Dense dense_scale(const Rational& c, Dense a);
Dense dense_mul(const Dense& a, const Dense& b);
Dense dense_bracket(const Dense& a, const Dense& b);
Dense dense_exp(const Dense& a);
Dense dense_log(const Dense& a);
bool dense_equal(const Dense& a, const Dense& b);

Dense dense_of_series(const TruncatedSeries<Rational>& s);

// Lyndon words characterized as strictly smaller than every nontrivial
// rotation; enumeration filters all words degree by degree.
bool is_lyndon_rot(const Word& w);
std::vector<Word> all_words(int m, int d);
std::vector<Word> lyndon_by_filter(int m, int N);

// Standard factorization found by scanning every proper suffix for the
// lexicographically smallest one.
std::pair<Word, Word> factorization_by_scan(const Word& w);

// Degree-homogeneous dense expansion (length m^|w|) of the bracketing of
// a Lyndon word, built by the scan factorization.
std::vector<Rational> bracket_expansion(const Word& w, int m);

// Per-degree linear solve of the coefficient vector against the bracket
// expansions of Lyndon words; nothing when some component is outside the
// span or the constant term is nonzero.
std::optional<std::map<Word, Rational, GradedLexLess>> lyndon_coordinates(const Dense& s);

// Dynkin criterion: left-normed bracketing acts on a homogeneous Lie
// component of degree d as multiplication by d.
bool dynkin_is_lie(const TruncatedSeries<Rational>& s);

// log(exp(x0) exp(x1)) in two letters by the dense route end to end.
std::map<Word, Rational, GradedLexLess> bch_coordinates(int N);

// t(args, f) = 0 solved depth by depth through a measured linear system:
// the effect of perturbing f by each layer basis vector is evaluated
// directly and the layer component of the residual is solved against
// those columns.
Vec solve_equation_linear(const SCLieAlgebra& a, const LieElement<Rational>& t,
                          const std::vector<Vec>& args);

}  // namespace malcev::oracle
