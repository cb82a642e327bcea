#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "malcev/collect.hpp"
#include "malcev/linalg.hpp"
#include "malcev/term.hpp"

namespace malcev {

// A finite-dimensional nilpotent Lie algebra over Q given by structure
// constants on a fixed basis. Construction validates antisymmetry shape,
// the Jacobi identity on basis triples, and nilpotency; the lower central
// series, its adapted layer bases, and the BCH element at the nilpotency
// class are computed eagerly, so instances are immutable afterwards and
// safe to share across threads.
class SCLieAlgebra {
public:
    using BracketTable = std::map<std::pair<int, int>, Vec>;  // keys i < j

    SCLieAlgebra(int dim, std::vector<std::string> labels, const BracketTable& brackets);

    static SCLieAlgebra abelian(int d);
    static SCLieAlgebra heisenberg();
    // Free nilpotent algebra of the given class on m generators; basis =
    // Lyndon words of degree <= c in graded-lex order, brackets computed
    // through the series realization.
    static SCLieAlgebra free_nilpotent(int m, int c);

    int dimension() const { return dim_; }
    int nilpotency_class() const { return class_; }
    const std::vector<std::string>& labels() const { return labels_; }

    Vec basis_vector(int i) const;
    const Vec& basis_bracket(int i, int j) const { return table_[i][j]; }
    Vec bracket(const Vec& a, const Vec& b) const;

    // [A_1, A_2, ..., A_{c+1}] as canonical rref bases; the last is empty.
    const std::vector<Mat>& lower_central_series() const { return lcs_; }
    // Per-depth complements: layer d spans A_d modulo A_{d+1}.
    const std::vector<Mat>& adapted() const { return adapted_; }
    // bch(X0, X1) truncated at the class; the multiplication table of Gr.
    const LieElement<Rational>& bch_element() const { return bch_; }

    // Structure equality: same dimension and the same bracket table.
    friend bool operator==(const SCLieAlgebra& a, const SCLieAlgebra& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }
    friend bool operator!=(const SCLieAlgebra& a, const SCLieAlgebra& b) { return !(a == b); }

private:
    int dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Vec>> table_;  // full antisymmetric table
    std::vector<Mat> lcs_;
    std::vector<Mat> adapted_;
    int class_ = 0;
    LieElement<Rational> bch_{2, 1};
};

// Evaluation of a Lie element into a model: formal brackets become basis
// brackets. Requires the element's truncation to dominate the class, so
// nothing the model could see is cut off.
Vec evaluate_lie(const SCLieAlgebra& a, const LieElement<Rational>& e,
                 const std::vector<Vec>& args);
Vec evaluate_lie(const SCLieAlgebra& a, const TruncatedSeries<Rational>& p,
                 const std::vector<Vec>& args);

// The group Gr(A) on the same carrier: x * y = bch evaluated at (x, y),
// powers are scalar multiples, commutators are x^-1 y^-1 x y in *.
Vec gr_mul(const SCLieAlgebra& a, const Vec& x, const Vec& y);
Vec gr_power(const SCLieAlgebra& a, const Vec& x, const Rational& lambda);
Vec gr_commutator(const SCLieAlgebra& a, const Vec& x, const Vec& y);

// Evaluation of mixed terms and group words with model vectors as
// variables.
Vec evaluate_term(const SCLieAlgebra& a, const MixedTerm& t, const std::vector<Vec>& args);
Vec evaluate_group_word(const SCLieAlgebra& a, const GroupWord& w, const std::vector<Vec>& args);

// Rebuild addition and bracket from the group operations alone via the
// collected formulas for exp(X0+X1) and exp([X0,X1]), read off the
// structure constants, and require exact agreement with the input.
SCLieAlgebra lie_from_group_ops(const SCLieAlgebra& a);

// Lower central series of Gr(A): iterated commutator spans saturated to
// ideals, checked against the Lie lower central series.
std::vector<Mat> group_lcs(const SCLieAlgebra& a);

// Coefficient of the single-letter word in the last generator: the image
// of t in the abelianization with all parameters killed.
Rational augmentation(const LieElement<Rational>& t);

// The unique f with t(args, f) = 0 for non-singular t, found by filtration
// lifting: at each depth the layer component of the residual is divided by
// the augmentation and multiplied onto f.
Vec solve_equation(const SCLieAlgebra& a, const LieElement<Rational>& t,
                   const std::vector<Vec>& args);

// g_1 f^{l_1} ... g_n f^{l_n} = 1 compiled to a mixed term and routed
// through solve_equation; the recomputed residual is asserted to be the
// unit.
Vec solve_group_equation(const SCLieAlgebra& a, const std::vector<Vec>& gs,
                         const std::vector<Rational>& lambdas);

}  // namespace malcev
