#pragma once

#include <vector>

#include "malcev/group.hpp"

namespace malcev {

// One factor of an ordered commutator-power decomposition: the Lyndon word
// naming the bracketed commutator, and its scalar exponent.
template <class K>
struct MlsFactor {
    Word word;
    K exponent;

    friend bool operator==(const MlsFactor& a, const MlsFactor& b) {
        return a.word == b.word && a.exponent == b.exponent;
    }
};

// Factors strictly increasing under graded-lex, no zero exponents; the
// unique normal form produced by collection.
template <class K>
using MlsDecomposition = std::vector<MlsFactor<K>>;

namespace detail {

template <class K>
GroupElement<K> commutator_factor(const Word& w, int m, int N) {
    std::vector<GroupElement<K>> exps;
    exps.reserve(m);
    for (int i = 0; i < m; ++i)
        exps.push_back(exp(TruncatedSeries<K>::generator(m, N, i)));
    return commutator_word_eval(*bracketing(w), exps);
}

}  // namespace detail

// Commutator collection: peel the graded-lex-minimal Lyndon coordinate of
// log Q, emit it with its coefficient, divide the corresponding commutator
// power off on the left, repeat. Each step strictly raises the minimal
// word, so the loop visits at most one factor per Lyndon word of degree
// <= N.
template <class K>
MlsDecomposition<K> collect(const GroupElement<K>& q) {
    const int m = q.num_generators(), n = q.truncation_order();
    MlsDecomposition<K> out;
    GroupElement<K> rest = q;
    while (rest != GroupElement<K>::unit(m, n)) {
        Word w;
        K lambda;
        try {
            auto p = series_to_lie(log(rest));
            w = p.coords().begin()->first;
            lambda = p.coords().begin()->second;
        } catch (const NotLieElement& e) {
            throw NotGroupLike(e.what());
        }
        if (!out.empty() && !GradedLexLess{}(out.back().word, w))
            throw std::logic_error("collection failed to make progress");
        out.push_back({w, lambda});
        auto factor = detail::commutator_factor<K>(w, m, n);
        rest = group_mul(group_power(factor, -lambda), rest);
    }
    return out;
}

// The ordered product the decomposition denotes, smallest word leftmost.
template <class K>
GroupElement<K> expand(const MlsDecomposition<K>& d, int m, int N) {
    auto acc = GroupElement<K>::unit(m, N);
    for (const auto& f : d) {
        for (Letter l : f.word)
            if (l < 0 || l >= m)
                throw ShapeMismatch("decomposition word " + word_str(f.word) +
                                    " outside alphabet of size " + std::to_string(m));
        if (degree(f.word) > N)
            throw ShapeMismatch("decomposition word " + word_str(f.word) +
                                " exceeds truncation " + std::to_string(N));
        acc = group_mul(acc, group_power(detail::commutator_factor<K>(f.word, m, N), f.exponent));
    }
    return acc;
}

// Collected form of exp(X0 + X1): the group-product normal form of a sum.
MlsDecomposition<Rational> mls_sum_formula(int N);

// Collected form of exp([X0, X1]): the group-commutator normal form of a
// bracket. Needs degree-2 room to say anything.
MlsDecomposition<Rational> mls_bracket_formula(int N);

}  // namespace malcev
