#pragma once

#include <type_traits>
#include <vector>

#include "malcev/lyndon.hpp"
#include "malcev/series.hpp"

namespace malcev {

// An element of 1 + m: a truncated series whose constant term is exactly 1.
// The group operations live below as free functions.
template <class K>
class GroupElement {
public:
    explicit GroupElement(TruncatedSeries<K> s) : s_(std::move(s)) {
        if (!s_.coeff(Word{}).is_one())
            throw NotGroupLike("constant term must be 1");
    }

    static GroupElement unit(int m, int N) {
        return GroupElement(TruncatedSeries<K>::unit(m, N));
    }

    int num_generators() const { return s_.num_generators(); }
    int truncation_order() const { return s_.truncation_order(); }
    const TruncatedSeries<K>& series() const { return s_; }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.s_ == b.s_;
    }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

private:
    TruncatedSeries<K> s_;
};

// exp(eps) = sum of eps^n / n!, finite under truncation.
template <class K>
GroupElement<K> exp(const TruncatedSeries<K>& eps) {
    if (!eps.coeff(Word{}).is_zero())
        throw ValuationZero("exp needs valuation >= 1");
    auto acc = TruncatedSeries<K>::unit(eps.num_generators(), eps.truncation_order());
    auto inc = TruncatedSeries<K>::unit(eps.num_generators(), eps.truncation_order());
    for (int i = 1; i <= eps.truncation_order() && !inc.is_zero(); ++i) {
        inc *= eps;
        inc /= Rational(i);
        acc += inc;
    }
    return GroupElement<K>(std::move(acc));
}

// log(1 + delta) = sum of (-1)^(n+1) delta^n / n.
template <class K>
TruncatedSeries<K> log(const GroupElement<K>& g) {
    auto delta = g.series() - TruncatedSeries<K>::unit(g.num_generators(), g.truncation_order());
    auto acc = TruncatedSeries<K>(g.num_generators(), g.truncation_order());
    auto power = TruncatedSeries<K>::unit(g.num_generators(), g.truncation_order());
    for (int n = 1; n <= g.truncation_order(); ++n) {
        power *= delta;
        if (power.is_zero()) break;
        auto term = power;
        term /= Rational(n % 2 ? n : -n);
        acc += term;
    }
    return acc;
}

template <class K>
GroupElement<K> group_mul(const GroupElement<K>& f, const GroupElement<K>& g) {
    return GroupElement<K>(f.series() * g.series());
}

// Geometric-series inverse: (1 + P)^-1 = 1 - P + P^2 - ...
template <class K>
GroupElement<K> group_inv(const GroupElement<K>& g) {
    auto p = g.series() - TruncatedSeries<K>::unit(g.num_generators(), g.truncation_order());
    auto acc = TruncatedSeries<K>::unit(g.num_generators(), g.truncation_order());
    auto power = TruncatedSeries<K>::unit(g.num_generators(), g.truncation_order());
    for (int n = 1; n <= g.truncation_order(); ++n) {
        power *= p;
        if (power.is_zero()) break;
        if (n % 2)
            acc -= power;
        else
            acc += power;
    }
    return GroupElement<K>(std::move(acc));
}

// g^lambda = exp(lambda log g); the scalar may be a polynomial in l, which
// is what the Hall-Petresco verification runs on.
template <class K>
GroupElement<K> group_power(const GroupElement<K>& g, const K& lambda) {
    auto l = log(g);
    l *= lambda;
    return exp(l);
}

template <class K>
    requires(!std::is_same_v<K, Rational>)
GroupElement<K> group_power(const GroupElement<K>& g, const Rational& lambda) {
    return group_power(g, K(lambda));
}

// The fixed commutator convention: [[f, g]] = f^-1 g^-1 f g.
template <class K>
GroupElement<K> group_commutator(const GroupElement<K>& f, const GroupElement<K>& g) {
    f.series().check_shape(g.series());
    return group_mul(group_mul(group_inv(f), group_inv(g)), group_mul(f, g));
}

// Evaluation of a non-associative word in the commutator monoid: leaves
// pick arguments, internal nodes take group commutators.
template <class K>
GroupElement<K> commutator_word_eval(const BracketedWord& t,
                                     const std::vector<GroupElement<K>>& args) {
    if (t.is_leaf()) {
        if (t.letter < 0 || t.letter >= static_cast<int>(args.size()))
            throw ArityMismatch("word letter outside argument tuple");
        return args[t.letter];
    }
    return group_commutator(commutator_word_eval(*t.left, args),
                            commutator_word_eval(*t.right, args));
}

// The BCH product a * b = log(exp a exp b), returned in Lyndon
// coordinates. The conversion doubles as a check that the result really is
// a Lie element; failure there is an engine bug, not a user error.
template <class K>
LieElement<K> bch(const TruncatedSeries<K>& a, const TruncatedSeries<K>& b) {
    a.check_shape(b);
    auto prod = group_mul(exp(a), exp(b));
    try {
        return series_to_lie(log(prod));
    } catch (const NotLieElement&) {
        throw std::logic_error("bch produced a non-Lie series");
    }
}

template <class K>
LieElement<K> bch(const LieElement<K>& a, const LieElement<K>& b) {
    a.check_shape(b);
    return bch(lie_to_series(a), lie_to_series(b));
}

}  // namespace malcev
