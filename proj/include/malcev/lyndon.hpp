#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "malcev/series.hpp"

namespace malcev {

// True iff w is strictly lex-smaller than every proper right factor
// (with the prefix-smaller convention for words of unequal length).
bool is_lyndon(const Word& w);  // EmptyWord on the unit

// All Lyndon words over 0..m-1 of degree <= max_degree, in graded-lex
// order. Duval successor generation; the brute-force filter lives with the
// test oracles.
std::vector<Word> enumerate_lyndon(int m, int max_degree);

// The split w = uv with v the longest proper Lyndon right factor; both
// halves are Lyndon. SingleLetter when there is nothing to split.
std::pair<Word, Word> standard_factorization(const Word& w);

// Binary bracketing tree; leaves carry generator indices. Immutable and
// shared freely.
struct BracketedWord {
    using Ptr = std::shared_ptr<const BracketedWord>;

    Letter letter = -1;  // valid at leaves only
    Ptr left, right;

    bool is_leaf() const { return !left; }

    static Ptr leaf(Letter l) {
        auto n = std::make_shared<BracketedWord>();
        n->letter = l;
        return n;
    }
    static Ptr node(Ptr a, Ptr b) {
        auto n = std::make_shared<BracketedWord>();
        n->left = std::move(a);
        n->right = std::move(b);
        return n;
    }
};

// The standard bracketing of a Lyndon word: single letters are leaves,
// longer words split at their standard factorization.
BracketedWord::Ptr bracketing(const Word& w);

Word foliage(const BracketedWord& t);  // leaves, left to right
int rank(const BracketedWord& t);      // number of leaves

// The standard bracketing of w evaluated with the series Lie bracket at
// the generators. Homogeneous of degree deg(w); the coefficient of w
// itself is 1 and all other support words are strictly graded-lex above w,
// which is the triangularity the basis conversion leans on.
template <class K>
TruncatedSeries<K> lyndon_bracket_series(const Word& w, int m, int N);

// A free Lie algebra element in Lyndon coordinates: sparse map from Lyndon
// words of degree <= N to scalars, no zeros stored.
template <class K>
class LieElement {
public:
    using Coords = std::map<Word, K, GradedLexLess>;

    LieElement(int m, int N) : m_(m), n_(N) {
        if (m < 1) throw ShapeMismatch("num_generators must be >= 1");
        if (N < 1) throw ShapeMismatch("truncation_order must be >= 1");
    }

    static LieElement generator(int m, int N, Letter i) {
        LieElement e(m, N);
        e.set_coeff(Word{i}, K(Rational(1)));
        return e;
    }

    int num_generators() const { return m_; }
    int truncation_order() const { return n_; }
    const Coords& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    K coeff(const Word& w) const {
        auto it = coords_.find(w);
        return it == coords_.end() ? K() : it->second;
    }

    void set_coeff(const Word& w, K c) {
        check_word(w);
        if (c.is_zero())
            coords_.erase(w);
        else
            coords_.insert_or_assign(w, std::move(c));
    }

    void add_coeff(const Word& w, const K& c) {
        check_word(w);
        if (c.is_zero()) return;
        auto [it, fresh] = coords_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coords_.erase(it);
        }
    }

    LieElement operator-() const {
        LieElement out(m_, n_);
        for (const auto& [w, c] : coords_) out.coords_.emplace(w, -c);
        return out;
    }

    LieElement& operator+=(const LieElement& o) {
        check_shape(o);
        for (const auto& [w, c] : o.coords_) add_coeff(w, c);
        return *this;
    }

    LieElement& operator-=(const LieElement& o) {
        check_shape(o);
        for (const auto& [w, c] : o.coords_) add_coeff(w, -c);
        return *this;
    }

    LieElement& operator*=(const K& c) {
        if (c.is_zero()) {
            coords_.clear();
            return *this;
        }
        Coords out;
        for (const auto& [w, x] : coords_) {
            K y = x * c;
            if (!y.is_zero()) out.emplace(w, std::move(y));
        }
        coords_ = std::move(out);
        return *this;
    }

    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(LieElement a, const K& c) { return a *= c; }
    friend LieElement operator*(const K& c, LieElement a) { return a *= c; }

    friend bool operator==(const LieElement& a, const LieElement& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(const LieElement& a, const LieElement& b) { return !(a == b); }

    void check_shape(const LieElement& o) const {
        if (m_ != o.m_ || n_ != o.n_)
            throw ShapeMismatch("lie element shapes differ");
    }

private:
    void check_word(const Word& w) const {
        for (Letter l : w)
            if (l < 0 || l >= m_)
                throw ShapeMismatch("letter outside alphabet");
        if (degree(w) > n_)
            throw DegreeExceedsTruncation("lyndon word degree exceeds truncation");
        if (!is_lyndon(w))
            throw ShapeMismatch("coordinate word " + word_str(w) + " is not a lyndon word");
    }

    int m_, n_;
    Coords coords_;
};

template <class K>
TruncatedSeries<K> lie_to_series(const LieElement<K>& e) {
    TruncatedSeries<K> out(e.num_generators(), e.truncation_order());
    for (const auto& [w, c] : e.coords()) {
        auto b = lyndon_bracket_series<K>(w, e.num_generators(), e.truncation_order());
        b *= c;
        out += b;
    }
    return out;
}

// Triangular elimination in graded-lex order: repeatedly read the minimal
// support word (it must be Lyndon for Lie elements), record its
// coefficient, and subtract that multiple of the basis bracket series.
// Strict graded-lex progress is guaranteed by the triangularity of the
// basis, so this terminates; a nonzero non-Lyndon-headed residual means
// the input was not a Lie element.
template <class K>
LieElement<K> series_to_lie(const TruncatedSeries<K>& p) {
    if (!p.coeff(Word{}).is_zero())
        throw ValuationZero("series has nonzero constant term");
    LieElement<K> out(p.num_generators(), p.truncation_order());
    TruncatedSeries<K> r = p;
    while (!r.is_zero()) {
        // Copies, not references: the subtraction below erases this node.
        const Word w = r.terms().begin()->first;
        const K c = r.terms().begin()->second;
        if (!is_lyndon(w))
            throw NotLieElement("residual headed by non-lyndon word " + word_str(w));
        out.set_coeff(w, c);
        auto b = lyndon_bracket_series<K>(w, p.num_generators(), p.truncation_order());
        b *= c;
        r -= b;
        if (!r.is_zero() && !GradedLexLess{}(w, r.terms().begin()->first))
            throw std::logic_error("triangular elimination failed to make progress");
    }
    return out;
}

template <class K>
LieElement<K> lie_bracket(const LieElement<K>& a, const LieElement<K>& b) {
    a.check_shape(b);
    return series_to_lie(lie_bracket(lie_to_series(a), lie_to_series(b)));
}

// exp(ad_a)(b) = sum of ad_a^i(b)/i!; finite because every bracket raises
// valuation.
template <class K>
LieElement<K> exp_ad(const LieElement<K>& a, const LieElement<K>& b) {
    a.check_shape(b);
    auto as = lie_to_series(a);
    auto term = lie_to_series(b);
    auto acc = term;
    for (int i = 1; !term.is_zero() && i <= a.truncation_order(); ++i) {
        term = lie_bracket(as, term);
        term /= Rational(i);
        acc += term;
    }
    return series_to_lie(acc);
}

template <class K>
LieElement<K> graded_component(const LieElement<K>& e, int d) {
    if (d < 1 || d > e.truncation_order())
        throw DegreeOutOfRange("degree " + std::to_string(d) + " outside 1.." +
                               std::to_string(e.truncation_order()));
    LieElement<K> out(e.num_generators(), e.truncation_order());
    for (const auto& [w, c] : e.coords())
        if (degree(w) == d) out.set_coeff(w, c);
    return out;
}

inline LieElement<UniPoly> lift_to_unipoly(const LieElement<Rational>& e) {
    LieElement<UniPoly> out(e.num_generators(), e.truncation_order());
    for (const auto& [w, c] : e.coords()) out.set_coeff(w, UniPoly(c));
    return out;
}

namespace detail {

template <class K>
TruncatedSeries<K> eval_bracketed(const BracketedWord& t, int m, int N) {
    if (t.is_leaf()) return TruncatedSeries<K>::generator(m, N, t.letter);
    return lie_bracket(eval_bracketed<K>(*t.left, m, N), eval_bracketed<K>(*t.right, m, N));
}

}  // namespace detail

template <class K>
TruncatedSeries<K> lyndon_bracket_series(const Word& w, int m, int N) {
    if (degree(w) > N)
        throw DegreeExceedsTruncation("word degree " + std::to_string(degree(w)) +
                                      " exceeds truncation " + std::to_string(N));
    return detail::eval_bracketed<K>(*bracketing(w), m, N);
}

}  // namespace malcev
