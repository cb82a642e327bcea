#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "malcev/errors.hpp"
#include "malcev/scalar.hpp"
#include "malcev/word.hpp"

namespace malcev {

// A noncommutative power series over m generators, truncated modulo the
// two-sided ideal of words of degree > N. Sparse: zero coefficients are
// never stored, so equality is structural equality of (m, N, terms).
// Values are treated as immutable once built; all operations below return
// fresh series, which keeps them safe to share across threads.
template <class K>
class TruncatedSeries {
public:
    using Terms = std::map<Word, K, GradedLexLess>;

    TruncatedSeries(int m, int N) : m_(m), n_(N) {
        if (m < 1) throw ShapeMismatch("num_generators must be >= 1");
        if (N < 1) throw ShapeMismatch("truncation_order must be >= 1");
    }

    static TruncatedSeries unit(int m, int N) {
        TruncatedSeries s(m, N);
        s.terms_.emplace(Word{}, K(Rational(1)));
        return s;
    }

    static TruncatedSeries generator(int m, int N, Letter i) {
        TruncatedSeries s(m, N);
        s.set_coeff(Word{i}, K(Rational(1)));
        return s;
    }

    int num_generators() const { return m_; }
    int truncation_order() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    K coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? K() : it->second;
    }

    void set_coeff(const Word& w, K c) {
        check_word(w);
        if (c.is_zero())
            terms_.erase(w);
        else
            terms_.insert_or_assign(w, std::move(c));
    }

    void add_coeff(const Word& w, const K& c) {
        check_word(w);
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TruncatedSeries operator-() const {
        TruncatedSeries out(m_, n_);
        for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
        return out;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_shape(o);
        for (const auto& [w, c] : o.terms_) add_coeff(w, c);
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_shape(o);
        for (const auto& [w, c] : o.terms_) add_coeff(w, -c);
        return *this;
    }

    TruncatedSeries& operator*=(const K& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        Terms out;
        for (const auto& [w, x] : terms_) {
            K y = x * c;
            if (!y.is_zero()) out.emplace(w, std::move(y));
        }
        terms_ = std::move(out);
        return *this;
    }

    // Divides every coefficient by a nonzero rational; total in a Q-algebra.
    TruncatedSeries& operator/=(const Rational& c) {
        if (c.is_zero()) throw DivisionByZero("series division by zero rational");
        for (auto& [w, x] : terms_) x /= c;
        return *this;
    }

    // Cauchy product: (a*b)(w) = sum over splittings w = uv of a(u)b(v);
    // splittings of degree > N are discarded by the truncation semantics.
    TruncatedSeries& operator*=(const TruncatedSeries& o) {
        check_shape(o);
        TruncatedSeries out(m_, n_);
        for (const auto& [u, a] : terms_) {
            if (degree(u) > n_) continue;
            for (const auto& [v, b] : o.terms_) {
                if (degree(u) + degree(v) > n_) break;  // graded-lex map: degrees ascend
                Word w = u;
                w.insert(w.end(), v.begin(), v.end());
                out.add_coeff(w, a * b);
            }
        }
        terms_ = std::move(out.terms_);
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const K& c) { return a *= c; }
    friend TruncatedSeries operator*(const K& c, TruncatedSeries a) { return a *= c; }
    friend TruncatedSeries operator/(TruncatedSeries a, const Rational& c) { return a /= c; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    void check_shape(const TruncatedSeries& o) const {
        if (m_ != o.m_ || n_ != o.n_)
            throw ShapeMismatch("series shapes differ: (" + std::to_string(m_) + "," +
                                std::to_string(n_) + ") vs (" + std::to_string(o.m_) + "," +
                                std::to_string(o.n_) + ")");
    }

private:
    void check_word(const Word& w) const {
        for (Letter l : w)
            if (l < 0 || l >= m_)
                throw ShapeMismatch("letter " + std::to_string(l) + " outside alphabet of size " +
                                    std::to_string(m_));
        if (degree(w) > n_)
            throw DegreeExceedsTruncation("word degree " + std::to_string(degree(w)) +
                                          " exceeds truncation " + std::to_string(n_));
    }

    int m_, n_;
    Terms terms_;
};

// Minimal degree in the support; empty optional encodes +infinity (zero series).
template <class K>
std::optional<int> valuation(const TruncatedSeries<K>& a) {
    if (a.is_zero()) return std::nullopt;
    return degree(a.terms().begin()->first);
}

template <class K>
TruncatedSeries<K> lie_bracket(const TruncatedSeries<K>& a, const TruncatedSeries<K>& b) {
    return a * b - b * a;
}

// Image of a under the quotient onto truncation order n <= N.
template <class K>
TruncatedSeries<K> truncated(const TruncatedSeries<K>& a, int n) {
    if (n > a.truncation_order())
        throw ShapeMismatch("cannot extend truncation order");
    TruncatedSeries<K> out(a.num_generators(), n);
    for (const auto& [w, c] : a.terms()) {
        if (degree(w) > n) break;
        out.set_coeff(w, c);
    }
    return out;
}

template <class K>
TruncatedSeries<K> graded_part(const TruncatedSeries<K>& a, int d) {
    TruncatedSeries<K> out(a.num_generators(), a.truncation_order());
    for (const auto& [w, c] : a.terms())
        if (degree(w) == d) out.set_coeff(w, c);
    return out;
}

// Evaluation of P at the tuple args (one series per generator of P):
// sum over support words of P(w) times the Cauchy product of the images of
// the letters of w. Finite because every argument has valuation >= 1.
template <class K>
TruncatedSeries<K> substitute(const TruncatedSeries<K>& p,
                              const std::vector<TruncatedSeries<K>>& args) {
    if (static_cast<int>(args.size()) != p.num_generators())
        throw ArityMismatch("substitute expects " + std::to_string(p.num_generators()) +
                            " arguments, got " + std::to_string(args.size()));
    for (const auto& a : args) {
        args.front().check_shape(a);
        if (!a.coeff(Word{}).is_zero())
            throw ValuationZeroArgument("substitution argument has nonzero constant term");
    }
    const int m2 = args.front().num_generators();
    const int n2 = args.front().truncation_order();
    TruncatedSeries<K> out(m2, n2);
    for (const auto& [w, c] : p.terms()) {
        if (degree(w) > n2) break;  // val of the image is >= deg(w)
        TruncatedSeries<K> value = TruncatedSeries<K>::unit(m2, n2);
        for (Letter l : w) value *= args[l];
        value *= c;
        out += value;
    }
    return out;
}

inline TruncatedSeries<UniPoly> lift_to_unipoly(const TruncatedSeries<Rational>& a) {
    TruncatedSeries<UniPoly> out(a.num_generators(), a.truncation_order());
    for (const auto& [w, c] : a.terms()) out.set_coeff(w, UniPoly(c));
    return out;
}

}  // namespace malcev
