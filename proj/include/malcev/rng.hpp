#pragma once

#include <cstdint>
#include <random>

#include "malcev/group.hpp"
#include "malcev/linalg.hpp"
#include "malcev/lyndon.hpp"

namespace malcev {

// Seeded source for the property suites. Sampling goes through mt19937_64
// raw draws reduced by modulo, because uniform_int_distribution is allowed
// to differ between standard libraries and reports must be reproducible
// everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // Inclusive bounds.
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(int max_num = 9, int max_den = 4) {
        return Rational(uniform(-max_num, max_num), uniform(1, max_den));
    }

    Rational nonzero_rational(int max_num = 9, int max_den = 4) {
        while (true) {
            Rational r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    Word word(int m, int len) {
        Word w(len);
        for (auto& a : w) a = uniform(0, m - 1);
        return w;
    }

    TruncatedSeries<Rational> series(int m, int N, int terms, int max_num = 9, int max_den = 4) {
        TruncatedSeries<Rational> s(m, N);
        for (int k = 0; k < terms; ++k)
            s.add_coeff(word(m, uniform(0, N)), rational(max_num, max_den));
        return s;
    }

    // Valuation >= 1.
    TruncatedSeries<Rational> proper_series(int m, int N, int terms, int max_num = 9,
                                            int max_den = 4) {
        TruncatedSeries<Rational> s(m, N);
        for (int k = 0; k < terms; ++k)
            s.add_coeff(word(m, uniform(1, N)), rational(max_num, max_den));
        return s;
    }

    LieElement<Rational> lie(int m, int N, int terms, int max_num = 9, int max_den = 4) {
        auto basis = enumerate_lyndon(m, N);
        LieElement<Rational> e(m, N);
        for (int k = 0; k < terms; ++k)
            e.add_coeff(basis[uniform(0, static_cast<int>(basis.size()) - 1)],
                        rational(max_num, max_den));
        return e;
    }

    GroupElement<Rational> group_like(int m, int N, int terms, int max_num = 9, int max_den = 4) {
        return exp(lie_to_series(lie(m, N, terms, max_num, max_den)));
    }

    // Unit constant term, arbitrary higher part (not necessarily group-like).
    GroupElement<Rational> unit_plus(int m, int N, int terms, int max_num = 9, int max_den = 4) {
        auto s = proper_series(m, N, terms, max_num, max_den);
        s.add_coeff(Word{}, Rational(1));
        return GroupElement<Rational>(s);
    }

    Vec vector(int dim, int max_num = 9, int max_den = 4) {
        Vec v(dim);
        for (auto& x : v) x = rational(max_num, max_den);
        return v;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace malcev
