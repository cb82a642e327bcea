#include "malcev/oracles.hpp"

#include <stdexcept>

namespace malcev::oracle {

long long word_rank(const Word& w, int m) {
    long long r = 0;
    for (Letter a : w) r = r * m + a;
    return r;
}

Word rank_word(long long r, int d, int m) {
    Word w(d);
    for (int k = d - 1; k >= 0; --k) {
        w[k] = static_cast<Letter>(r % m);
        r /= m;
    }
    return w;
}

namespace {

long long pow_ll(int m, int d) {
    long long p = 1;
    for (int k = 0; k < d; ++k) p *= m;
    return p;
}

void check_same_shape(const Dense& a, const Dense& b) {
    if (a.m != b.m || a.comps.size() != b.comps.size())
        throw std::logic_error("dense shapes differ");
}

}  // namespace

Dense dense_zero(int m, int N) {
    Dense d;
    d.m = m;
    d.comps.resize(N + 1);
    for (int k = 0; k <= N; ++k) d.comps[k].assign(pow_ll(m, k), Rational());
    return d;
}

Dense dense_unit(int m, int N) {
    Dense d = dense_zero(m, N);
    d.comps[0][0] = Rational(1);
    return d;
}

Dense dense_generator(int m, int N, int i) {
    Dense d = dense_zero(m, N);
    d.comps[1][i] = Rational(1);
    return d;
}

Dense dense_add(Dense a, const Dense& b) {
    check_same_shape(a, b);
    for (size_t k = 0; k < a.comps.size(); ++k)
        for (size_t r = 0; r < a.comps[k].size(); ++r) a.comps[k][r] += b.comps[k][r];
    return a;
}

Dense dense_sub(Dense a, const Dense& b) {
    check_same_shape(a, b);
    for (size_t k = 0; k < a.comps.size(); ++k)
        for (size_t r = 0; r < a.comps[k].size(); ++r) a.comps[k][r] -= b.comps[k][r];
    return a;
}

Dense dense_scale(const Rational& c, Dense a) {
    for (auto& comp : a.comps)
        for (auto& x : comp) x *= c;
    return a;
}

Dense dense_mul(const Dense& a, const Dense& b) {
    check_same_shape(a, b);
    const int N = a.truncation_order();
    Dense out = dense_zero(a.m, N);
    for (int da = 0; da <= N; ++da)
        for (int db = 0; da + db <= N; ++db) {
            const long long shift = pow_ll(a.m, db);
            for (long long ra = 0; ra < static_cast<long long>(a.comps[da].size()); ++ra) {
                if (a.comps[da][ra].is_zero()) continue;
                for (long long rb = 0; rb < static_cast<long long>(b.comps[db].size()); ++rb) {
                    if (b.comps[db][rb].is_zero()) continue;
                    out.comps[da + db][ra * shift + rb] += a.comps[da][ra] * b.comps[db][rb];
                }
            }
        }
    return out;
}

Dense dense_bracket(const Dense& a, const Dense& b) {
    return dense_sub(dense_mul(a, b), dense_mul(b, a));
}

Dense dense_exp(const Dense& a) {
    if (!a.comps[0][0].is_zero()) throw std::logic_error("dense exp needs zero constant term");
    const int N = a.truncation_order();
    Dense out = dense_unit(a.m, N);
    Dense term = dense_unit(a.m, N);
    for (int i = 1; i <= N; ++i) {
        term = dense_scale(Rational(1, i), dense_mul(term, a));
        out = dense_add(std::move(out), term);
    }
    return out;
}

Dense dense_log(const Dense& a) {
    if (a.comps[0][0] != Rational(1)) throw std::logic_error("dense log needs constant term 1");
    const int N = a.truncation_order();
    Dense delta = dense_sub(a, dense_unit(a.m, N));
    Dense out = dense_zero(a.m, N);
    Dense power = dense_unit(a.m, N);
    for (int n = 1; n <= N; ++n) {
        power = dense_mul(power, delta);
        Rational c(n % 2 == 1 ? 1 : -1, n);
        out = dense_add(std::move(out), dense_scale(c, power));
    }
    return out;
}

bool dense_equal(const Dense& a, const Dense& b) {
    return a.m == b.m && a.comps == b.comps;
}

Dense dense_of_series(const TruncatedSeries<Rational>& s) {
    Dense out = dense_zero(s.num_generators(), s.truncation_order());
    for (const auto& [w, c] : s.terms())
        out.comps[degree(w)][word_rank(w, s.num_generators())] = c;
    return out;
}

bool is_lyndon_rot(const Word& w) {
    if (w.empty()) return false;
    const int n = static_cast<int>(w.size());
    for (int s = 1; s < n; ++s) {
        Word rot(w.begin() + s, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + s);
        if (!lex_less(w, rot)) return false;
    }
    return true;
}

std::vector<Word> all_words(int m, int d) {
    std::vector<Word> out;
    Word w(d, 0);
    while (true) {
        out.push_back(w);
        int k = d - 1;
        while (k >= 0 && w[k] == m - 1) {
            w[k] = 0;
            --k;
        }
        if (k < 0) break;
        ++w[k];
    }
    return out;
}

std::vector<Word> lyndon_by_filter(int m, int N) {
    std::vector<Word> out;
    for (int d = 1; d <= N; ++d)
        for (const auto& w : all_words(m, d))
            if (is_lyndon_rot(w)) out.push_back(w);
    return out;
}

std::pair<Word, Word> factorization_by_scan(const Word& w) {
    if (w.size() < 2) throw std::logic_error("factorization needs length >= 2");
    size_t best = 1;
    for (size_t s = 2; s < w.size(); ++s) {
        Word cand(w.begin() + s, w.end());
        Word cur(w.begin() + best, w.end());
        if (lex_less(cand, cur)) best = s;
    }
    return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
}

namespace {

// Homogeneous product: u of degree p times v of degree q concatenates
// ranks as digits.
std::vector<Rational> homog_mul(const std::vector<Rational>& u, const std::vector<Rational>& v,
                                int m, int q) {
    std::vector<Rational> out(u.size() * v.size());
    const long long shift = pow_ll(m, q);
    for (size_t ru = 0; ru < u.size(); ++ru) {
        if (u[ru].is_zero()) continue;
        for (size_t rv = 0; rv < v.size(); ++rv) {
            if (v[rv].is_zero()) continue;
            out[ru * shift + rv] += u[ru] * v[rv];
        }
    }
    return out;
}

std::vector<Rational> homog_bracket(const std::vector<Rational>& u, const std::vector<Rational>& v,
                                    int m, int p, int q) {
    auto uv = homog_mul(u, v, m, q);
    auto vu = homog_mul(v, u, m, p);
    for (size_t r = 0; r < uv.size(); ++r) uv[r] -= vu[r];
    return uv;
}

}  // namespace

std::vector<Rational> bracket_expansion(const Word& w, int m) {
    if (w.size() == 1) {
        std::vector<Rational> e(m);
        e[w[0]] = Rational(1);
        return e;
    }
    auto [u, v] = factorization_by_scan(w);
    return homog_bracket(bracket_expansion(u, m), bracket_expansion(v, m), m,
                         static_cast<int>(u.size()), static_cast<int>(v.size()));
}

std::optional<std::map<Word, Rational, GradedLexLess>> lyndon_coordinates(const Dense& s) {
    if (!s.comps[0][0].is_zero()) return std::nullopt;
    std::map<Word, Rational, GradedLexLess> coords;
    for (int d = 1; d <= s.truncation_order(); ++d) {
        bool any = false;
        for (const auto& x : s.comps[d])
            if (!x.is_zero()) any = true;
        if (!any) continue;

        std::vector<Word> basis;
        for (const auto& w : all_words(s.m, d))
            if (is_lyndon_rot(w)) basis.push_back(w);
        Mat columns;
        for (const auto& w : basis) columns.push_back(bracket_expansion(w, s.m));
        auto x = solve_linear(columns, s.comps[d]);
        if (!x) return std::nullopt;
        for (size_t j = 0; j < basis.size(); ++j)
            if (!(*x)[j].is_zero()) coords.emplace(basis[j], (*x)[j]);
    }
    return coords;
}

bool dynkin_is_lie(const TruncatedSeries<Rational>& s) {
    const int m = s.num_generators();
    const int N = s.truncation_order();
    if (!s.coeff(Word{}).is_zero()) return false;
    for (int d = 1; d <= N; ++d) {
        // T = sum of coeff(w) * leftNormedBracketing(w) over degree-d words,
        // accumulated as a homogeneous dense vector.
        std::vector<Rational> lhs(pow_ll(m, d));
        std::vector<Rational> rhs(pow_ll(m, d));
        for (const auto& [w, c] : s.terms()) {
            if (degree(w) != d) continue;
            std::vector<Rational> cur(m);
            cur[w[0]] = Rational(1);
            for (size_t k = 1; k < w.size(); ++k) {
                std::vector<Rational> letter(m);
                letter[w[k]] = Rational(1);
                cur = homog_bracket(cur, letter, m, static_cast<int>(k), 1);
            }
            for (size_t r = 0; r < cur.size(); ++r) lhs[r] += c * cur[r];
            rhs[word_rank(w, m)] += Rational(d) * c;
        }
        if (lhs != rhs) return false;
    }
    return true;
}

std::map<Word, Rational, GradedLexLess> bch_coordinates(int N) {
    Dense p = dense_mul(dense_exp(dense_generator(2, N, 0)), dense_exp(dense_generator(2, N, 1)));
    auto coords = lyndon_coordinates(dense_log(p));
    if (!coords) throw std::logic_error("dense bch is not a Lie element");
    return *coords;
}

Vec solve_equation_linear(const SCLieAlgebra& a, const LieElement<Rational>& t,
                          const std::vector<Vec>& args) {
    const auto& layers = a.adapted();
    Vec f(a.dimension());

    for (int d = 1; d <= a.nilpotency_class(); ++d) {
        std::vector<Vec> full = args;
        full.push_back(f);
        Vec r = evaluate_lie(a, t, full);
        if (vec_is_zero(r)) break;
        auto comps = layer_components(layers, r);
        for (int k = 0; k + 1 < d; ++k)
            if (!vec_is_zero(comps[k]))
                throw std::logic_error("residual below current depth");

        const Mat& basis = layers[d - 1];
        if (basis.empty()) {
            if (!vec_is_zero(comps[d - 1]))
                throw std::logic_error("residual in an empty layer");
            continue;
        }
        Mat columns;
        for (const auto& v : basis) {
            std::vector<Vec> perturbed = args;
            perturbed.push_back(gr_mul(a, f, v));
            Vec diff = vec_sub(evaluate_lie(a, t, perturbed), r);
            columns.push_back(layer_components(layers, diff)[d - 1]);
        }
        auto x = solve_linear(columns, vec_scale(Rational(-1), comps[d - 1]));
        if (!x) throw std::logic_error("measured system is inconsistent");
        Vec step(a.dimension());
        for (size_t j = 0; j < basis.size(); ++j)
            step = vec_add(std::move(step), vec_scale((*x)[j], basis[j]));
        f = gr_mul(a, f, step);
    }

    std::vector<Vec> full = args;
    full.push_back(f);
    if (!vec_is_zero(evaluate_lie(a, t, full)))
        throw std::logic_error("nonzero residual after layered solve");
    return f;
}

}  // namespace malcev::oracle
