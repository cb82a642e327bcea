#include "malcev/verify.hpp"

#include "malcev/hall_petresco.hpp"
#include "malcev/io.hpp"
#include "malcev/oracles.hpp"
#include "malcev/rng.hpp"
#include "malcev/term.hpp"

namespace malcev {

namespace {

class Checker {
public:
    Checker(std::string suite, std::uint64_t seed) {
        r_.suite = std::move(suite);
        r_.seed = seed;
    }

    void check(const std::string& label, bool ok) {
        ++r_.cases;
        if (ok) {
            ++r_.passed;
            return;
        }
        ++r_.failed;
        if (r_.first_failure.empty()) r_.first_failure = label;
    }

    template <class F>
    void run(const std::string& label, F&& f) {
        try {
            check(label, f());
        } catch (const std::exception& e) {
            check(label + ": raised " + e.what(), false);
        }
    }

    const VerifyReport& report() const { return r_; }

private:
    VerifyReport r_;
};

std::string case_tag(const std::string& what, int i) {
    return what + " (case " + std::to_string(i) + ")";
}

using SeriesQ = TruncatedSeries<Rational>;
using GroupQ = GroupElement<Rational>;
using LieQ = LieElement<Rational>;

void suite_ring(Checker& c, Rng& rng, const VerifyOptions& opts) {
    const int m = 2, N = 4;
    for (int i = 0; i < opts.cases; ++i) {
        auto a = rng.series(m, N, 4), b = rng.series(m, N, 4), d = rng.series(m, N, 4);
        c.run(case_tag("product associativity", i), [&] { return (a * b) * d == a * (b * d); });
        c.run(case_tag("left distributivity", i), [&] { return a * (b + d) == a * b + a * d; });
        int n = rng.uniform(1, N);
        c.run(case_tag("truncation is a quotient morphism", i), [&] {
            return truncated(a * b, n) == truncated(a, n) * truncated(b, n);
        });

        auto p = rng.proper_series(m, N, 3), q = rng.proper_series(m, N, 3);
        c.run(case_tag("val(a*b) = val(a)+val(b)", i), [&] {
            auto va = valuation(p), vb = valuation(q);
            if (!va || !vb || *va + *vb > N) return true;
            auto vp = valuation(p * q);
            return vp && *vp == *va + *vb;
        });

        std::vector<SeriesQ> args{rng.proper_series(m, N, 3), rng.proper_series(m, N, 3)};
        c.run(case_tag("substitution is multiplicative", i), [&] {
            return substitute(a * b, args) == substitute(a, args) * substitute(b, args);
        });
        std::vector<SeriesQ> inner{rng.proper_series(m, N, 2), rng.proper_series(m, N, 2)};
        c.run(case_tag("substitution composes associatively", i), [&] {
            std::vector<SeriesQ> composed{substitute(args[0], inner), substitute(args[1], inner)};
            return substitute(substitute(a, args), inner) == substitute(a, composed);
        });
    }
}

void eg_axioms_series(Checker& c, Rng& rng, int cases) {
    const int m = 2, N = 4;
    for (int i = 0; i < cases; ++i) {
        auto f = rng.unit_plus(m, N, 3), g = rng.unit_plus(m, N, 3);
        Rational lam = rng.rational(), mu = rng.rational();
        c.run(case_tag("EG1 f^1 = f", i), [&] { return group_power(f, Rational(1)) == f; });
        c.run(case_tag("EG2 f^(l+u) = f^l f^u", i), [&] {
            return group_power(f, lam + mu) == group_mul(group_power(f, lam), group_power(f, mu));
        });
        c.run(case_tag("EG3 (f^l)^u = f^(lu)", i), [&] {
            return group_power(group_power(f, lam), mu) == group_power(f, lam * mu);
        });
        c.run(case_tag("EG4 commuting power law", i), [&] {
            auto fa = group_power(f, rng.rational());
            auto fb = group_power(f, rng.rational());
            return group_power(group_mul(fa, fb), lam) ==
                   group_mul(group_power(fa, lam), group_power(fb, lam));
        });
        c.run(case_tag("EG5 conjugation power law", i), [&] {
            auto conj = group_mul(group_mul(f, g), group_inv(f));
            return group_power(conj, lam) ==
                   group_mul(group_mul(f, group_power(g, lam)), group_inv(f));
        });
    }
}

void eg_axioms_model(Checker& c, Rng& rng, const SCLieAlgebra& a, const std::string& name,
                     int cases) {
    for (int i = 0; i < cases; ++i) {
        Vec f = rng.vector(a.dimension(), 5, 3), g = rng.vector(a.dimension(), 5, 3);
        Rational lam = rng.rational(), mu = rng.rational();
        c.run(case_tag(name + " EG1", i), [&] { return gr_power(a, f, Rational(1)) == f; });
        c.run(case_tag(name + " EG2", i), [&] {
            return gr_power(a, f, lam + mu) ==
                   gr_mul(a, gr_power(a, f, lam), gr_power(a, f, mu));
        });
        c.run(case_tag(name + " EG3", i), [&] {
            return gr_power(a, gr_power(a, f, lam), mu) == gr_power(a, f, lam * mu);
        });
        c.run(case_tag(name + " EG4 commuting", i), [&] {
            Vec fa = gr_power(a, f, rng.rational()), fb = gr_power(a, f, rng.rational());
            return gr_power(a, gr_mul(a, fa, fb), lam) ==
                   gr_mul(a, gr_power(a, fa, lam), gr_power(a, fb, lam));
        });
        c.run(case_tag(name + " EG5 conjugation", i), [&] {
            Vec conj = gr_mul(a, gr_mul(a, f, g), gr_power(a, f, Rational(-1)));
            return gr_power(a, conj, lam) ==
                   gr_mul(a, gr_mul(a, f, gr_power(a, g, lam)), gr_power(a, f, Rational(-1)));
        });
    }
}

void suite_eg(Checker& c, Rng& rng, const VerifyOptions& opts) {
    eg_axioms_series(c, rng, opts.cases);
    auto heis = SCLieAlgebra::heisenberg();
    auto free3 = SCLieAlgebra::free_nilpotent(2, 3);
    eg_axioms_model(c, rng, heis, "heisenberg", opts.cases);
    eg_axioms_model(c, rng, free3, "free(2,3)", opts.cases);
}

void suite_bch(Checker& c, Rng& rng, const VerifyOptions& opts) {
    const int m = 2, N = 4;
    c.run("dense oracle agrees with bch(X0, X1)", [&] {
        auto production = bch(SeriesQ::generator(m, N, 0), SeriesQ::generator(m, N, 1));
        return oracle::bch_coordinates(N) == production.coords();
    });
    for (int i = 0; i < opts.cases; ++i) {
        auto a = rng.lie(m, N, 3), b = rng.lie(m, N, 3), d = rng.lie(m, N, 3);
        c.run(case_tag("exp is a homomorphism onto products", i), [&] {
            return exp(lie_to_series(bch(a, b))) ==
                   group_mul(exp(lie_to_series(a)), exp(lie_to_series(b)));
        });
        c.run(case_tag("bch associativity", i),
              [&] { return bch(bch(a, b), d) == bch(a, bch(b, d)); });
        c.run(case_tag("bch right unit", i), [&] { return bch(a, LieQ(m, N)) == a; });

        auto eps = rng.proper_series(m, N, 3), del = rng.proper_series(m, N, 3);
        auto g = rng.unit_plus(m, N, 3);
        c.run(case_tag("exp/log inverse pair", i),
              [&] { return log(exp(eps)) == eps && exp(log(g)) == g; });
        c.run(case_tag("bch leading terms: remainder valuation >= 3", i), [&] {
            auto rem = log(group_mul(exp(eps), exp(del))) - eps - del -
                       lie_bracket(eps, del) * Rational(1, 2);
            auto v = valuation(rem);
            return !v || *v >= 3;
        });
        c.run(case_tag("group commutator leading term", i), [&] {
            auto va = valuation(eps), vb = valuation(del);
            if (!va || !vb) return true;
            auto rem = log(group_commutator(exp(eps), exp(del))) - lie_bracket(eps, del);
            auto v = valuation(rem);
            return !v || *v >= *va + *vb + 1;
        });
    }
}

void suite_collect(Checker& c, Rng& rng, const VerifyOptions& opts) {
    const int m = 2, N = 4;
    for (int i = 0; i < opts.cases; ++i) {
        auto q = rng.group_like(m, N, 3);
        MlsDecomposition<Rational> d;
        try {
            d = collect(q);
        } catch (const std::exception& e) {
            c.check(case_tag(std::string("collect raised ") + e.what(), i), false);
            continue;
        }
        c.run(case_tag("expand(collect(Q)) = Q", i), [&] { return expand(d, m, N) == q; });
        c.run(case_tag("decomposition strictly increases", i), [&] {
            for (std::size_t k = 0; k + 1 < d.size(); ++k)
                if (!GradedLexLess{}(d[k].word, d[k + 1].word)) return false;
            return true;
        });
        c.run(case_tag("factor words are Lyndon both ways", i), [&] {
            for (const auto& f : d)
                if (!is_lyndon(f.word) || !oracle::is_lyndon_rot(f.word)) return false;
            return true;
        });

        auto q2 = rng.group_like(m, N, 3);
        if (q2 == q) continue;
        c.run(case_tag("first divergence bounded by log difference", i), [&] {
            auto d2 = collect(q2);
            std::size_t k = 0;
            while (k < d.size() && k < d2.size() && d[k] == d2[k]) ++k;
            Word diverge;
            if (k < d.size() && k < d2.size())
                diverge = GradedLexLess{}(d[k].word, d2[k].word) ? d[k].word : d2[k].word;
            else if (k < d.size())
                diverge = d[k].word;
            else
                diverge = d2[k].word;
            auto diff = log(group_mul(q, group_inv(q2)));
            if (diff.is_zero()) return false;  // distinct elements differ somewhere
            return !GradedLexLess{}(diff.terms().begin()->first, diverge);
        });
    }
}

void suite_hall_petresco(Checker& c, Rng&, const VerifyOptions& opts) {
    const int n = opts.hp_generators, cl = opts.hp_class;
    std::vector<GroupQ> taus;
    c.run("tau recursion stays in the filtration", [&] {
        taus = hall_petresco_tau(n, cl);
        for (std::size_t k = 0; k < taus.size(); ++k) {
            auto v = valuation(log(taus[k]));
            if (v && *v < static_cast<int>(k) + 2) return false;
        }
        return true;
    });
    c.run("tau_2 leading term is the commutator bracket", [&] {
        if (taus.empty() || cl < 2) return true;
        auto coords = series_to_lie(log(taus[0])).coords();
        auto it = coords.begin();
        return it != coords.end() && it->first == Word{0, 1} && it->second == Rational(1);
    });
    c.run("symbolic identity over polynomial exponents", [&] {
        return verify_hall_petresco(n, cl);
    });
}

void suite_functor(Checker& c, Rng& rng, const VerifyOptions& opts) {
    std::vector<std::pair<std::string, SCLieAlgebra>> algebras;
    algebras.emplace_back("abelian:4", SCLieAlgebra::abelian(4));
    algebras.emplace_back("heisenberg", SCLieAlgebra::heisenberg());
    algebras.emplace_back("free:2:3", SCLieAlgebra::free_nilpotent(2, 3));

    for (const auto& [name, a] : algebras) {
        c.run(name + ": Lie structure rebuilt from the group operations", [&] {
            return lie_from_group_ops(a) == a;
        });
        c.run(name + ": group lower central series matches the Lie one", [&] {
            return group_lcs(a) == a.lower_central_series();
        });
        auto ead = exp_ad(LieQ::generator(2, a.nilpotency_class(), 0),
                          LieQ::generator(2, a.nilpotency_class(), 1));
        const int rounds = std::max(1, opts.cases / 10);
        for (int i = 0; i < rounds; ++i) {
            Vec x = rng.vector(a.dimension(), 5, 3), y = rng.vector(a.dimension(), 5, 3);
            c.run(case_tag(name + ": exp_ad evaluates to a*b*(-a)", i), [&] {
                Vec conj = gr_mul(a, gr_mul(a, x, y), vec_scale(Rational(-1), x));
                return evaluate_lie(a, ead, {x, y}) == conj;
            });
        }
    }
}

void suite_solver(Checker& c, Rng& rng, const VerifyOptions& opts) {
    std::vector<SCLieAlgebra> models;
    models.push_back(SCLieAlgebra::abelian(3));
    models.push_back(SCLieAlgebra::heisenberg());
    models.push_back(SCLieAlgebra::free_nilpotent(2, 3));
    models.push_back(SCLieAlgebra::free_nilpotent(2, 4));

    for (int i = 0; i < opts.cases; ++i) {
        const auto& a = models[rng.uniform(0, static_cast<int>(models.size()) - 1)];
        const int n = rng.uniform(1, 3);
        std::vector<Vec> gs;
        for (int k = 0; k < n; ++k) gs.push_back(rng.vector(a.dimension(), 4, 3));
        std::vector<Rational> lambdas;
        Rational total;
        do {
            lambdas.clear();
            total = Rational();
            for (int k = 0; k < n; ++k) {
                lambdas.push_back(rng.rational(4, 3));
                total += lambdas.back();
            }
        } while (total.is_zero());

        Vec f;
        try {
            f = solve_group_equation(a, gs, lambdas);
        } catch (const std::exception& e) {
            c.check(case_tag(std::string("solver raised ") + e.what(), i), false);
            continue;
        }
        c.run(case_tag("residual recomputes to the unit", i), [&] {
            Vec r = gs[0];
            r = gr_mul(a, r, gr_power(a, f, lambdas[0]));
            for (int k = 1; k < n; ++k)
                r = gr_mul(a, gr_mul(a, r, gs[k]), gr_power(a, f, lambdas[k]));
            return vec_is_zero(r);
        });
        c.run(case_tag("agrees with the measured-difference oracle", i), [&] {
            auto y = MixedTerm::variable(n);
            MixedTerm::Ptr t;
            for (int k = 0; k < n; ++k) {
                auto gk = MixedTerm::variable(k);
                t = t ? MixedTerm::mul(t, gk) : gk;
                t = MixedTerm::mul(t, MixedTerm::scale(lambdas[k], y));
            }
            auto lie_t = term_to_lie(*t, n + 1, a.nilpotency_class());
            return oracle::solve_equation_linear(a, lie_t, gs) == f;
        });
        c.run(case_tag("perturbed solutions fail", i), [&] {
            Vec p = rng.vector(a.dimension(), 3, 2);
            if (vec_is_zero(p)) p[0] = Rational(1);
            Vec fp = gr_mul(a, f, p);
            Vec r = gs[0];
            r = gr_mul(a, r, gr_power(a, fp, lambdas[0]));
            for (int k = 1; k < n; ++k)
                r = gr_mul(a, gr_mul(a, r, gs[k]), gr_power(a, fp, lambdas[k]));
            return !vec_is_zero(r);
        });
        c.run(case_tag("vanishing exponent sum is rejected", i), [&] {
            auto bad = lambdas;
            bad[n - 1] = bad[n - 1] - total;
            try {
                solve_group_equation(a, gs, bad);
                return false;
            } catch (const SingularEquation&) {
                return true;
            }
        });
    }
}

void suite_lyndon(Checker& c, Rng& rng, const VerifyOptions& opts) {
    for (int m = 1; m <= 3; ++m)
        c.run("enumeration matches the filtered odometer (m=" + std::to_string(m) + ")", [&] {
            return enumerate_lyndon(m, 6) == oracle::lyndon_by_filter(m, 6);
        });
    c.run("triangular expansion of every Lyndon word (m=2, N=6)", [&] {
        for (const auto& w : enumerate_lyndon(2, 6)) {
            auto s = lyndon_bracket_series<Rational>(w, 2, 6);
            if (s.coeff(w) != Rational(1)) return false;
            for (const auto& [u, x] : s.terms()) {
                if (degree(u) != degree(w)) return false;
                if (u != w && !GradedLexLess{}(w, u)) return false;
            }
        }
        return true;
    });

    const int m = 2, N = 5;
    for (int i = 0; i < opts.cases; ++i) {
        const int d = rng.uniform(1, N);
        auto basis = enumerate_lyndon(m, d);
        LieQ e(m, N);
        for (int k = 0; k < 3; ++k) {
            const auto& w = basis[rng.uniform(0, static_cast<int>(basis.size()) - 1)];
            if (degree(w) == d) e.add_coeff(w, rng.rational());
        }
        auto s = lie_to_series(e);
        if (i % 2 == 1) s.add_coeff(rng.word(m, d), rng.nonzero_rational());

        bool production;
        std::map<Word, Rational, GradedLexLess> prod_coords;
        try {
            prod_coords = series_to_lie(s).coords();
            production = true;
        } catch (const NotLieElement&) {
            production = false;
        }
        c.run(case_tag("membership agrees with the Dynkin criterion", i),
              [&] { return production == oracle::dynkin_is_lie(s); });
        c.run(case_tag("membership agrees with the linear-algebra projection", i), [&] {
            auto coords = oracle::lyndon_coordinates(oracle::dense_of_series(s));
            if (production != coords.has_value()) return false;
            return !production || *coords == prod_coords;
        });
    }
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"ring",    "eg-axioms",     "bch",
                                                "collect", "hall-petresco", "functor",
                                                "solver",  "lyndon"};
    return names;
}

VerifyReport run_verify_suite(const std::string& name, const VerifyOptions& opts) {
    Checker c(name, opts.seed);
    Rng rng(opts.seed);
    if (name == "ring")
        suite_ring(c, rng, opts);
    else if (name == "eg-axioms")
        suite_eg(c, rng, opts);
    else if (name == "bch")
        suite_bch(c, rng, opts);
    else if (name == "collect")
        suite_collect(c, rng, opts);
    else if (name == "hall-petresco")
        suite_hall_petresco(c, rng, opts);
    else if (name == "functor")
        suite_functor(c, rng, opts);
    else if (name == "solver")
        suite_solver(c, rng, opts);
    else if (name == "lyndon")
        suite_lyndon(c, rng, opts);
    else
        throw ParseError("unknown verify suite: " + name);
    return c.report();
}

}  // namespace malcev
