#include "malcev/models.hpp"

#include <algorithm>

namespace malcev {

namespace {

Vec zero_vec(int d) {
    return Vec(d);
}

}  // namespace

SCLieAlgebra::SCLieAlgebra(int dim, std::vector<std::string> labels, const BracketTable& brackets)
    : dim_(dim), labels_(std::move(labels)) {
    if (dim < 1) throw ShapeMismatch("dimension must be >= 1");
    if (labels_.empty())
        for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
    if (static_cast<int>(labels_.size()) != dim)
        throw ShapeMismatch("label count differs from dimension");

    table_.assign(dim, std::vector<Vec>(dim, zero_vec(dim)));
    for (const auto& [ij, coeffs] : brackets) {
        auto [i, j] = ij;
        if (i < 0 || j < 0 || i >= dim || j >= dim)
            throw ShapeMismatch("bracket index outside basis");
        if (i >= j)
            throw ShapeMismatch("bracket table expects i < j entries");
        if (static_cast<int>(coeffs.size()) != dim)
            throw ShapeMismatch("bracket coefficient vector has wrong length");
        table_[i][j] = coeffs;
        table_[j][i] = vec_scale(Rational(-1), coeffs);
    }

    // Jacobi on basis triples; bilinearity extends it everywhere.
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k) {
                Vec s = bracket(table_[i][j], basis_vector(k));
                s = vec_add(std::move(s), bracket(table_[j][k], basis_vector(i)));
                s = vec_add(std::move(s), bracket(table_[k][i], basis_vector(j)));
                if (!vec_is_zero(s))
                    throw JacobiViolation("jacobi fails on basis triple (" + std::to_string(i) +
                                          "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }

    // Lower central series by bracket spans; strictly decreasing dimension
    // until empty, or the algebra is not nilpotent.
    Mat full;
    for (int i = 0; i < dim; ++i) full.push_back(basis_vector(i));
    lcs_.push_back(rref(std::move(full)));
    while (!lcs_.back().empty()) {
        Mat next;
        for (int i = 0; i < dim; ++i)
            for (const auto& b : lcs_.back()) {
                Vec v = bracket(basis_vector(i), b);
                if (!vec_is_zero(v)) next.push_back(std::move(v));
            }
        next = rref(std::move(next));
        if (next.size() >= lcs_.back().size())
            throw NotNilpotent("lower central series stabilizes at dimension " +
                               std::to_string(next.size()));
        lcs_.push_back(std::move(next));
    }
    class_ = static_cast<int>(lcs_.size()) - 1;
    adapted_ = adapted_layers(lcs_);

    bch_ = bch(LieElement<Rational>::generator(2, class_, 0),
               LieElement<Rational>::generator(2, class_, 1));
}

Vec SCLieAlgebra::basis_vector(int i) const {
    Vec v = zero_vec(dim_);
    v[i] = Rational(1);
    return v;
}

Vec SCLieAlgebra::bracket(const Vec& a, const Vec& b) const {
    if (static_cast<int>(a.size()) != dim_ || static_cast<int>(b.size()) != dim_)
        throw ShapeMismatch("vector length differs from algebra dimension");
    Vec out = zero_vec(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (b[j].is_zero() || i == j) continue;
            Rational c = a[i] * b[j];
            out = vec_add(std::move(out), vec_scale(c, table_[i][j]));
        }
    }
    return out;
}

SCLieAlgebra SCLieAlgebra::abelian(int d) {
    return SCLieAlgebra(d, {}, {});
}

SCLieAlgebra SCLieAlgebra::heisenberg() {
    BracketTable t;
    t[{0, 1}] = Vec{Rational(0), Rational(0), Rational(1)};
    return SCLieAlgebra(3, {"e0", "e1", "e2"}, t);
}

SCLieAlgebra SCLieAlgebra::free_nilpotent(int m, int c) {
    auto words = enumerate_lyndon(m, c);
    const int dim = static_cast<int>(words.size());
    std::map<Word, int, GradedLexLess> index;
    std::vector<std::string> labels;
    for (int i = 0; i < dim; ++i) {
        index.emplace(words[i], i);
        labels.push_back("X" + word_str(words[i]));
    }

    BracketTable table;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            if (degree(words[i]) + degree(words[j]) > c) continue;
            auto s = lie_bracket(lyndon_bracket_series<Rational>(words[i], m, c),
                                 lyndon_bracket_series<Rational>(words[j], m, c));
            if (s.is_zero()) continue;
            Vec coeffs = zero_vec(dim);
            auto lie = series_to_lie(s);
            for (const auto& [w, x] : lie.coords()) coeffs[index.at(w)] = x;
            table[{i, j}] = std::move(coeffs);
        }
    return SCLieAlgebra(dim, std::move(labels), table);
}

namespace {

Vec eval_bracketed_model(const SCLieAlgebra& a, const BracketedWord& t,
                         const std::vector<Vec>& args) {
    if (t.is_leaf()) return args[t.letter];
    return a.bracket(eval_bracketed_model(a, *t.left, args),
                     eval_bracketed_model(a, *t.right, args));
}

}  // namespace

Vec evaluate_lie(const SCLieAlgebra& a, const LieElement<Rational>& e,
                 const std::vector<Vec>& args) {
    if (static_cast<int>(args.size()) != e.num_generators())
        throw ArityMismatch("evaluation expects " + std::to_string(e.num_generators()) +
                            " arguments, got " + std::to_string(args.size()));
    if (e.truncation_order() < a.nilpotency_class())
        throw TruncationTooSmall("element truncation " + std::to_string(e.truncation_order()) +
                                 " below nilpotency class " +
                                 std::to_string(a.nilpotency_class()));
    for (const auto& v : args)
        if (static_cast<int>(v.size()) != a.dimension())
            throw ShapeMismatch("argument length differs from algebra dimension");
    Vec out = zero_vec(a.dimension());
    for (const auto& [w, c] : e.coords()) {
        if (degree(w) > a.nilpotency_class()) break;  // deeper brackets vanish
        Vec v = eval_bracketed_model(a, *bracketing(w), args);
        out = vec_add(std::move(out), vec_scale(c, std::move(v)));
    }
    return out;
}

Vec evaluate_lie(const SCLieAlgebra& a, const TruncatedSeries<Rational>& p,
                 const std::vector<Vec>& args) {
    return evaluate_lie(a, series_to_lie(p), args);
}

Vec gr_mul(const SCLieAlgebra& a, const Vec& x, const Vec& y) {
    return evaluate_lie(a, a.bch_element(), {x, y});
}

Vec gr_power(const SCLieAlgebra& a, const Vec& x, const Rational& lambda) {
    if (static_cast<int>(x.size()) != a.dimension())
        throw ShapeMismatch("vector length differs from algebra dimension");
    return vec_scale(lambda, x);
}

Vec gr_commutator(const SCLieAlgebra& a, const Vec& x, const Vec& y) {
    Vec minus_x = vec_scale(Rational(-1), x);
    Vec minus_y = vec_scale(Rational(-1), y);
    return gr_mul(a, gr_mul(a, gr_mul(a, minus_x, minus_y), x), y);
}

Vec evaluate_term(const SCLieAlgebra& a, const MixedTerm& t, const std::vector<Vec>& args) {
    switch (t.kind) {
        case MixedTerm::Kind::Var:
            if (t.index < 0 || t.index >= static_cast<int>(args.size()))
                throw ArityMismatch("term variable outside argument tuple");
            return args[t.index];
        case MixedTerm::Kind::Zero:
            return zero_vec(a.dimension());
        case MixedTerm::Kind::Add:
            return vec_add(evaluate_term(a, *t.a, args), evaluate_term(a, *t.b, args));
        case MixedTerm::Kind::Bracket:
            return a.bracket(evaluate_term(a, *t.a, args), evaluate_term(a, *t.b, args));
        case MixedTerm::Kind::GroupMul:
            return gr_mul(a, evaluate_term(a, *t.a, args), evaluate_term(a, *t.b, args));
        case MixedTerm::Kind::Scale:
            return vec_scale(t.scalar, evaluate_term(a, *t.a, args));
    }
    throw std::logic_error("unreachable term kind");
}

Vec evaluate_group_word(const SCLieAlgebra& a, const GroupWord& w, const std::vector<Vec>& args) {
    switch (w.kind) {
        case GroupWord::Kind::Unit:
            return zero_vec(a.dimension());
        case GroupWord::Kind::Var:
            if (w.index < 0 || w.index >= static_cast<int>(args.size()))
                throw ArityMismatch("group word variable outside argument tuple");
            return args[w.index];
        case GroupWord::Kind::Mul:
            return gr_mul(a, evaluate_group_word(a, *w.a, args), evaluate_group_word(a, *w.b, args));
        case GroupWord::Kind::Inv:
            return vec_scale(Rational(-1), evaluate_group_word(a, *w.a, args));
        case GroupWord::Kind::Power:
            return gr_power(a, evaluate_group_word(a, *w.a, args), w.exponent);
        case GroupWord::Kind::Comm:
            return gr_commutator(a, evaluate_group_word(a, *w.a, args),
                                 evaluate_group_word(a, *w.b, args));
    }
    throw std::logic_error("unreachable group word kind");
}

SCLieAlgebra lie_from_group_ops(const SCLieAlgebra& a) {
    const int c = a.nilpotency_class();
    const int dim = a.dimension();
    auto sum_word = decomposition_group_word(mls_sum_formula(c));
    // A class-1 algebra has no degree-2 room: the collected bracket
    // formula is empty and the bracket is identically zero.
    auto bracket_word =
        decomposition_group_word(c >= 2 ? mls_bracket_formula(c) : MlsDecomposition<Rational>{});

    auto radd = [&](const Vec& x, const Vec& y) {
        return evaluate_group_word(a, *sum_word, {x, y});
    };
    auto rbracket = [&](const Vec& x, const Vec& y) {
        return evaluate_group_word(a, *bracket_word, {x, y});
    };

    SCLieAlgebra::BracketTable table;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Vec ei = a.basis_vector(i), ej = a.basis_vector(j);
            if (radd(ei, ej) != vec_add(ei, ej))
                throw ReconstructionMismatch("reconstructed addition differs at basis pair (" +
                                             std::to_string(i) + "," + std::to_string(j) + ")");
            if (i < j) {
                Vec br = rbracket(ei, ej);
                if (!vec_is_zero(br)) table[{i, j}] = std::move(br);
            }
        }

    try {
        SCLieAlgebra out(dim, a.labels(), table);
        if (out != a)
            throw ReconstructionMismatch("reconstructed structure constants differ");
        return out;
    } catch (const ReconstructionMismatch&) {
        throw;
    } catch (const Error& e) {
        throw ReconstructionMismatch(std::string("reconstructed table is not a valid algebra: ") +
                                     e.what());
    }
}

std::vector<Mat> group_lcs(const SCLieAlgebra& a) {
    const int dim = a.dimension();
    std::vector<Mat> chain;
    Mat full;
    for (int i = 0; i < dim; ++i) full.push_back(a.basis_vector(i));
    chain.push_back(rref(std::move(full)));

    while (!chain.back().empty()) {
        // Seed with commutators of basis elements against the previous
        // stage, then saturate: the span must absorb commutators with all
        // basis elements before it is the next ideal of the chain.
        Mat next;
        for (int i = 0; i < dim; ++i)
            for (const auto& b : chain.back()) {
                Vec v = gr_commutator(a, a.basis_vector(i), b);
                if (!vec_is_zero(v)) next.push_back(std::move(v));
            }
        next = rref(std::move(next));
        bool grew = true;
        while (grew) {
            grew = false;
            for (int i = 0; i < dim && !grew; ++i)
                for (const auto& w : next) {
                    Vec v = gr_commutator(a, a.basis_vector(i), w);
                    if (!in_span(next, v)) {
                        next.push_back(std::move(v));
                        next = rref(std::move(next));
                        grew = true;
                        break;
                    }
                }
        }
        if (next.size() >= chain.back().size())
            throw std::logic_error("group lower central series failed to descend");
        chain.push_back(std::move(next));
    }

    if (chain != a.lower_central_series())
        throw std::logic_error("group and Lie lower central series disagree");
    return chain;
}

Rational augmentation(const LieElement<Rational>& t) {
    return t.coeff(Word{t.num_generators() - 1});
}

Vec solve_equation(const SCLieAlgebra& a, const LieElement<Rational>& t,
                   const std::vector<Vec>& args) {
    const int l = t.num_generators() - 1;
    if (static_cast<int>(args.size()) != l)
        throw ArityMismatch("equation expects " + std::to_string(l) + " parameters, got " +
                            std::to_string(args.size()));
    Rational e = augmentation(t);
    if (e.is_zero())
        throw SingularEquation("augmentation of the equation term is zero");

    const auto& layers = a.adapted();
    Vec f = zero_vec(a.dimension());
    for (int d = 1; d <= a.nilpotency_class(); ++d) {
        std::vector<Vec> full_args = args;
        full_args.push_back(f);
        Vec r = evaluate_lie(a, t, full_args);
        if (vec_is_zero(r)) break;
        auto comps = layer_components(layers, r);
        for (int k = 0; k + 1 < d; ++k)
            if (!vec_is_zero(comps[k]))
                throw NonConvergence("residual escapes filtration at depth " + std::to_string(d));
        Vec delta = vec_scale(-e.inverse(), comps[d - 1]);
        f = gr_mul(a, f, delta);
    }

    std::vector<Vec> full_args = args;
    full_args.push_back(f);
    if (!vec_is_zero(evaluate_lie(a, t, full_args)))
        throw NonConvergence("nonzero residual after full lifting");
    return f;
}

Vec solve_group_equation(const SCLieAlgebra& a, const std::vector<Vec>& gs,
                         const std::vector<Rational>& lambdas) {
    if (gs.empty() || gs.size() != lambdas.size())
        throw ArityMismatch("need matching nonempty factor lists");
    Rational total;
    for (const auto& l : lambdas) total += l;
    if (total.is_zero())
        throw SingularEquation("exponent sum vanishes");

    const int n = static_cast<int>(gs.size());
    auto y = MixedTerm::variable(n);
    MixedTerm::Ptr t;
    for (int i = 0; i < n; ++i) {
        auto gi = MixedTerm::variable(i);
        t = t ? MixedTerm::mul(std::move(t), std::move(gi)) : std::move(gi);
        t = MixedTerm::mul(std::move(t), MixedTerm::scale(lambdas[i], y));
    }
    auto lie_t = term_to_lie(*t, n + 1, a.nilpotency_class());
    Vec f = solve_equation(a, lie_t, gs);

    Vec residual = gs[0];
    residual = gr_mul(a, residual, gr_power(a, f, lambdas[0]));
    for (int i = 1; i < n; ++i) {
        residual = gr_mul(a, residual, gs[i]);
        residual = gr_mul(a, residual, gr_power(a, f, lambdas[i]));
    }
    if (!vec_is_zero(residual))
        throw NonConvergence("group word residual is not the unit");
    return f;
}

}  // namespace malcev
