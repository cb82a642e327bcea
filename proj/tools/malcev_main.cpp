#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "malcev/hall_petresco.hpp"
#include "malcev/io.hpp"
#include "malcev/term.hpp"
#include "malcev/verify.hpp"

// Exit codes: 0 success, 2 parse or usage problems, 3 violated domain
// preconditions, 4 failed property checks. Every failure prints a JSON
// error record on stderr; results go to stdout in the format selected by
// --format.

namespace {

using namespace malcev;

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitProperty = 4;

struct PropertyFailure {
    io::json doc;
};

void emit(const io::json& doc, const std::string& format) {
    std::cout << io::render(doc, io::parse_format(format));
}

TruncatedSeries<Rational> load_series(const std::string& path) {
    return io::parse_series<Rational>(io::parse_any(io::read_input(path)));
}

int run_bch(const std::string& a_path, const std::string& b_path, const std::string& format) {
    auto a = load_series(a_path), b = load_series(b_path);
    emit(io::lie_doc(bch(a, b)), format);
    return 0;
}

int run_exp(const std::string& path, const std::string& format) {
    emit(io::series_doc(exp(load_series(path)).series()), format);
    return 0;
}

int run_log(const std::string& path, const std::string& format) {
    emit(io::series_doc(log(GroupElement<Rational>(load_series(path)))), format);
    return 0;
}

int run_power(const std::string& path, const std::string& exponent, const std::string& format) {
    auto s = load_series(path);
    bool rational_exponent = true;
    Rational r;
    try {
        r = Rational::parse(exponent);
    } catch (const ParseError&) {
        rational_exponent = false;
    }
    if (rational_exponent) {
        emit(io::series_doc(group_power(GroupElement<Rational>(s), r).series()), format);
    } else {
        // A polynomial exponent lifts the computation to Q[l] scalars.
        auto lifted = GroupElement<UniPoly>(lift_to_unipoly(s));
        emit(io::series_doc(group_power(lifted, UniPoly::parse(exponent)).series()), format);
    }
    return 0;
}

int run_collect(const std::string& path, bool check_roundtrip, const std::string& format) {
    auto s = load_series(path);
    GroupElement<Rational> q(s);
    auto d = collect(q);
    if (check_roundtrip && expand(d, q.num_generators(), q.truncation_order()) != q)
        throw PropertyFailure{io::error_doc("RoundTripFailure",
                                            "expand(collect(Q)) differs from Q")};
    emit(io::decomposition_doc(d, q.num_generators(), q.truncation_order()), format);
    return 0;
}

int run_expand(const std::string& path, const std::string& format) {
    int m = 0, N = 0;
    auto d = io::parse_decomposition<Rational>(io::parse_any(io::read_input(path)), m, N);
    emit(io::series_doc(expand(d, m, N).series()), format);
    return 0;
}

int run_lyndon(int m, int max_degree, const std::string& format) {
    emit(io::lyndon_words_doc(m, max_degree, enumerate_lyndon(m, max_degree)), format);
    return 0;
}

int run_dims(int m, int max_degree, const std::string& format) {
    std::vector<int> counts(max_degree);
    for (const auto& w : enumerate_lyndon(m, max_degree)) ++counts[degree(w) - 1];
    emit(io::dims_doc(m, max_degree, counts), format);
    return 0;
}

int run_term(const std::string& text, int m, int c, const std::string& format) {
    auto t = parse_term(text);
    int vars = std::max(m, t->max_variable() + 1);
    auto [lie, gw] = lie_term_truncations(*t, vars, c);
    emit(io::term_doc(vars, c, lie, group_word_str(*gw)), format);
    return 0;
}

int run_hall_petresco(int n, int c, const std::string& format) {
    auto taus = hall_petresco_tau(n, c);
    bool verified = verify_hall_petresco(n, c);
    emit(io::hall_petresco_doc(n, c, taus, verified), format);
    return verified ? 0 : kExitProperty;
}

int run_solve(const std::string& equation_path, const std::string& algebra_ref,
              const std::string& format) {
    auto eq = io::parse_equation(io::parse_any(io::read_input(equation_path)));
    std::string ref = algebra_ref.empty() ? eq.algebra_ref : algebra_ref;
    if (ref.empty())
        throw ParseError("no algebra reference: pass --algebra or set one in the document");
    auto a = io::resolve_algebra(ref);
    Vec f = solve_group_equation(a, eq.gs, eq.lambdas);

    Vec r = eq.gs.at(0);
    r = gr_mul(a, r, gr_power(a, f, eq.lambdas.at(0)));
    for (std::size_t k = 1; k < eq.gs.size(); ++k)
        r = gr_mul(a, gr_mul(a, r, eq.gs[k]), gr_power(a, f, eq.lambdas[k]));
    emit(io::solution_doc(f, r), format);
    return 0;
}

int run_verify(const std::string& suite, const VerifyOptions& opts, const std::string& format) {
    auto rep = run_verify_suite(suite, opts);
    emit(io::report_doc(rep.suite, rep.seed, rep.cases, rep.passed, rep.failed,
                        rep.first_failure),
         format);
    return rep.ok() ? 0 : kExitProperty;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for the truncated Lie/group correspondence"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    std::function<int()> action;

    {
        auto* cmd = app.add_subcommand("bch", "Lyndon coordinates of log(exp(a) exp(b))");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        cmd->add_option("a", *a, "first series document (path or -)")->required();
        cmd->add_option("b", *b, "second series document (path or -)")->required();
        cmd->callback([&, a, b] { action = [&, a, b] { return run_bch(*a, *b, format); }; });
    }
    {
        auto* cmd = app.add_subcommand("exp", "exponential of a series without constant term");
        auto p = std::make_shared<std::string>();
        cmd->add_option("series", *p, "series document (path or -)")->required();
        cmd->callback([&, p] { action = [&, p] { return run_exp(*p, format); }; });
    }
    {
        auto* cmd = app.add_subcommand("log", "logarithm of a series with unit constant term");
        auto p = std::make_shared<std::string>();
        cmd->add_option("series", *p, "series document (path or -)")->required();
        cmd->callback([&, p] { action = [&, p] { return run_log(*p, format); }; });
    }
    {
        auto* cmd = app.add_subcommand("power", "scalar power exp(lambda log g)");
        auto p = std::make_shared<std::string>();
        auto e = std::make_shared<std::string>("1");
        cmd->add_option("series", *p, "series document (path or -)")->required();
        cmd->add_option("--exponent", *e, "rational p/q or polynomial in l")->required();
        cmd->callback([&, p, e] { action = [&, p, e] { return run_power(*p, *e, format); }; });
    }
    {
        auto* cmd = app.add_subcommand("collect", "ordered Lyndon-commutator decomposition");
        auto p = std::make_shared<std::string>();
        auto chk = std::make_shared<bool>(false);
        cmd->add_option("series", *p, "group element document (path or -)")->required();
        cmd->add_flag("--verify", *chk, "re-expand the decomposition and compare");
        cmd->callback(
            [&, p, chk] { action = [&, p, chk] { return run_collect(*p, *chk, format); }; });
    }
    {
        auto* cmd = app.add_subcommand("expand", "product of a commutator-power decomposition");
        auto p = std::make_shared<std::string>();
        cmd->add_option("decomposition", *p, "decomposition document (path or -)")->required();
        cmd->callback([&, p] { action = [&, p] { return run_expand(*p, format); }; });
    }
    {
        auto* cmd = app.add_subcommand("lyndon", "Lyndon words up to a degree");
        auto m = std::make_shared<int>(2);
        auto d = std::make_shared<int>(3);
        cmd->add_option("--generators", *m, "alphabet size")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-degree", *d, "largest degree")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->callback([&, m, d] { action = [&, m, d] { return run_lyndon(*m, *d, format); }; });
    }
    {
        auto* cmd = app.add_subcommand("dims", "graded dimensions of the free Lie algebra");
        auto m = std::make_shared<int>(2);
        auto d = std::make_shared<int>(3);
        cmd->add_option("--generators", *m, "alphabet size")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-degree", *d, "largest degree")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->callback([&, m, d] { action = [&, m, d] { return run_dims(*m, *d, format); }; });
    }
    {
        auto* cmd = app.add_subcommand("term", "compile a mixed term to normal forms");
        auto t = std::make_shared<std::string>();
        auto m = std::make_shared<int>(0);
        auto c = std::make_shared<int>(2);
        cmd->add_option("term", *t, "term text, e.g. x0*x1+[x0,x1]")->required();
        cmd->add_option("--generators", *m, "variable count (default: inferred)");
        cmd->add_option("--class", *c, "nilpotency class")->required()->check(CLI::PositiveNumber);
        cmd->callback(
            [&, t, m, c] { action = [&, t, m, c] { return run_term(*t, *m, *c, format); }; });
    }
    {
        auto* cmd = app.add_subcommand("hall-petresco", "tau words and the symbolic identity");
        auto n = std::make_shared<int>(2);
        auto c = std::make_shared<int>(3);
        cmd->add_option("--n", *n, "number of group generators")
            ->required()
            ->check(CLI::Range(2, 1 << 20));
        cmd->add_option("--class", *c, "truncation class")
            ->required()
            ->check(CLI::Range(2, 1 << 20));
        cmd->callback(
            [&, n, c] { action = [&, n, c] { return run_hall_petresco(*n, *c, format); }; });
    }
    {
        auto* cmd = app.add_subcommand("solve", "unique root of g1 f^l1 ... gn f^ln = 1");
        auto p = std::make_shared<std::string>();
        auto alg = std::make_shared<std::string>();
        cmd->add_option("equation", *p, "equation document (path or -)")->required();
        cmd->add_option("--algebra", *alg,
                        "algebra reference: heisenberg, abelian:d, free:m:c, or a path");
        cmd->callback(
            [&, p, alg] { action = [&, p, alg] { return run_solve(*p, *alg, format); }; });
    }
    {
        auto* cmd = app.add_subcommand("verify", "run a property suite");
        auto suite = std::make_shared<std::string>();
        auto opts = std::make_shared<VerifyOptions>();
        cmd->add_option("suite", *suite, "ring, eg-axioms, bch, collect, hall-petresco, functor, solver, lyndon")
            ->required();
        cmd->add_option("--seed", opts->seed, "deterministic seed");
        cmd->add_option("--cases", opts->cases, "randomized iterations")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--n", opts->hp_generators, "hall-petresco generator count");
        cmd->add_option("--class", opts->hp_class, "hall-petresco class");
        cmd->callback([&, suite, opts] {
            action = [&, suite, opts] { return run_verify(*suite, *opts, format); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        return action();
    } catch (const PropertyFailure& e) {
        std::cerr << e.doc.dump() << "\n";
        return kExitProperty;
    } catch (const ParseError& e) {
        std::cerr << io::error_doc(e.code(), e.what()).dump() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << io::error_doc(e.code(), e.what()).dump() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << io::error_doc("InternalError", e.what()).dump() << "\n";
        return 1;
    }
}
