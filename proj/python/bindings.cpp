#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "malcev/group.hpp"
#include "malcev/hall_petresco.hpp"
#include "malcev/io.hpp"
#include "malcev/models.hpp"
#include "malcev/term.hpp"
#include "malcev/verify.hpp"

namespace py = pybind11;
using namespace malcev;

namespace {

using Series = TruncatedSeries<Rational>;
using Lie = LieElement<Rational>;

std::vector<std::pair<Word, std::string>> series_terms(const Series& s) {
    std::vector<std::pair<Word, std::string>> out;
    for (const auto& [w, c] : s.terms()) out.emplace_back(w, c.str());
    return out;
}

std::vector<std::pair<Word, std::string>> lie_terms(const Lie& e) {
    std::vector<std::pair<Word, std::string>> out;
    for (const auto& [w, c] : e.coords()) out.emplace_back(w, c.str());
    return out;
}

Vec vec_of_strings(const std::vector<std::string>& xs) {
    Vec v;
    v.reserve(xs.size());
    for (const auto& x : xs) v.push_back(Rational::parse(x));
    return v;
}

std::vector<std::string> strings_of_vec(const Vec& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact truncated free Lie algebra and nilpotent group engine";

    py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError&) {
            throw;  // handled by the registered exception above
        } catch (const Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    py::class_<Series>(mod, "Series")
        .def(py::init<int, int>(), py::arg("generators"), py::arg("truncation"))
        .def_static("unit", &Series::unit)
        .def_static("generator", &Series::generator)
        .def_property_readonly("generators", &Series::num_generators)
        .def_property_readonly("truncation", &Series::truncation_order)
        .def("coeff", [](const Series& s, const Word& w) { return s.coeff(w).str(); })
        .def("set_coeff",
             [](Series& s, const Word& w, const std::string& c) {
                 s.set_coeff(w, Rational::parse(c));
             })
        .def("terms", &series_terms)
        .def("__add__", [](const Series& a, const Series& b) { return a + b; })
        .def("__sub__", [](const Series& a, const Series& b) { return a - b; })
        .def("__mul__", [](const Series& a, const Series& b) { return a * b; })
        .def("__neg__", [](const Series& a) { return -a; })
        .def("scaled", [](const Series& a, const std::string& c) { return a * Rational::parse(c); })
        .def("__eq__", [](const Series& a, const Series& b) { return a == b; })
        .def("__repr__", [](const Series& s) { return io::series_doc(s).dump(); });

    py::class_<Lie>(mod, "Lie")
        .def(py::init<int, int>(), py::arg("generators"), py::arg("truncation"))
        .def_static("generator", &Lie::generator)
        .def_property_readonly("generators", &Lie::num_generators)
        .def_property_readonly("truncation", &Lie::truncation_order)
        .def("coeff", [](const Lie& e, const Word& w) { return e.coeff(w).str(); })
        .def("set_coeff",
             [](Lie& e, const Word& w, const std::string& c) {
                 e.set_coeff(w, Rational::parse(c));
             })
        .def("terms", &lie_terms)
        .def("__add__", [](const Lie& a, const Lie& b) { return a + b; })
        .def("__sub__", [](const Lie& a, const Lie& b) { return a - b; })
        .def("__neg__", [](const Lie& a) { return -a; })
        .def("__eq__", [](const Lie& a, const Lie& b) { return a == b; })
        .def("__repr__", [](const Lie& e) { return io::lie_doc(e).dump(); });

    mod.def("exp", [](const Series& eps) { return exp(eps).series(); },
            "Group exponential; the argument needs valuation >= 1.");
    mod.def("log", [](const Series& g) { return log(GroupElement<Rational>(g)); },
            "Group logarithm; the argument needs constant term 1.");
    mod.def(
        "power",
        [](const Series& g, const std::string& lambda) {
            return group_power(GroupElement<Rational>(g), Rational::parse(lambda)).series();
        },
        py::arg("g"), py::arg("exponent"));
    mod.def("inverse",
            [](const Series& g) { return group_inv(GroupElement<Rational>(g)).series(); });
    mod.def("bch", [](const Series& a, const Series& b) { return bch(a, b); },
            "log(exp(a) exp(b)) in Lyndon coordinates.");
    mod.def("lie_to_series", [](const Lie& e) { return lie_to_series(e); });
    mod.def("series_to_lie", [](const Series& s) { return series_to_lie(s); });
    mod.def("lie_bracket", [](const Series& a, const Series& b) { return lie_bracket(a, b); });

    mod.def("collect", [](const Series& g) {
        std::vector<std::pair<Word, std::string>> out;
        for (const auto& f : collect(GroupElement<Rational>(g)))
            out.emplace_back(f.word, f.exponent.str());
        return out;
    });
    mod.def("expand",
            [](const std::vector<std::pair<Word, std::string>>& factors, int m, int N) {
                MlsDecomposition<Rational> d;
                for (const auto& [w, e] : factors) d.push_back({w, Rational::parse(e)});
                return expand(d, m, N).series();
            });

    mod.def("lyndon_words", &enumerate_lyndon, py::arg("generators"), py::arg("max_degree"));

    mod.def("hall_petresco_verified", &verify_hall_petresco, py::arg("generators"),
            py::arg("nilpotency_class"));

    mod.def(
        "compile_term",
        [](const std::string& text, int c, int generators) {
            auto t = parse_term(text);
            int m = std::max(generators, t->max_variable() + 1);
            auto [lie, gw] = lie_term_truncations(*t, m, c);
            return std::make_pair(lie, group_word_str(*gw));
        },
        py::arg("term"), py::arg("nilpotency_class"), py::arg("generators") = 1);

    mod.def(
        "solve",
        [](const std::string& algebra, const std::vector<std::vector<std::string>>& gs,
           const std::vector<std::string>& lambdas) {
            auto a = io::resolve_algebra(algebra);
            std::vector<Vec> gv;
            gv.reserve(gs.size());
            for (const auto& g : gs) gv.push_back(vec_of_strings(g));
            std::vector<Rational> lv;
            lv.reserve(lambdas.size());
            for (const auto& l : lambdas) lv.push_back(Rational::parse(l));
            return strings_of_vec(solve_group_equation(a, gv, lv));
        },
        py::arg("algebra"), py::arg("gs"), py::arg("lambdas"),
        "Solves g_1 f^l_1 ... g_n f^l_n = 1 in Gr of the named algebra.");

    mod.def(
        "run_verify",
        [](const std::string& suite, std::uint64_t seed, int cases) {
            VerifyOptions opts;
            opts.seed = seed;
            opts.cases = cases;
            auto r = run_verify_suite(suite, opts);
            py::dict d;
            d["suite"] = r.suite;
            d["seed"] = r.seed;
            d["cases"] = r.cases;
            d["passed"] = r.passed;
            d["failed"] = r.failed;
            d["first_failure"] = r.first_failure;
            d["ok"] = r.ok();
            return d;
        },
        py::arg("suite"), py::arg("seed") = 20240101, py::arg("cases") = 25);
}
