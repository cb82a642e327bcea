// Drives the command-line binary end to end: exit codes, both output
// formats, determinism, and round trips through the document layer.
// argv[1] is the path of the binary under test.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "malcev/collect.hpp"
#include "malcev/group.hpp"
#include "malcev/io.hpp"

#define REQUIRE(cond)                                                                       \
    do {                                                                                    \
        if (!(cond))                                                                        \
            throw std::runtime_error(std::string(__FILE__) + ":" + std::to_string(__LINE__) + \
                                     ": " #cond);                                           \
    } while (0)

namespace {

using namespace malcev;
using io::json;
using SeriesQ = TruncatedSeries<Rational>;

std::string g_bin;
std::string g_dir;

std::string path_of(const std::string& name) { return g_dir + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    spit(path_of("stdin.txt"), stdin_text);
    std::string cmd = "\"" + g_bin + "\" " + args + " < " + path_of("stdin.txt") + " > " +
                      path_of("stdout.txt") + " 2> " + path_of("stderr.txt");
    int status = std::system(cmd.c_str());
    int code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, slurp(path_of("stdout.txt")), slurp(path_of("stderr.txt"))};
}

std::string write_doc(const std::string& name, const json& doc) {
    spit(path_of(name), io::render(doc, io::Format::Json));
    return path_of(name);
}

std::string error_code_of(const std::string& stderr_text) {
    return json::parse(stderr_text).at("error").get<std::string>();
}

void test_usage() {
    REQUIRE(run_cli("--help").exit_code == 0);
    REQUIRE(run_cli("").exit_code == 2);
    REQUIRE(run_cli("frobnicate").exit_code == 2);
    REQUIRE(run_cli("lyndon --generators 2").exit_code == 2);  // missing required option
    auto bad_format = run_cli("--format xml dims --generators 2 --max-degree 3");
    REQUIRE(bad_format.exit_code == 2);
}

void test_bch() {
    auto a = write_doc("a.json", io::series_doc(SeriesQ::generator(2, 2, 0)));
    auto b = write_doc("b.json", io::series_doc(SeriesQ::generator(2, 2, 1)));

    auto first = run_cli("bch " + a + " " + b);
    REQUIRE(first.exit_code == 0);
    auto lie = io::parse_lie<Rational>(io::parse_any(first.out));
    REQUIRE(lie.coeff(Word{0}) == Rational(1));
    REQUIRE(lie.coeff(Word{1}) == Rational(1));
    REQUIRE(lie.coeff(Word{0, 1}) == Rational(1, 2));
    REQUIRE(lie.coords().size() == 3);

    auto again = run_cli("bch " + a + " " + b);
    REQUIRE(again.exit_code == 0);
    REQUIRE(again.out == first.out);  // byte-identical reruns

    auto text = run_cli("--format text bch " + a + " " + b);
    REQUIRE(text.exit_code == 0);
    REQUIRE(io::parse_any(text.out) == io::parse_any(first.out));
}

void test_exp_log() {
    auto x = write_doc("x.json", io::series_doc(SeriesQ::generator(1, 3, 0)));
    auto r = run_cli("exp " + x);
    REQUIRE(r.exit_code == 0);
    SeriesQ expected(1, 3);
    expected.set_coeff(Word{}, Rational(1));
    expected.set_coeff(Word{0}, Rational(1));
    expected.set_coeff(Word{0, 0}, Rational(1, 2));
    expected.set_coeff(Word{0, 0, 0}, Rational(1, 6));
    REQUIRE(io::parse_series<Rational>(io::parse_any(r.out)) == expected);

    auto back = write_doc("expx.json", io::parse_any(r.out));
    auto lg = run_cli("log " + back);
    REQUIRE(lg.exit_code == 0);
    REQUIRE(io::parse_series<Rational>(io::parse_any(lg.out)) == SeriesQ::generator(1, 3, 0));

    SeriesQ one_plus = SeriesQ::unit(1, 3) + SeriesQ::generator(1, 3, 0);
    auto lg2 = run_cli("log " + write_doc("oneplus.json", io::series_doc(one_plus)));
    SeriesQ log_expected(1, 3);
    log_expected.set_coeff(Word{0}, Rational(1));
    log_expected.set_coeff(Word{0, 0}, Rational(-1, 2));
    log_expected.set_coeff(Word{0, 0, 0}, Rational(1, 3));
    REQUIRE(lg2.exit_code == 0);
    REQUIRE(io::parse_series<Rational>(io::parse_any(lg2.out)) == log_expected);

    // exp needs a series without constant term.
    auto bad = run_cli("exp " + write_doc("unit.json", io::series_doc(SeriesQ::unit(1, 3))));
    REQUIRE(bad.exit_code == 3);
    REQUIRE(error_code_of(bad.err) == "ValuationZero");
}

void test_power() {
    SeriesQ one_plus = SeriesQ::unit(1, 2) + SeriesQ::generator(1, 2, 0);
    auto g = write_doc("g.json", io::series_doc(one_plus));

    auto half = run_cli("power " + g + " --exponent 1/2");
    REQUIRE(half.exit_code == 0);
    SeriesQ expected(1, 2);
    expected.set_coeff(Word{}, Rational(1));
    expected.set_coeff(Word{0}, Rational(1, 2));
    expected.set_coeff(Word{0, 0}, Rational(-1, 8));
    REQUIRE(io::parse_series<Rational>(io::parse_any(half.out)) == expected);

    auto sym = run_cli("power " + g + " --exponent l");
    REQUIRE(sym.exit_code == 0);
    auto lifted = io::parse_series<UniPoly>(io::parse_any(sym.out));
    REQUIRE(lifted.coeff(Word{}) == UniPoly(1));
    REQUIRE(lifted.coeff(Word{0}) == UniPoly::variable());
    REQUIRE(lifted.coeff(Word{0, 0}) ==
            UniPoly(std::vector<Rational>{Rational(0), Rational(-1, 2), Rational(1, 2)}));

    auto text = run_cli("--format text power " + g + " --exponent l");
    REQUIRE(text.exit_code == 0);
    REQUIRE(io::parse_any(text.out) == io::parse_any(sym.out));
}

void test_collect_expand() {
    const int m = 2, N = 3;
    auto q = group_mul(exp(SeriesQ::generator(m, N, 0)), exp(SeriesQ::generator(m, N, 1)));
    auto qdoc = write_doc("q.json", io::series_doc(q.series()));

    auto col = run_cli("collect --verify " + qdoc);
    REQUIRE(col.exit_code == 0);
    int pm = 0, pN = 0;
    auto d = io::parse_decomposition<Rational>(io::parse_any(col.out), pm, pN);
    REQUIRE(pm == m);
    REQUIRE(pN == N);
    // an ordered product of basis factors collects to itself
    REQUIRE(d.size() == 2);
    REQUIRE(d[0].word == Word{0});
    REQUIRE(d[0].exponent == Rational(1));
    REQUIRE(d[1].word == Word{1});
    REQUIRE(d[1].exponent == Rational(1));

    auto ex = run_cli("expand " + write_doc("d.json", io::parse_any(col.out)));
    REQUIRE(ex.exit_code == 0);
    REQUIRE(io::parse_series<Rational>(io::parse_any(ex.out)) == q.series());

    auto text = run_cli("--format text collect " + qdoc);
    REQUIRE(text.exit_code == 0);
    REQUIRE(io::parse_any(text.out) == io::parse_any(col.out));
}

void test_lyndon_dims() {
    auto r = run_cli("lyndon --generators 2 --max-degree 3");
    REQUIRE(r.exit_code == 0);
    auto doc = io::parse_any(r.out);
    REQUIRE(doc.at("counts") == json({2, 1, 2}));
    std::vector<Word> expected{{0}, {1}, {0, 1}, {0, 0, 1}, {0, 1, 1}};
    REQUIRE(doc.at("words").size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        REQUIRE(io::word_from_json(doc.at("words")[i]) == expected[i]);

    auto text = run_cli("--format text lyndon --generators 2 --max-degree 3");
    REQUIRE(text.exit_code == 0);
    REQUIRE(io::parse_any(text.out) == doc);

    auto dims = run_cli("dims --generators 2 --max-degree 5");
    REQUIRE(dims.exit_code == 0);
    REQUIRE(io::parse_any(dims.out).at("counts") == json({2, 1, 2, 3, 6}));
}

void test_term() {
    auto r = run_cli("term \"x0+x1\" --class 3");
    REQUIRE(r.exit_code == 0);
    auto doc = io::parse_any(r.out);
    REQUIRE(doc.at("generators") == 2);
    REQUIRE(doc.at("class") == 3);
    REQUIRE(doc.at("group_word") == "x0*x1*comm(x0,x1)^(-1/2)");
    REQUIRE(doc.at("terms").size() == 2);

    auto prod = run_cli("--format text term \"x0*x1\" --class 3");
    REQUIRE(prod.exit_code == 0);
    REQUIRE(io::parse_any(prod.out).at("group_word") == "x0*x1");

    REQUIRE(run_cli("term \"x0*\" --class 3").exit_code == 2);
}

void test_hall_petresco() {
    auto r = run_cli("hall-petresco --n 2 --class 3");
    REQUIRE(r.exit_code == 0);
    auto doc = io::parse_any(r.out);
    REQUIRE(doc.at("verified") == true);
    REQUIRE(doc.at("taus").size() == 2);

    auto text = run_cli("--format text hall-petresco --n 2 --class 3");
    REQUIRE(text.exit_code == 0);
    REQUIRE(io::parse_any(text.out) == doc);
}

void test_solve() {
    std::vector<Vec> gs{{Rational(1), Rational(0), Rational(0)},
                        {Rational(0), Rational(1), Rational(0)}};
    std::vector<Rational> lambdas{Rational(1), Rational(1)};

    // Equation document in the text syntax, fed through stdin.
    auto eq_text = io::render(io::equation_doc("heisenberg", gs, lambdas), io::Format::Text);
    auto r = run_cli("solve -", eq_text);
    REQUIRE(r.exit_code == 0);
    auto doc = io::parse_any(r.out);
    REQUIRE(doc.at("f") == json({"-1/2", "-1/2", "0"}));
    REQUIRE(doc.at("residual") == json({"0", "0", "0"}));

    // Same equation without an embedded reference; --algebra supplies it.
    auto bare = write_doc("eq.json", io::equation_doc("", gs, lambdas));
    auto r2 = run_cli("solve " + bare + " --algebra heisenberg");
    REQUIRE(r2.exit_code == 0);
    REQUIRE(io::parse_any(r2.out) == doc);

    REQUIRE(run_cli("solve " + bare).exit_code == 2);  // no reference at all

    // Exponent sum zero has no unique root.
    auto singular =
        write_doc("sing.json",
                  io::equation_doc("heisenberg", gs, {Rational(1), Rational(-1)}));
    auto r3 = run_cli("solve " + singular);
    REQUIRE(r3.exit_code == 3);
    REQUIRE(error_code_of(r3.err) == "SingularEquation");
}

void test_verify() {
    auto r = run_cli("verify bch --cases 5 --seed 7");
    REQUIRE(r.exit_code == 0);
    auto doc = io::parse_any(r.out);
    REQUIRE(doc.at("suite") == "bch");
    REQUIRE(doc.at("seed") == 7);
    REQUIRE(doc.at("failed") == 0);
    REQUIRE(doc.at("passed") == doc.at("cases"));

    auto text = run_cli("--format text verify bch --cases 5 --seed 7");
    REQUIRE(text.exit_code == 0);
    REQUIRE(io::parse_any(text.out) == doc);

    REQUIRE(run_cli("verify nope").exit_code == 2);
}

void test_malformed_inputs() {
    auto bad_json = run_cli("exp -", "{ nope");
    REQUIRE(bad_json.exit_code == 2);
    REQUIRE(error_code_of(bad_json.err) == "ParseError");

    auto no_end = run_cli("exp -", "series generators=1 truncation=2 scalars=rational\n");
    REQUIRE(no_end.exit_code == 2);

    auto missing = run_cli("exp " + path_of("does-not-exist.json"));
    REQUIRE(missing.exit_code == 2);

    // Structurally valid but inconsistent with its own header.
    json doc = io::series_doc(SeriesQ::generator(2, 2, 0));
    doc["terms"][0]["word"] = json({5});
    auto bad_letter = run_cli("exp " + write_doc("bad.json", doc));
    REQUIRE(bad_letter.exit_code == 2);
    REQUIRE(error_code_of(bad_letter.err) == "ParseError");
}

struct NamedTest {
    const char* name;
    void (*fn)();
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-cli-binary>\n");
        return 2;
    }
    g_bin = argv[1];

    char dir_template[] = "/tmp/malcev-cli-XXXXXX";
    if (!mkdtemp(dir_template)) {
        std::fprintf(stderr, "cannot create scratch directory\n");
        return 2;
    }
    g_dir = dir_template;

    const NamedTest tests[] = {
        {"usage", test_usage},
        {"bch", test_bch},
        {"exp/log", test_exp_log},
        {"power", test_power},
        {"collect/expand", test_collect_expand},
        {"lyndon/dims", test_lyndon_dims},
        {"term", test_term},
        {"hall-petresco", test_hall_petresco},
        {"solve", test_solve},
        {"verify", test_verify},
        {"malformed inputs", test_malformed_inputs},
    };

    int failures = 0;
    for (const auto& t : tests) {
        try {
            t.fn();
            std::printf("ok   %s\n", t.name);
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL %s: %s\n", t.name, e.what());
        }
    }
    std::printf("%d/%d cli test groups passed\n",
                static_cast<int>(std::size(tests)) - failures,
                static_cast<int>(std::size(tests)));
    return failures;
}
