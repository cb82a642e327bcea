#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "malcev/collect.hpp"
#include "malcev/models.hpp"
#include "malcev/scalar.hpp"

// Document layer shared by the CLI and the tests. Every result is first
// built as a JSON tree with a "doc" discriminator; the text format is an
// alternative line-based rendering of the same tree, so to_text followed
// by parse_text returns the identical tree and round-trips are checked at
// one place.
namespace malcev::io {

using nlohmann::json;

enum class Format { Json, Text };

Format parse_format(const std::string& name);

// Renders a document in the requested format, newline terminated.
std::string render(const json& doc, Format f);

// Line-based rendering of a known document tree.
std::string to_text(const json& doc);

// Inverse of to_text.
json parse_text(const std::string& text);

// Accepts either syntax: a leading '{' selects JSON.
json parse_any(const std::string& text);

// Reads a whole file, or standard input when the path is "-".
std::string read_input(const std::string& path);

json error_doc(const std::string& code, const std::string& message);

// --- documents for the series-shaped payloads -------------------------

template <class K>
json series_doc(const TruncatedSeries<K>& s) {
    json terms = json::array();
    for (const auto& [w, c] : s.terms())
        terms.push_back({{"word", w}, {"coeff", scalar_str<K>(c)}});
    return {{"doc", "series"},
            {"generators", s.num_generators()},
            {"truncation", s.truncation_order()},
            {"scalars", scalar_name<K>()},
            {"terms", std::move(terms)}};
}

template <class K>
json lie_doc(const LieElement<K>& e) {
    json terms = json::array();
    for (const auto& [w, c] : e.coords())
        terms.push_back({{"word", w}, {"coeff", scalar_str<K>(c)}});
    return {{"doc", "lie"},
            {"basis", "lyndon"},
            {"generators", e.num_generators()},
            {"truncation", e.truncation_order()},
            {"scalars", scalar_name<K>()},
            {"terms", std::move(terms)}};
}

template <class K>
json decomposition_doc(const MlsDecomposition<K>& d, int m, int N) {
    json factors = json::array();
    for (const auto& f : d)
        factors.push_back({{"word", f.word}, {"exponent", scalar_str<K>(f.exponent)}});
    return {{"doc", "decomposition"},
            {"generators", m},
            {"truncation", N},
            {"scalars", scalar_name<K>()},
            {"factors", std::move(factors)}};
}

// --- structural helpers used by the typed parsers ----------------------

// Field access that maps structural problems to ParseError.
const json& require_field(const json& doc, const std::string& key);
int require_int(const json& doc, const std::string& key);
std::string require_string(const json& doc, const std::string& key);
Word word_from_json(const json& j);

template <class K>
TruncatedSeries<K> parse_series(const json& doc) {
    std::string scal = doc.contains("scalars") ? require_string(doc, "scalars")
                                               : std::string(scalar_name<Rational>());
    if (scal != scalar_name<K>())
        throw ParseError("expected " + std::string(scalar_name<K>()) + " scalars, found " + scal);
    try {
        TruncatedSeries<K> s(require_int(doc, "generators"), require_int(doc, "truncation"));
        for (const auto& t : require_field(doc, "terms")) {
            if (!t.is_object()) throw ParseError("series term is not a record");
            s.add_coeff(word_from_json(require_field(t, "word")),
                        scalar_parse<K>(require_string(t, "coeff")));
        }
        return s;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        // A document inconsistent with its own header is malformed input,
        // not a violated operation precondition.
        throw ParseError(std::string("inconsistent series document: ") + e.what());
    }
}

template <class K>
LieElement<K> parse_lie(const json& doc) {
    if (doc.contains("basis") && require_string(doc, "basis") != "lyndon")
        throw ParseError("unknown basis marker");
    auto s = parse_series<K>(doc);
    try {
        LieElement<K> e(s.num_generators(), s.truncation_order());
        for (const auto& [w, c] : s.terms()) e.set_coeff(w, c);
        return e;
    } catch (const Error& e) {
        throw ParseError(std::string("inconsistent lie document: ") + e.what());
    }
}

template <class K>
MlsDecomposition<K> parse_decomposition(const json& doc, int& m, int& N) {
    m = require_int(doc, "generators");
    N = require_int(doc, "truncation");
    MlsDecomposition<K> out;
    for (const auto& f : require_field(doc, "factors")) {
        if (!f.is_object()) throw ParseError("decomposition factor is not a record");
        out.push_back({word_from_json(require_field(f, "word")),
                       scalar_parse<K>(require_string(f, "exponent"))});
    }
    return out;
}

// --- model documents ----------------------------------------------------

json algebra_doc(const SCLieAlgebra& a);
SCLieAlgebra parse_algebra(const json& doc);

// Builtin names "abelian:d", "heisenberg", "free:m:c"; anything else is
// read as a path to an algebra document.
SCLieAlgebra resolve_algebra(const std::string& ref);

struct EquationInput {
    std::string algebra_ref;  // empty when the document carries none
    std::vector<Vec> gs;
    std::vector<Rational> lambdas;
};

json equation_doc(const std::string& algebra_ref, const std::vector<Vec>& gs,
                  const std::vector<Rational>& lambdas);
EquationInput parse_equation(const json& doc);

json solution_doc(const Vec& f, const Vec& residual);

// --- remaining result documents -----------------------------------------

json lyndon_words_doc(int m, int max_degree, const std::vector<Word>& words);
json dims_doc(int m, int max_degree, const std::vector<int>& counts);
json term_doc(int m, int c, const LieElement<Rational>& lie, const std::string& group_word);
json hall_petresco_doc(int n, int c, const std::vector<GroupElement<Rational>>& taus,
                       bool verified);
json report_doc(const std::string& suite, std::uint64_t seed, int cases, int passed, int failed,
                const std::string& first_failure);

Vec vec_from_json(const json& j);
json vec_to_json(const Vec& v);

}  // namespace malcev::io
