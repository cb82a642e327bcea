#include "malcev/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace malcev::io {

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "text") return Format::Text;
    throw ParseError("unknown format: " + name + " (expected json or text)");
}

std::string render(const json& doc, Format f) {
    if (f == Format::Json) return doc.dump(2) + "\n";
    return to_text(doc);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream out;
        out << std::cin.rdbuf();
        return out.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

json error_doc(const std::string& code, const std::string& message) {
    return {{"error", code}, {"message", message}};
}

const json& require_field(const json& doc, const std::string& key) {
    if (!doc.is_object() || !doc.contains(key)) throw ParseError("missing field: " + key);
    return doc.at(key);
}

int require_int(const json& doc, const std::string& key) {
    const json& v = require_field(doc, key);
    if (!v.is_number_integer()) throw ParseError("field is not an integer: " + key);
    return v.get<int>();
}

std::string require_string(const json& doc, const std::string& key) {
    const json& v = require_field(doc, key);
    if (!v.is_string()) throw ParseError("field is not a string: " + key);
    return v.get<std::string>();
}

Word word_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("word is not a list");
    Word w;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError("word letter is not an integer");
        w.push_back(x.get<int>());
    }
    return w;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("vector is not a list");
    Vec v;
    for (const auto& x : j) {
        if (!x.is_string()) throw ParseError("vector entry is not a fraction string");
        v.push_back(Rational::parse(x.get<std::string>()));
    }
    return v;
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

json algebra_doc(const SCLieAlgebra& a) {
    json brackets = json::array();
    for (int i = 0; i < a.dimension(); ++i)
        for (int j = i + 1; j < a.dimension(); ++j) {
            const Vec& c = a.basis_bracket(i, j);
            if (vec_is_zero(c)) continue;
            brackets.push_back({{"i", i}, {"j", j}, {"coeffs", vec_to_json(c)}});
        }
    return {{"doc", "algebra"},
            {"dimension", a.dimension()},
            {"labels", a.labels()},
            {"brackets", std::move(brackets)}};
}

SCLieAlgebra parse_algebra(const json& doc) {
    int d = require_int(doc, "dimension");
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        const json& ls = doc.at("labels");
        if (!ls.is_array()) throw ParseError("labels is not a list");
        for (const auto& l : ls) {
            if (!l.is_string()) throw ParseError("label is not a string");
            labels.push_back(l.get<std::string>());
        }
    }
    SCLieAlgebra::BracketTable table;
    if (doc.contains("brackets"))
        for (const auto& b : doc.at("brackets")) {
            if (!b.is_object()) throw ParseError("bracket entry is not a record");
            int i = require_int(b, "i"), j = require_int(b, "j");
            table[{i, j}] = vec_from_json(require_field(b, "coeffs"));
        }
    return SCLieAlgebra(d, std::move(labels), table);
}

SCLieAlgebra resolve_algebra(const std::string& ref) {
    if (ref == "heisenberg") return SCLieAlgebra::heisenberg();
    auto split = [&](const std::string& prefix) -> std::vector<int> {
        if (ref.rfind(prefix, 0) != 0) return {};
        std::vector<int> args;
        std::size_t pos = prefix.size();
        while (pos <= ref.size()) {
            std::size_t end = ref.find(':', pos);
            if (end == std::string::npos) end = ref.size();
            std::string item = ref.substr(pos, end - pos);
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                return {};
            args.push_back(std::stoi(item));
            pos = end + 1;
        }
        return args;
    };
    if (auto a = split("abelian:"); a.size() == 1) return SCLieAlgebra::abelian(a[0]);
    if (auto a = split("free:"); a.size() == 2) return SCLieAlgebra::free_nilpotent(a[0], a[1]);
    return parse_algebra(parse_any(read_input(ref)));
}

json equation_doc(const std::string& algebra_ref, const std::vector<Vec>& gs,
                  const std::vector<Rational>& lambdas) {
    json factors = json::array();
    for (std::size_t i = 0; i < gs.size(); ++i)
        factors.push_back({{"g", vec_to_json(gs[i])}, {"lambda", lambdas[i].str()}});
    json doc = {{"doc", "equation"}, {"factors", std::move(factors)}};
    if (!algebra_ref.empty()) doc["algebra"] = algebra_ref;
    return doc;
}

EquationInput parse_equation(const json& doc) {
    EquationInput out;
    if (doc.contains("algebra")) out.algebra_ref = require_string(doc, "algebra");
    for (const auto& f : require_field(doc, "factors")) {
        if (!f.is_object()) throw ParseError("equation factor is not a record");
        out.gs.push_back(vec_from_json(require_field(f, "g")));
        out.lambdas.push_back(Rational::parse(require_string(f, "lambda")));
    }
    return out;
}

json solution_doc(const Vec& f, const Vec& residual) {
    return {{"doc", "solution"},
            {"dimension", static_cast<int>(f.size())},
            {"f", vec_to_json(f)},
            {"residual", vec_to_json(residual)}};
}

json lyndon_words_doc(int m, int max_degree, const std::vector<Word>& words) {
    std::vector<int> counts(max_degree);
    json ws = json::array();
    for (const auto& w : words) {
        ++counts[degree(w) - 1];
        ws.push_back(w);
    }
    return {{"doc", "lyndon"},
            {"generators", m},
            {"max_degree", max_degree},
            {"words", std::move(ws)},
            {"counts", counts}};
}

json dims_doc(int m, int max_degree, const std::vector<int>& counts) {
    return {{"doc", "dims"}, {"generators", m}, {"max_degree", max_degree}, {"counts", counts}};
}

json term_doc(int m, int c, const LieElement<Rational>& lie, const std::string& group_word) {
    json terms = json::array();
    for (const auto& [w, x] : lie.coords())
        terms.push_back({{"word", w}, {"coeff", x.str()}});
    return {{"doc", "term"},
            {"generators", m},
            {"class", c},
            {"scalars", "rational"},
            {"terms", std::move(terms)},
            {"group_word", group_word}};
}

json hall_petresco_doc(int n, int c, const std::vector<GroupElement<Rational>>& taus,
                       bool verified) {
    json ts = json::array();
    for (std::size_t k = 0; k < taus.size(); ++k) {
        json terms = json::array();
        for (const auto& [w, x] : taus[k].series().terms())
            terms.push_back({{"word", w}, {"coeff", x.str()}});
        ts.push_back({{"m", static_cast<int>(k) + 2}, {"terms", std::move(terms)}});
    }
    return {{"doc", "hallpetresco"},
            {"n", n},
            {"class", c},
            {"verified", verified},
            {"taus", std::move(ts)}};
}

json report_doc(const std::string& suite, std::uint64_t seed, int cases, int passed, int failed,
                const std::string& first_failure) {
    return {{"doc", "report"}, {"suite", suite},   {"seed", seed},
            {"cases", cases},  {"passed", passed}, {"failed", failed},
            {"first_failure", first_failure}};
}

// --- the line format ------------------------------------------------------

namespace {

std::string csv_rationals(const json& list) {
    std::string out;
    for (const auto& x : list) {
        if (!out.empty()) out += ',';
        out += x.get<std::string>();
    }
    return out;
}

std::string csv_ints(const json& list) {
    std::string out;
    for (const auto& x : list) {
        if (!out.empty()) out += ',';
        out += std::to_string(x.get<long long>());
    }
    return out;
}

json csv_to_rationals(const std::string& s) {
    json out = json::array();
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        out.push_back(Rational::parse(s.substr(pos, end - pos)).str());
        pos = end + 1;
    }
    return out;
}

json csv_to_ints(const std::string& s) {
    json out = json::array();
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(pos, end - pos);
        if (item.empty() || item.find_first_not_of("-0123456789") != std::string::npos)
            throw ParseError("bad integer list: " + s);
        out.push_back(std::stoll(item));
        pos = end + 1;
    }
    return out;
}

std::string word_token(const json& w) { return word_str(word_from_json(w)); }

void emit_terms(std::string& out, const json& terms, const std::string& head) {
    for (const auto& t : terms)
        out += head + " word=" + word_token(t.at("word")) +
               " coeff=" + t.at("coeff").get<std::string>() + "\n";
}

struct Line {
    std::string kind;
    std::map<std::string, std::string> kv;  // key=value tokens
    std::string rest;                       // free-form tail for bare-value lines
};

// Splits a record line into the leading kind and key=value tokens; tokens
// without '=' end parsing and the remainder of the line becomes `rest`.
Line split_line(const std::string& raw) {
    Line out;
    std::size_t pos = raw.find(' ');
    out.kind = raw.substr(0, pos);
    while (pos != std::string::npos) {
        std::size_t start = pos + 1;
        std::size_t next = raw.find(' ', start);
        std::string tok = raw.substr(start, next == std::string::npos ? next : next - start);
        std::size_t eq = tok.find('=');
        if (eq == std::string::npos) {
            out.rest = raw.substr(start);
            break;
        }
        out.kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        pos = next;
    }
    return out;
}

const std::string& attr(const Line& l, const std::string& key) {
    auto it = l.kv.find(key);
    if (it == l.kv.end()) throw ParseError("missing attribute " + key + " on line " + l.kind);
    return it->second;
}

int int_attr(const Line& l, const std::string& key) {
    const std::string& s = attr(l, key);
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
        throw ParseError("bad integer attribute " + key + "=" + s);
    return std::stoi(s);
}

json word_attr(const Line& l, const std::string& key) {
    return parse_word(attr(l, key));
}

}  // namespace

std::string to_text(const json& doc) {
    const std::string kind = require_string(doc, "doc");
    std::string out;
    if (kind == "series" || kind == "lie") {
        out = kind + " generators=" + std::to_string(require_int(doc, "generators")) +
              " truncation=" + std::to_string(require_int(doc, "truncation")) +
              " scalars=" + require_string(doc, "scalars");
        if (kind == "lie") out += " basis=" + require_string(doc, "basis");
        out += "\n";
        for (const auto& t : doc.at("terms")) {
            // Compact scalar form keeps the token free of spaces.
            std::string c = t.at("coeff").get<std::string>();
            if (require_string(doc, "scalars") == "polynomial")
                c = UniPoly::parse(c).str(true);
            out += "term word=" + word_token(t.at("word")) + " coeff=" + c + "\n";
        }
    } else if (kind == "decomposition") {
        out = "decomposition generators=" + std::to_string(require_int(doc, "generators")) +
              " truncation=" + std::to_string(require_int(doc, "truncation")) +
              " scalars=" + require_string(doc, "scalars") + "\n";
        for (const auto& f : doc.at("factors")) {
            std::string e = f.at("exponent").get<std::string>();
            if (require_string(doc, "scalars") == "polynomial") e = UniPoly::parse(e).str(true);
            out += "factor word=" + word_token(f.at("word")) + " exponent=" + e + "\n";
        }
    } else if (kind == "algebra") {
        out = "algebra dimension=" + std::to_string(require_int(doc, "dimension")) + "\n";
        for (const auto& l : doc.at("labels")) out += "label " + l.get<std::string>() + "\n";
        for (const auto& b : doc.at("brackets"))
            out += "bracket i=" + std::to_string(b.at("i").get<int>()) +
                   " j=" + std::to_string(b.at("j").get<int>()) +
                   " coeffs=" + csv_rationals(b.at("coeffs")) + "\n";
    } else if (kind == "equation") {
        out = "equation\n";
        if (doc.contains("algebra")) out += "algebra " + require_string(doc, "algebra") + "\n";
        for (const auto& f : doc.at("factors"))
            out += "factor g=" + csv_rationals(f.at("g")) +
                   " lambda=" + f.at("lambda").get<std::string>() + "\n";
    } else if (kind == "solution") {
        out = "solution dimension=" + std::to_string(require_int(doc, "dimension")) + "\n";
        out += "f " + csv_rationals(doc.at("f")) + "\n";
        out += "residual " + csv_rationals(doc.at("residual")) + "\n";
    } else if (kind == "lyndon") {
        out = "lyndon generators=" + std::to_string(require_int(doc, "generators")) +
              " max_degree=" + std::to_string(require_int(doc, "max_degree")) + "\n";
        for (const auto& w : doc.at("words")) out += "word " + word_token(w) + "\n";
        out += "counts " + csv_ints(doc.at("counts")) + "\n";
    } else if (kind == "dims") {
        out = "dims generators=" + std::to_string(require_int(doc, "generators")) +
              " max_degree=" + std::to_string(require_int(doc, "max_degree")) + "\n";
        out += "counts " + csv_ints(doc.at("counts")) + "\n";
    } else if (kind == "term") {
        out = "term generators=" + std::to_string(require_int(doc, "generators")) +
              " class=" + std::to_string(require_int(doc, "class")) +
              " scalars=" + require_string(doc, "scalars") + "\n";
        emit_terms(out, doc.at("terms"), "lie");
        out += "group " + require_string(doc, "group_word") + "\n";
    } else if (kind == "hallpetresco") {
        out = "hallpetresco n=" + std::to_string(require_int(doc, "n")) +
              " class=" + std::to_string(require_int(doc, "class")) +
              std::string(" verified=") + (doc.at("verified").get<bool>() ? "true" : "false") +
              "\n";
        for (const auto& tau : doc.at("taus")) {
            const std::string head = "tau m=" + std::to_string(tau.at("m").get<int>());
            for (const auto& t : tau.at("terms"))
                out += head + " word=" + word_token(t.at("word")) +
                       " coeff=" + t.at("coeff").get<std::string>() + "\n";
        }
    } else if (kind == "report") {
        out = "report suite=" + require_string(doc, "suite") +
              " seed=" + std::to_string(doc.at("seed").get<std::uint64_t>()) +
              " cases=" + std::to_string(require_int(doc, "cases")) +
              " passed=" + std::to_string(require_int(doc, "passed")) +
              " failed=" + std::to_string(require_int(doc, "failed")) + "\n";
        std::string ff = require_string(doc, "first_failure");
        if (!ff.empty()) out += "first_failure " + ff + "\n";
    } else {
        throw std::logic_error("no text rendering for document kind " + kind);
    }
    return out + "end\n";
}

json parse_text(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty()) continue;
        lines.push_back(split_line(raw));
    }
    if (lines.empty()) throw ParseError("empty document");
    if (lines.back().kind != "end") throw ParseError("document does not finish with end");
    lines.pop_back();
    const Line head = lines.front();
    std::vector<Line> body(lines.begin() + 1, lines.end());
    const std::string& kind = head.kind;

    auto terms_of = [&](const std::string& record, const std::string& scalars) {
        json terms = json::array();
        for (const auto& l : body) {
            if (l.kind != record) throw ParseError("unexpected line " + l.kind + " in " + kind);
            std::string c = attr(l, record == "factor" ? "exponent" : "coeff");
            if (scalars == "polynomial") c = UniPoly::parse(c).str(false);
            terms.push_back({{"word", word_attr(l, "word")},
                             {record == "factor" ? "exponent" : "coeff", c}});
        }
        return terms;
    };

    if (kind == "series" || kind == "lie") {
        const std::string scalars = attr(head, "scalars");
        json doc = {{"doc", kind},
                    {"generators", int_attr(head, "generators")},
                    {"truncation", int_attr(head, "truncation")},
                    {"scalars", scalars},
                    {"terms", terms_of("term", scalars)}};
        if (kind == "lie") doc["basis"] = attr(head, "basis");
        return doc;
    }
    if (kind == "decomposition") {
        const std::string scalars = attr(head, "scalars");
        return {{"doc", kind},
                {"generators", int_attr(head, "generators")},
                {"truncation", int_attr(head, "truncation")},
                {"scalars", scalars},
                {"factors", terms_of("factor", scalars)}};
    }
    if (kind == "algebra") {
        json labels = json::array(), brackets = json::array();
        for (const auto& l : body) {
            if (l.kind == "label")
                labels.push_back(l.rest);
            else if (l.kind == "bracket")
                brackets.push_back({{"i", int_attr(l, "i")},
                                    {"j", int_attr(l, "j")},
                                    {"coeffs", csv_to_rationals(attr(l, "coeffs"))}});
            else
                throw ParseError("unexpected line " + l.kind + " in algebra");
        }
        return {{"doc", "algebra"},
                {"dimension", int_attr(head, "dimension")},
                {"labels", std::move(labels)},
                {"brackets", std::move(brackets)}};
    }
    if (kind == "equation") {
        json factors = json::array();
        std::string ref;
        for (const auto& l : body) {
            if (l.kind == "algebra")
                ref = l.rest;
            else if (l.kind == "factor")
                factors.push_back({{"g", csv_to_rationals(attr(l, "g"))},
                                   {"lambda", Rational::parse(attr(l, "lambda")).str()}});
            else
                throw ParseError("unexpected line " + l.kind + " in equation");
        }
        json doc = {{"doc", "equation"}, {"factors", std::move(factors)}};
        if (!ref.empty()) doc["algebra"] = ref;
        return doc;
    }
    if (kind == "solution") {
        json f, residual;
        for (const auto& l : body) {
            if (l.kind == "f")
                f = csv_to_rationals(l.rest);
            else if (l.kind == "residual")
                residual = csv_to_rationals(l.rest);
            else
                throw ParseError("unexpected line " + l.kind + " in solution");
        }
        if (f.is_null() || residual.is_null()) throw ParseError("solution needs f and residual");
        return {{"doc", "solution"},
                {"dimension", int_attr(head, "dimension")},
                {"f", std::move(f)},
                {"residual", std::move(residual)}};
    }
    if (kind == "lyndon") {
        json words = json::array(), counts;
        for (const auto& l : body) {
            if (l.kind == "word")
                words.push_back(parse_word(l.rest));
            else if (l.kind == "counts")
                counts = csv_to_ints(l.rest);
            else
                throw ParseError("unexpected line " + l.kind + " in lyndon");
        }
        if (counts.is_null()) throw ParseError("lyndon document needs counts");
        return {{"doc", "lyndon"},
                {"generators", int_attr(head, "generators")},
                {"max_degree", int_attr(head, "max_degree")},
                {"words", std::move(words)},
                {"counts", std::move(counts)}};
    }
    if (kind == "dims") {
        json counts;
        for (const auto& l : body) {
            if (l.kind != "counts") throw ParseError("unexpected line " + l.kind + " in dims");
            counts = csv_to_ints(l.rest);
        }
        if (counts.is_null()) throw ParseError("dims document needs counts");
        return {{"doc", "dims"},
                {"generators", int_attr(head, "generators")},
                {"max_degree", int_attr(head, "max_degree")},
                {"counts", std::move(counts)}};
    }
    if (kind == "term") {
        json terms = json::array();
        std::string gw;
        bool have_gw = false;
        for (const auto& l : body) {
            if (l.kind == "lie")
                terms.push_back({{"word", word_attr(l, "word")}, {"coeff", attr(l, "coeff")}});
            else if (l.kind == "group") {
                gw = l.rest;
                have_gw = true;
            } else
                throw ParseError("unexpected line " + l.kind + " in term");
        }
        if (!have_gw) throw ParseError("term document needs a group line");
        return {{"doc", "term"},
                {"generators", int_attr(head, "generators")},
                {"class", int_attr(head, "class")},
                {"scalars", attr(head, "scalars")},
                {"terms", std::move(terms)},
                {"group_word", gw}};
    }
    if (kind == "hallpetresco") {
        std::map<int, json> taus;
        for (const auto& l : body) {
            if (l.kind != "tau")
                throw ParseError("unexpected line " + l.kind + " in hallpetresco");
            taus[int_attr(l, "m")].push_back(
                {{"word", word_attr(l, "word")}, {"coeff", attr(l, "coeff")}});
        }
        json ts = json::array();
        for (auto& [m, terms] : taus) ts.push_back({{"m", m}, {"terms", std::move(terms)}});
        const std::string v = attr(head, "verified");
        if (v != "true" && v != "false") throw ParseError("bad verified flag: " + v);
        return {{"doc", "hallpetresco"},
                {"n", int_attr(head, "n")},
                {"class", int_attr(head, "class")},
                {"verified", v == "true"},
                {"taus", std::move(ts)}};
    }
    if (kind == "report") {
        std::string ff;
        for (const auto& l : body) {
            if (l.kind != "first_failure")
                throw ParseError("unexpected line " + l.kind + " in report");
            ff = l.rest;
        }
        const std::string seed = attr(head, "seed");
        if (seed.empty() || seed.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad seed attribute: " + seed);
        return {{"doc", "report"},
                {"suite", attr(head, "suite")},
                {"seed", static_cast<std::uint64_t>(std::stoull(seed))},
                {"cases", int_attr(head, "cases")},
                {"passed", int_attr(head, "passed")},
                {"failed", int_attr(head, "failed")},
                {"first_failure", ff}};
    }
    throw ParseError("unknown document kind: " + kind);
}

json parse_any(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') {
            try {
                return json::parse(text);
            } catch (const json::exception& e) {
                throw ParseError(std::string("bad json: ") + e.what());
            }
        }
        break;
    }
    return parse_text(text);
}

}  // namespace malcev::io
