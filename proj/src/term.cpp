#include "malcev/term.hpp"

#include <algorithm>
#include <cctype>

namespace malcev {

MixedTerm::Ptr MixedTerm::variable(int i) {
    auto t = std::make_shared<MixedTerm>();
    t->kind = Kind::Var;
    t->index = i;
    return t;
}

MixedTerm::Ptr MixedTerm::zero() {
    return std::make_shared<MixedTerm>();
}

MixedTerm::Ptr MixedTerm::add(Ptr x, Ptr y) {
    auto t = std::make_shared<MixedTerm>();
    t->kind = Kind::Add;
    t->a = std::move(x);
    t->b = std::move(y);
    return t;
}

MixedTerm::Ptr MixedTerm::bracket(Ptr x, Ptr y) {
    auto t = std::make_shared<MixedTerm>();
    t->kind = Kind::Bracket;
    t->a = std::move(x);
    t->b = std::move(y);
    return t;
}

MixedTerm::Ptr MixedTerm::mul(Ptr x, Ptr y) {
    auto t = std::make_shared<MixedTerm>();
    t->kind = Kind::GroupMul;
    t->a = std::move(x);
    t->b = std::move(y);
    return t;
}

MixedTerm::Ptr MixedTerm::scale(Rational c, Ptr x) {
    auto t = std::make_shared<MixedTerm>();
    t->kind = Kind::Scale;
    t->scalar = std::move(c);
    t->a = std::move(x);
    return t;
}

int MixedTerm::max_variable() const {
    int out = kind == Kind::Var ? index : -1;
    if (a) out = std::max(out, a->max_variable());
    if (b) out = std::max(out, b->max_variable());
    return out;
}

namespace {

// Minimal recursive-descent parser for the term grammar in the header.
struct TermParser {
    std::string s;
    std::size_t pos = 0;

    explicit TermParser(const std::string& text) {
        s.reserve(text.size());
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos));
        ++pos;
    }

    std::string number() {
        std::size_t start = pos;
        if (peek() == '-') ++pos;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos;
        if (pos == start || (s[start] == '-' && pos == start + 1))
            throw ParseError("expected number at offset " + std::to_string(start));
        return s.substr(start, pos - start);
    }

    MixedTerm::Ptr sum() {
        auto acc = product();
        while (peek() == '+' || peek() == '-') {
            // A '-' introducing a factor (e.g. "a + -b") is consumed by
            // factor(); here it means subtraction.
            char op = s[pos++];
            auto rhs = product();
            if (op == '-') rhs = MixedTerm::scale(Rational(-1), std::move(rhs));
            acc = MixedTerm::add(std::move(acc), std::move(rhs));
        }
        return acc;
    }

    MixedTerm::Ptr product() {
        auto acc = factor();
        while (peek() == '*') {
            ++pos;
            acc = MixedTerm::mul(std::move(acc), factor());
        }
        return acc;
    }

    MixedTerm::Ptr factor() {
        if (peek() == '-') {
            // Could be unary minus or a negative scalar literal "-1/2.x".
            std::size_t save = pos;
            ++pos;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                pos = save;
                return scaled_or_zero();
            }
            return MixedTerm::scale(Rational(-1), factor());
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) return scaled_or_zero();
        return primary();
    }

    MixedTerm::Ptr scaled_or_zero() {
        std::string num = number();
        if (peek() == '.') {
            ++pos;
            return MixedTerm::scale(Rational::parse(num), factor());
        }
        if (Rational::parse(num).is_zero()) return MixedTerm::zero();
        throw ParseError("bare scalar '" + num + "' (only 0 denotes a term)");
    }

    MixedTerm::Ptr primary() {
        if (peek() == 'x') {
            ++pos;
            std::size_t start = pos;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
            if (pos == start) throw ParseError("variable needs an index");
            return MixedTerm::variable(std::stoi(s.substr(start, pos - start)));
        }
        if (peek() == '[') {
            ++pos;
            auto x = sum();
            expect(',');
            auto y = sum();
            expect(']');
            return MixedTerm::bracket(std::move(x), std::move(y));
        }
        if (peek() == '(') {
            ++pos;
            auto x = sum();
            expect(')');
            return x;
        }
        throw ParseError("unexpected character at offset " + std::to_string(pos));
    }
};

}  // namespace

MixedTerm::Ptr parse_term(const std::string& text) {
    TermParser p(text);
    auto t = p.sum();
    if (!p.done())
        throw ParseError("trailing input at offset " + std::to_string(p.pos));
    return t;
}

std::string term_str(const MixedTerm& t) {
    switch (t.kind) {
        case MixedTerm::Kind::Var:
            return "x" + std::to_string(t.index);
        case MixedTerm::Kind::Zero:
            return "0";
        case MixedTerm::Kind::Add:
            return "(" + term_str(*t.a) + " + " + term_str(*t.b) + ")";
        case MixedTerm::Kind::Bracket:
            return "[" + term_str(*t.a) + ", " + term_str(*t.b) + "]";
        case MixedTerm::Kind::GroupMul:
            return "(" + term_str(*t.a) + " * " + term_str(*t.b) + ")";
        case MixedTerm::Kind::Scale:
            return t.scalar.str() + "." + term_str(*t.a);
    }
    throw std::logic_error("unreachable term kind");
}

GroupWord::Ptr GroupWord::unit() {
    return std::make_shared<GroupWord>();
}

GroupWord::Ptr GroupWord::variable(int i) {
    auto w = std::make_shared<GroupWord>();
    w->kind = Kind::Var;
    w->index = i;
    return w;
}

GroupWord::Ptr GroupWord::mul(Ptr x, Ptr y) {
    auto w = std::make_shared<GroupWord>();
    w->kind = Kind::Mul;
    w->a = std::move(x);
    w->b = std::move(y);
    return w;
}

GroupWord::Ptr GroupWord::inv(Ptr x) {
    auto w = std::make_shared<GroupWord>();
    w->kind = Kind::Inv;
    w->a = std::move(x);
    return w;
}

GroupWord::Ptr GroupWord::power(Ptr x, Rational e) {
    auto w = std::make_shared<GroupWord>();
    w->kind = Kind::Power;
    w->exponent = std::move(e);
    w->a = std::move(x);
    return w;
}

GroupWord::Ptr GroupWord::comm(Ptr x, Ptr y) {
    auto w = std::make_shared<GroupWord>();
    w->kind = Kind::Comm;
    w->a = std::move(x);
    w->b = std::move(y);
    return w;
}

namespace {

// Self-delimiting pieces need no parentheses under powers or products.
bool atomic(const GroupWord& w) {
    return w.kind == GroupWord::Kind::Unit || w.kind == GroupWord::Kind::Var ||
           w.kind == GroupWord::Kind::Comm;
}

std::string gw_str(const GroupWord& w, bool parenthesize) {
    std::string out;
    switch (w.kind) {
        case GroupWord::Kind::Unit:
            return "1";
        case GroupWord::Kind::Var:
            return "x" + std::to_string(w.index);
        case GroupWord::Kind::Comm:
            return "comm(" + gw_str(*w.a, false) + "," + gw_str(*w.b, false) + ")";
        case GroupWord::Kind::Mul:
            out = gw_str(*w.a, true) + "*" + gw_str(*w.b, true);
            break;
        case GroupWord::Kind::Inv:
            out = (atomic(*w.a) ? gw_str(*w.a, false) : "(" + gw_str(*w.a, false) + ")") + "^(-1)";
            return out;
        case GroupWord::Kind::Power:
            out = (atomic(*w.a) ? gw_str(*w.a, false) : "(" + gw_str(*w.a, false) + ")") + "^(" +
                  w.exponent.str() + ")";
            return out;
    }
    // Only Mul reaches here; products of products need no parentheses, but
    // anything under a power does, handled above.
    (void)parenthesize;
    return out;
}

}  // namespace

std::string group_word_str(const GroupWord& w) {
    return gw_str(w, false);
}

namespace {

GroupWord::Ptr comm_shape(const BracketedWord& t) {
    if (t.is_leaf()) return GroupWord::variable(t.letter);
    return GroupWord::comm(comm_shape(*t.left), comm_shape(*t.right));
}

}  // namespace

GroupWord::Ptr decomposition_group_word(const MlsDecomposition<Rational>& d) {
    if (d.empty()) return GroupWord::unit();
    GroupWord::Ptr acc;
    for (const auto& f : d) {
        auto piece = comm_shape(*bracketing(f.word));
        if (!f.exponent.is_one()) piece = GroupWord::power(std::move(piece), f.exponent);
        acc = acc ? GroupWord::mul(std::move(acc), std::move(piece)) : std::move(piece);
    }
    return acc;
}

LieElement<Rational> term_to_lie(const MixedTerm& t, int m, int N) {
    int top = t.max_variable();
    if (top >= m)
        throw ArityMismatch("term uses x" + std::to_string(top) + " but only " +
                            std::to_string(m) + " generators are available");
    std::vector<LieElement<Rational>> args;
    args.reserve(m);
    for (int i = 0; i < m; ++i) args.push_back(LieElement<Rational>::generator(m, N, i));
    return eval_term_lie(t, args);
}

LieElement<Rational> eval_term_lie(const MixedTerm& t,
                                   const std::vector<LieElement<Rational>>& args) {
    if (args.empty()) throw ArityMismatch("term evaluation needs arguments");
    switch (t.kind) {
        case MixedTerm::Kind::Var:
            if (t.index < 0 || t.index >= static_cast<int>(args.size()))
                throw ArityMismatch("term variable outside argument tuple");
            return args[t.index];
        case MixedTerm::Kind::Zero:
            return LieElement<Rational>(args.front().num_generators(),
                                        args.front().truncation_order());
        case MixedTerm::Kind::Add:
            return eval_term_lie(*t.a, args) + eval_term_lie(*t.b, args);
        case MixedTerm::Kind::Bracket:
            return lie_bracket(eval_term_lie(*t.a, args), eval_term_lie(*t.b, args));
        case MixedTerm::Kind::GroupMul:
            return bch(eval_term_lie(*t.a, args), eval_term_lie(*t.b, args));
        case MixedTerm::Kind::Scale:
            return eval_term_lie(*t.a, args) * t.scalar;
    }
    throw std::logic_error("unreachable term kind");
}

std::pair<LieElement<Rational>, GroupWord::Ptr> lie_term_truncations(const MixedTerm& t, int m,
                                                                     int c) {
    if (c < 1) throw DegreeOutOfRange("nilpotency class must be >= 1");
    if (c == 1) {
        // Degree-< 1 truncation: everything dies in a 1-nilpotent model.
        return {LieElement<Rational>(m, 1), GroupWord::unit()};
    }
    auto lie_part = term_to_lie(t, m, c - 1);
    auto d = collect(exp(lie_to_series(lie_part)));
    return {std::move(lie_part), decomposition_group_word(d)};
}

}  // namespace malcev
