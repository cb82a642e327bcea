#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "malcev/collect.hpp"

namespace malcev {

// Expression tree over the mixed signature +, 0, [.,.], * and rational
// scaling, with variables x0..x_{m-1}. The * is the group multiplication
// that the hat map reads as BCH. Scalars here are rationals: the model and
// solver pipelines, the only consumers, are rational-only.
class MixedTerm {
public:
    enum class Kind { Var, Zero, Add, Bracket, GroupMul, Scale };
    using Ptr = std::shared_ptr<const MixedTerm>;

    Kind kind = Kind::Zero;
    int index = -1;     // Var
    Rational scalar;    // Scale
    Ptr a, b;

    static Ptr variable(int i);
    static Ptr zero();
    static Ptr add(Ptr x, Ptr y);
    static Ptr bracket(Ptr x, Ptr y);
    static Ptr mul(Ptr x, Ptr y);
    static Ptr scale(Rational c, Ptr x);

    int max_variable() const;  // -1 when no variables occur
};

// Grammar (whitespace-insensitive):
//   sum     := product (('+'|'-') product)*
//   product := factor ('*' factor)*
//   factor  := '-' factor | rational '.' factor | primary
//   primary := 'x'INT | '0' | '[' sum ',' sum ']' | '(' sum ')'
// A bare rational literal is only legal as the constant 0.
MixedTerm::Ptr parse_term(const std::string& text);

std::string term_str(const MixedTerm& t);

// Word in the group signature: unit, multiplication, inversion, scalar
// powers, commutators, over variables x0..x_{m-1}.
class GroupWord {
public:
    enum class Kind { Unit, Var, Mul, Inv, Power, Comm };
    using Ptr = std::shared_ptr<const GroupWord>;

    Kind kind = Kind::Unit;
    int index = -1;     // Var
    Rational exponent;  // Power
    Ptr a, b;

    static Ptr unit();
    static Ptr variable(int i);
    static Ptr mul(Ptr x, Ptr y);
    static Ptr inv(Ptr x);
    static Ptr power(Ptr x, Rational e);
    static Ptr comm(Ptr x, Ptr y);
};

// "x0*x1*comm(x0,x1)^(-1/2)"; the unit prints "1".
std::string group_word_str(const GroupWord& w);

// The ordered product of commutator powers a decomposition denotes, as a
// group word: each Lyndon word contributes its standard bracketing with
// commutator nodes, raised to the recorded exponent.
GroupWord::Ptr decomposition_group_word(const MlsDecomposition<Rational>& d);

// The hat map: structural recursion sending + to Lie addition, [.,.] to
// the bracket, * to BCH and scaling to scaling, with x_i going to X_i.
LieElement<Rational> term_to_lie(const MixedTerm& t, int m, int N);

// Truncated normal forms of a term that evaluate equally in every
// c-nilpotent model (degrees >= c die there): the Lie normal form of
// degree < c, and the group word obtained by collecting its exponential at
// truncation c - 1.
std::pair<LieElement<Rational>, GroupWord::Ptr> lie_term_truncations(const MixedTerm& t, int m,
                                                                     int c);

// Evaluation of a group word with group elements as variables.
template <class K>
GroupElement<K> eval_group_word(const GroupWord& w, const std::vector<GroupElement<K>>& args) {
    if (args.empty()) throw ArityMismatch("group word evaluation needs arguments");
    const int m = args.front().num_generators(), n = args.front().truncation_order();
    switch (w.kind) {
        case GroupWord::Kind::Unit:
            return GroupElement<K>::unit(m, n);
        case GroupWord::Kind::Var:
            if (w.index < 0 || w.index >= static_cast<int>(args.size()))
                throw ArityMismatch("group word variable outside argument tuple");
            return args[w.index];
        case GroupWord::Kind::Mul:
            return group_mul(eval_group_word(*w.a, args), eval_group_word(*w.b, args));
        case GroupWord::Kind::Inv:
            return group_inv(eval_group_word(*w.a, args));
        case GroupWord::Kind::Power:
            return group_power(eval_group_word(*w.a, args), K(w.exponent));
        case GroupWord::Kind::Comm:
            return group_commutator(eval_group_word(*w.a, args), eval_group_word(*w.b, args));
    }
    throw std::logic_error("unreachable group word kind");
}

// Evaluation of a mixed term in the truncated mixed structure: arguments
// are Lie elements, * is BCH.
LieElement<Rational> eval_term_lie(const MixedTerm& t,
                                   const std::vector<LieElement<Rational>>& args);

}  // namespace malcev
