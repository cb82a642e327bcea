#pragma once

#include <compare>
#include <string>
#include <vector>

namespace malcev {

// An associative word over generator indices 0..m-1. The empty word is the
// monoid unit and indexes the constant term of a series.
using Letter = int;
using Word = std::vector<Letter>;

inline int degree(const Word& w) { return static_cast<int>(w.size()); }

// Degree first, then lexicographic: the graded-lex total order that fixes
// canonical iteration, serialization, and the collection peeling order.
std::strong_ordering graded_lex_compare(const Word& u, const Word& v);

struct GradedLexLess {
    bool operator()(const Word& u, const Word& v) const {
        return graded_lex_compare(u, v) == std::strong_ordering::less;
    }
};

// Plain lexicographic order in which a proper prefix is strictly smaller
// (the Chen-Fox-Lyndon convention used by the Lyndon condition).
bool lex_less(const Word& u, const Word& v);

std::string word_str(const Word& w);       // "[0,1,2]"; unit prints "[]"
Word parse_word(const std::string& text);  // inverse of word_str

}  // namespace malcev
