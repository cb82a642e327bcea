#include "malcev/lyndon.hpp"

#include <algorithm>

namespace malcev {

bool is_lyndon(const Word& w) {
    if (w.empty()) throw EmptyWord("the unit word is not eligible");
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word suffix(w.begin() + i, w.end());
        if (!lex_less(w, suffix)) return false;
    }
    return true;
}

std::vector<Word> enumerate_lyndon(int m, int max_degree) {
    if (m < 1) throw ShapeMismatch("alphabet size must be >= 1");
    if (max_degree < 1) throw DegreeOutOfRange("max_degree must be >= 1");
    // Duval successor walk: emits Lyndon words of degree <= max_degree in
    // plain lex order; a stable sort by degree afterwards yields graded-lex.
    std::vector<Word> words;
    Word w{0};
    while (true) {
        words.push_back(w);
        Word t;
        t.reserve(max_degree);
        for (int i = 0; i < max_degree; ++i) t.push_back(w[i % w.size()]);
        while (!t.empty() && t.back() == m - 1) t.pop_back();
        if (t.empty()) break;
        ++t.back();
        w = std::move(t);
    }
    std::stable_sort(words.begin(), words.end(), [](const Word& a, const Word& b) {
        return a.size() < b.size();
    });
    return words;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (!is_lyndon(w)) throw ShapeMismatch("not a lyndon word: " + word_str(w));
    if (w.size() < 2) throw SingleLetter("single letters have no factorization");
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word suffix(w.begin() + i, w.end());
        if (is_lyndon(suffix))
            return {Word(w.begin(), w.begin() + i), std::move(suffix)};
    }
    throw std::logic_error("lyndon word without lyndon suffix");  // unreachable
}

BracketedWord::Ptr bracketing(const Word& w) {
    if (w.size() == 1) return BracketedWord::leaf(w[0]);
    auto [u, v] = standard_factorization(w);
    return BracketedWord::node(bracketing(u), bracketing(v));
}

Word foliage(const BracketedWord& t) {
    if (t.is_leaf()) return Word{t.letter};
    Word out = foliage(*t.left);
    Word right = foliage(*t.right);
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

int rank(const BracketedWord& t) {
    if (t.is_leaf()) return 1;
    return rank(*t.left) + rank(*t.right);
}

}  // namespace malcev
