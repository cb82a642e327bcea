#include "malcev/word.hpp"

#include <algorithm>
#include <cctype>

#include "malcev/errors.hpp"

namespace malcev {

std::strong_ordering graded_lex_compare(const Word& u, const Word& v) {
    if (u.size() != v.size())
        return u.size() <=> v.size();
    return u <=> v;
}

bool lex_less(const Word& u, const Word& v) {
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

std::string word_str(const Word& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    out += ']';
    return out;
}

Word parse_word(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("bad word literal: " + text);
    Word w;
    std::string content = s.substr(1, s.size() - 2);
    if (content.empty()) return w;
    std::size_t pos = 0;
    while (true) {
        std::size_t end = content.find(',', pos);
        std::string item = content.substr(pos, end == std::string::npos ? end : end - pos);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            throw ParseError("bad word letter: " + text);
        w.push_back(std::stoi(item));
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    return w;
}

}  // namespace malcev
