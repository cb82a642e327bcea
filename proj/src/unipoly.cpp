#include "malcev/unipoly.hpp"

#include <cctype>

#include "malcev/errors.hpp"

namespace malcev {

UniPoly::UniPoly(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::variable() {
    return UniPoly(std::vector<Rational>{Rational(0), Rational(1)});
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational();
    return coeffs_[i];
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

UniPoly& UniPoly::operator/=(const Rational& c) {
    if (c.is_zero()) throw DivisionByZero("polynomial division by zero rational");
    for (auto& x : coeffs_) x /= c;
    return *this;
}

std::string UniPoly::str(bool compact) const {
    if (is_zero()) return "0";
    const char* plus = compact ? "+" : " + ";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += plus;
        if (i == 0) {
            out += coeffs_[i].str();
            continue;
        }
        if (coeffs_[i].is_one())
            out += "l";
        else if (coeffs_[i] == Rational(-1))
            out += "-l";
        else
            out += coeffs_[i].str() + "*l";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

UniPoly UniPoly::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty polynomial literal");

    std::vector<Rational> coeffs;
    auto add_term = [&](const Rational& c, int deg) {
        if (deg >= static_cast<int>(coeffs.size())) coeffs.resize(deg + 1);
        coeffs[deg] += c;
    };

    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find('+', pos + 1);  // a leading '-' belongs to the term
        if (end == std::string::npos) end = s.size();
        std::string term = s.substr(pos, end - pos);
        pos = (end == s.size()) ? end : end + 1;
        if (term.empty()) throw ParseError("bad polynomial literal: " + text);

        auto lpos = term.find('l');
        if (lpos == std::string::npos) {
            add_term(Rational::parse(term), 0);
            continue;
        }
        std::string head = term.substr(0, lpos);
        std::string tail = term.substr(lpos + 1);
        Rational c(1);
        if (head == "-")
            c = Rational(-1);
        else if (!head.empty()) {
            if (head.back() != '*')
                throw ParseError("bad polynomial term: " + term);
            c = Rational::parse(head.substr(0, head.size() - 1));
        }
        int deg = 1;
        if (!tail.empty()) {
            if (tail[0] != '^' || tail.size() < 2)
                throw ParseError("bad polynomial term: " + term);
            for (std::size_t i = 1; i < tail.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(tail[i])))
                    throw ParseError("bad polynomial term: " + term);
            deg = std::stoi(tail.substr(1));
        }
        add_term(c, deg);
    }
    return UniPoly(std::move(coeffs));
}

}  // namespace malcev
