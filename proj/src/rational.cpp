#include "malcev/rational.hpp"

#include <cctype>

namespace malcev {

Rational::Rational(long long num, long long den) {
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    Int n(num), d(den);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    v_ = Backend(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DivisionByZero("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    return Rational(Backend(1 / v_));
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty())
        throw ParseError("empty rational literal");
    auto ok_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!ok_int(s))
                throw ParseError("bad rational literal: " + text);
            return Rational(Backend(Int(s)));
        }
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!ok_int(p) || !ok_int(q))
            throw ParseError("bad rational literal: " + text);
        Int den(q);
        if (den == 0)
            throw DivisionByZero("rational literal with zero denominator: " + text);
        Int num(p);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(Backend(num, den));
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw ParseError("bad rational literal: " + text);
    }
}

Rational Rational::binomial(long long n, long long k) {
    if (k < 0 || k > n) return Rational();
    Int num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= Int(n - i);
        den *= Int(i + 1);
    }
    return Rational(Backend(num, den));
}

std::string Rational::str() const {
    std::string out = numerator().str();
    if (!is_integer()) {
        out += '/';
        out += denominator().str();
    }
    return out;
}

}  // namespace malcev
