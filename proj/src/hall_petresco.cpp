#include "malcev/hall_petresco.hpp"

namespace malcev {

std::vector<GroupElement<Rational>> hall_petresco_tau(int n, int c) {
    if (n < 2) throw ShapeMismatch("need at least 2 generators");
    if (c < 2) throw TruncationTooSmall("need class >= 2");

    std::vector<GroupElement<Rational>> xi;
    xi.reserve(n);
    for (int i = 0; i < n; ++i)
        xi.push_back(exp(TruncatedSeries<Rational>::generator(n, c, i)));
    auto prod = xi[0];
    for (int i = 1; i < n; ++i) prod = group_mul(prod, xi[i]);

    std::vector<GroupElement<Rational>> taus;  // taus[k] = tau_{k+2}
    for (int m = 2; m <= c; ++m) {
        auto lhs = group_power(xi[0], Rational(m));
        for (int i = 1; i < n; ++i) lhs = group_mul(lhs, group_power(xi[i], Rational(m)));
        auto prefix = group_power(prod, Rational(m));
        for (int i = 2; i < m; ++i)
            prefix = group_mul(prefix, group_power(taus[i - 2], Rational::binomial(m, i)));
        auto tau = group_mul(group_inv(prefix), lhs);
        auto v = valuation(log(tau));
        if (v.has_value() && *v < m)
            throw std::logic_error("tau_" + std::to_string(m) + " escapes filtration layer " +
                                   std::to_string(m));
        taus.push_back(std::move(tau));
    }
    return taus;
}

bool verify_hall_petresco(int n, int c) {
    auto taus = hall_petresco_tau(n, c);

    const UniPoly lambda = UniPoly::variable();
    std::vector<GroupElement<UniPoly>> xi;
    xi.reserve(n);
    for (int i = 0; i < n; ++i)
        xi.push_back(exp(TruncatedSeries<UniPoly>::generator(n, c, i)));

    auto lhs = group_power(xi[0], lambda);
    for (int i = 1; i < n; ++i) lhs = group_mul(lhs, group_power(xi[i], lambda));

    auto prod = xi[0];
    for (int i = 1; i < n; ++i) prod = group_mul(prod, xi[i]);
    auto rhs = group_power(prod, lambda);
    for (int i = 2; i <= c; ++i) {
        auto tau = GroupElement<UniPoly>(lift_to_unipoly(taus[i - 2].series()));
        rhs = group_mul(rhs, group_power(tau, binomial_poly(i)));
    }
    return lhs == rhs;
}

}  // namespace malcev
