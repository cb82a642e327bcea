#include "malcev/collect.hpp"

namespace malcev {

MlsDecomposition<Rational> mls_sum_formula(int N) {
    if (N < 1) throw ShapeMismatch("truncation_order must be >= 1");
    auto x0 = TruncatedSeries<Rational>::generator(2, N, 0);
    auto x1 = TruncatedSeries<Rational>::generator(2, N, 1);
    return collect(exp(x0 + x1));
}

MlsDecomposition<Rational> mls_bracket_formula(int N) {
    if (N < 2)
        throw TruncationTooSmall("bracket formula needs truncation >= 2");
    auto x0 = TruncatedSeries<Rational>::generator(2, N, 0);
    auto x1 = TruncatedSeries<Rational>::generator(2, N, 1);
    return collect(exp(lie_bracket(x0, x1)));
}

}  // namespace malcev
