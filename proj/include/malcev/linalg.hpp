#pragma once

#include <optional>
#include <vector>

#include "malcev/rational.hpp"

namespace malcev {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // rows

bool vec_is_zero(const Vec& v);
Vec vec_add(Vec a, const Vec& b);
Vec vec_sub(Vec a, const Vec& b);
Vec vec_scale(const Rational& c, Vec a);

// Reduced row echelon basis of the row span: exact Gauss-Jordan over Q
// with the deterministic first-nonzero-column pivot rule; zero rows are
// dropped, pivots normalized to 1, so equal subspaces give equal bases.
Mat rref(Mat rows);

// Remainder of v after eliminating along the pivots of an rref basis;
// zero iff v lies in the span.
Vec reduce_against(const Mat& basis, Vec v);

bool in_span(const Mat& basis, const Vec& v);

// One solution x of sum_j x_j columns[j] = b with free variables at zero,
// or nothing when inconsistent.
std::optional<Vec> solve_linear(const Mat& columns, const Vec& b);

// Given a descending chain of rref bases B_1 >= B_2 >= ... >= B_{k} (the
// last possibly empty), returns for each step d < k a set of vectors of
// B_d completing B_{d+1} to a basis of B_d's span. Concatenating layer
// d..k-1 with B_{d+1}... recovers adapted bases of every member.
std::vector<Mat> adapted_layers(const std::vector<Mat>& chain);

// Coordinates of v split along adapted layers: returns one vector per
// layer whose sum is v. v must lie in the span of the full chain head.
std::vector<Vec> layer_components(const std::vector<Mat>& layers, const Vec& v);

}  // namespace malcev
