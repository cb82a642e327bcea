#include "malcev/linalg.hpp"

#include <stdexcept>

#include "malcev/errors.hpp"

namespace malcev {

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec vec_add(Vec a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vector lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec vec_sub(Vec a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vector lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

Vec vec_scale(const Rational& c, Vec a) {
    for (auto& x : a) x *= c;
    return a;
}

Mat rref(Mat rows) {
    if (rows.empty()) return rows;
    const std::size_t width = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != width) throw ShapeMismatch("ragged matrix");

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
        std::size_t found = pivot_row;
        while (found < rows.size() && rows[found][col].is_zero()) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[pivot_row], rows[found]);
        Rational inv = rows[pivot_row][col].inverse();
        for (auto& x : rows[pivot_row]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            Rational factor = rows[r][col];
            for (std::size_t c = 0; c < width; ++c)
                rows[r][c] -= factor * rows[pivot_row][c];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

Vec reduce_against(const Mat& basis, Vec v) {
    for (const auto& row : basis) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (lead == row.size()) continue;
        if (lead >= v.size()) throw ShapeMismatch("vector shorter than basis row");
        if (v[lead].is_zero()) continue;
        Rational factor = v[lead];  // pivot is 1 in an rref basis
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= factor * row[c];
    }
    return v;
}

bool in_span(const Mat& basis, const Vec& v) {
    return vec_is_zero(reduce_against(basis, v));
}

std::optional<Vec> solve_linear(const Mat& columns, const Vec& b) {
    const std::size_t k = columns.size();
    const std::size_t d = b.size();
    for (const auto& c : columns)
        if (c.size() != d) throw ShapeMismatch("column length differs from rhs");

    Mat aug(d, Vec(k + 1));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = columns[j][i];
        aug[i][k] = b[i];
    }
    Mat e = rref(std::move(aug));
    Vec x(k);
    for (const auto& row : e) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (lead == k) return std::nullopt;  // 0 = nonzero: inconsistent
        if (lead < k) x[lead] = row[k];
    }
    return x;
}

std::vector<Mat> adapted_layers(const std::vector<Mat>& chain) {
    std::vector<Mat> layers;
    for (std::size_t d = 0; d + 1 < chain.size(); ++d) {
        Mat acc = chain[d + 1];
        Mat layer;
        for (const auto& row : chain[d]) {
            Vec residual = reduce_against(acc, row);
            if (vec_is_zero(residual)) continue;
            layer.push_back(residual);
            acc.push_back(residual);
            acc = rref(std::move(acc));
        }
        layers.push_back(std::move(layer));
    }
    return layers;
}

std::vector<Vec> layer_components(const std::vector<Mat>& layers, const Vec& v) {
    Mat all;
    for (const auto& layer : layers)
        for (const auto& row : layer) all.push_back(row);
    auto coords = solve_linear(all, v);
    if (!coords)
        throw std::logic_error("vector outside the adapted span");
    std::vector<Vec> out;
    std::size_t idx = 0;
    for (const auto& layer : layers) {
        Vec part(v.size());
        for (const auto& row : layer) {
            if (!(*coords)[idx].is_zero())
                part = vec_add(std::move(part), vec_scale((*coords)[idx], row));
            ++idx;
        }
        out.push_back(std::move(part));
    }
    return out;
}

}  // namespace malcev
