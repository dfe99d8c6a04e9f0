#include "gapkit/positivity.hpp"

#include <cmath>

namespace gapkit {

namespace {

// Determinant of the concatenation [F(:, 0:a) | G(:, 0:b) | H(:, 0:c) | ...],
// with a scale-aware zero test.
double wedge_det(std::initializer_list<std::pair<const Flag*, int>> parts) {
    int n = 0;
    int total = 0;
    for (auto& [f, k] : parts) {
        n = f->dim();
        total += k;
    }
    if (total != n) throw DimensionMismatch("wedge degree != n");
    Mat m(n, n);
    int col = 0;
    double scale = 1.0;
    for (auto& [f, k] : parts) {
        for (int j = 0; j < k; ++j) {
            m.col(col) = f->basis.col(j);
            scale *= m.col(col).norm();
            ++col;
        }
    }
    // rank-revealing pivoted LU: comparing |det| against the Hadamard bound
    // (product of column norms) would reject well-conditioned configurations
    // whose determinant is legitimately many orders below that bound
    Eigen::FullPivLU<Mat> lu(m);
    if (lu.rank() < n || scale == 0.0)
        throw NotGeneralPosition("vanishing volume form");
    return lu.determinant();
}

} // namespace

std::vector<TripleRatioIndex> triple_ratio_indices(int n) {
    std::vector<TripleRatioIndex> out;
    for (int m = 1; m <= n - 2; ++m)
        for (int l = 1; l <= n - 1 - m; ++l) out.push_back({m, l, n - m - l});
    return out;
}

double triple_ratio(const Flag& f, const Flag& g, const Flag& h,
                    TripleRatioIndex idx) {
    const int n = f.dim();
    const int m = idx.m, l = idx.l, p = idx.p;
    if (m < 1 || l < 1 || p < 1 || m + l + p != n)
        throw DimensionMismatch("invalid triple-ratio index");
    const double num = wedge_det({{&f, m + 1}, {&g, l}, {&h, p - 1}}) *
                       wedge_det({{&f, m - 1}, {&g, l + 1}, {&h, p}}) *
                       wedge_det({{&f, m}, {&g, l - 1}, {&h, p + 1}});
    const double den = wedge_det({{&f, m + 1}, {&g, l - 1}, {&h, p}}) *
                       wedge_det({{&f, m}, {&g, l + 1}, {&h, p - 1}}) *
                       wedge_det({{&f, m - 1}, {&g, l}, {&h, p + 1}});
    return num / den;
}

double edge_fn(const Flag& x, const Flag& y, const Flag& z, const Flag& t, int i) {
    const int n = x.dim();
    if (i < 1 || i > n - 1) throw DimensionMismatch("edge index out of range");
    const double num = wedge_det({{&x, i}, {&z, n - i - 1}, {&t, 1}}) *
                       wedge_det({{&x, i - 1}, {&y, 1}, {&z, n - i}});
    const double den = wedge_det({{&x, i}, {&y, 1}, {&z, n - i - 1}}) *
                       wedge_det({{&x, i - 1}, {&z, n - i}, {&t, 1}});
    return num / den;
}

PositivityResult is_positive_triple(const Flag& f, const Flag& g, const Flag& h) {
    for (auto idx : triple_ratio_indices(f.dim())) {
        if (!(triple_ratio(f, g, h, idx) > 0.0)) {
            return {false, "triple ratio (" + std::to_string(idx.m) + "," +
                               std::to_string(idx.l) + "," + std::to_string(idx.p) +
                               ") <= 0"};
        }
    }
    return {true, {}};
}

PositivityResult is_positive_quadruple(const Flag& x, const Flag& y,
                                       const Flag& z, const Flag& t) {
    for (int i = 1; i <= x.dim() - 1; ++i) {
        if (!(edge_fn(x, y, z, t, i) > 0.0))
            return {false, "edge function " + std::to_string(i) + " <= 0"};
    }
    if (auto r = is_positive_triple(x, y, z); !r.positive)
        return {false, "triple (X,Y,Z): " + r.witness};
    if (auto r = is_positive_triple(t, x, z); !r.positive)
        return {false, "triple (T,X,Z): " + r.witness};
    return {true, {}};
}

PositivityResult is_positive_map(const std::vector<Flag>& cyclic) {
    const int k = static_cast<int>(cyclic.size());
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c)
                for (int d = c + 1; d < k; ++d) {
                    auto r = is_positive_quadruple(cyclic[a], cyclic[b], cyclic[c],
                                                   cyclic[d]);
                    if (!r.positive) {
                        return {false, "quadruple (" + std::to_string(a) + "," +
                                           std::to_string(b) + "," + std::to_string(c) +
                                           "," + std::to_string(d) + "): " + r.witness};
                    }
                }
    return {true, {}};
}

Flag veronese_flag(double t, int n) {
    Mat b = Mat::Zero(n, n);
    for (int k = 0; k < n; ++k) {       // k-th derivative
        for (int j = k; j < n; ++j) {   // monomial t^j
            double coef = 1.0;
            for (int r = 0; r < k; ++r) coef *= (j - r);
            b(j, k) = coef * std::pow(t, j - k);
        }
    }
    return Flag(b);
}

Flag secant_flag(const std::vector<double>& pts, int n) {
    if (static_cast<int>(pts.size()) != n) throw DimensionMismatch("need n points");
    Mat b(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) b(j, k) = std::pow(pts[k], j);
    return Flag(b);
}

} // namespace gapkit
