#include "gapkit/doubling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace gapkit {

Word GoodHom::boundary_word(int index) const {
    switch (index) {
        case 0: return "BC";
        case 1: return "b";
        case 2: return "c";
        default: throw DimensionMismatch("boundary index out of range");
    }
}

namespace {

// Eigendecomposition sorted by strictly decreasing eigenvalue (not |.|).
std::pair<Vec, Mat> eig_decreasing(const Mat& m) {
    EigenData e = eigen_real_simple(m);
    const int n = static_cast<int>(e.values.size());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return e.values(a) > e.values(b); });
    Vec vals(n);
    Mat vecs(n, n);
    for (int i = 0; i < n; ++i) {
        vals(i) = e.values(idx[i]);
        vecs.col(i) = e.vectors.col(idx[i]);
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (!(vals(i) > vals(i + 1)))
            throw NotPurelyLoxodromic("eigenvalues not strictly decreasing");
    }
    return {vals, vecs};
}

} // namespace

GoodHom make_good(const SurfaceRep& rep, int base_boundary) {
    GoodHom g;
    g.base = base_boundary;
    g.rep = rep;
    const Mat m = rep.eval(g.boundary_word(base_boundary));
    auto [vals, k] = eig_decreasing(m);
    const Mat kinv = k.inverse();
    for (auto& [name, mat] : g.rep.generators) mat = kinv * mat * k;
    return g;
}

Mat r_bar(const GoodHom& r, const Word& arc_times_boundary, const Vec& delta_diag) {
    const Mat m = r.eval(arc_times_boundary);
    auto [vals, k] = eig_decreasing(m);
    return k * delta_diag.asDiagonal() * k.inverse();
}

Mat jn_matrix(int n) {
    Mat j = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) j(i, i) = (i % 2 == 0) ? 1.0 : -1.0;
    return j;
}

double scalar_identity_residual(const Mat& m) {
    const int n = static_cast<int>(m.rows());
    const double s = m.trace() / n;
    Mat d = m - s * Mat::Identity(n, n);
    return d.cwiseAbs().maxCoeff() / std::max(m.cwiseAbs().maxCoeff(), 1e-300);
}

DoubleRep j_extension(const GoodHom& r, const Mat& j) {
    const int n = r.dim();
    if (j.rows() != n) throw DimensionMismatch("J dimension");
    if (scalar_identity_residual(j * j) > 1e-10)
        throw RelationViolation("J is not an involution up to scalar");
    // J must commute with diagonal matrices, i.e. be diagonal itself
    Mat offdiag = j;
    offdiag.diagonal().setZero();
    if (offdiag.cwiseAbs().maxCoeff() > 1e-12 * j.cwiseAbs().maxCoeff())
        throw RelationViolation("J must be diagonal");
    // good representative check: base boundary diagonal decreasing
    Mat d0 = r.eval(r.boundary_word(r.base));
    Mat d0_off = d0;
    d0_off.diagonal().setZero();
    if (d0_off.cwiseAbs().maxCoeff() > 1e-8 * d0.cwiseAbs().maxCoeff())
        throw RelationViolation("base boundary image is not diagonal");

    DoubleRep d;
    d.J = j;
    d.B0 = r.eval("b");
    d.C0 = r.eval("c");
    d.B1 = j * d.B0 * j.inverse();
    d.C1 = j * d.C0 * j.inverse();
    const Vec jd = j.diagonal();
    // the two non-base boundaries, in index order, give the arc generators
    std::array<int, 2> others{};
    int pos = 0;
    for (int i = 0; i < 3; ++i)
        if (i != r.base) others[pos++] = i;
    d.X1 = r_bar(r, r.boundary_word(others[0]), jd) * j;
    d.X2 = r_bar(r, r.boundary_word(others[1]), jd) * j;
    return d;
}

Mat DoubleRep::eval(const Word& w) const {
    const int n = dim();
    Mat m = Mat::Identity(n, n);
    auto gen = [&](char lower) -> const Mat& {
        switch (lower) {
            case 'b': return B0;
            case 'c': return C0;
            case 'd': return B1;
            case 'e': return C1;
            case 'x': return X1;
            case 'y': return X2;
            default: throw DimensionMismatch("unknown double generator");
        }
    };
    for (char ch : w) {
        const Mat& g = gen(static_cast<char>(std::tolower(ch)));
        m = std::isupper(ch) ? Mat(m * g.inverse()) : Mat(m * g);
    }
    return m;
}

double h_generator_residual(const GoodHom& r, const DoubleRep& d) {
    std::array<int, 2> others{};
    int pos = 0;
    for (int i = 0; i < 3; ++i)
        if (i != r.base) others[pos++] = i;
    auto rel = [&](const Word& boundary, const Mat& x) {
        const Mat rb = r.eval(boundary);
        return scalar_identity_residual(rb.inverse() * x * d.J * rb * d.J * x.inverse());
    };
    const Mat base = r.eval(r.boundary_word(r.base));
    const double base_res = scalar_identity_residual(
        base.inverse() * d.J * base * d.J);
    return std::max({base_res, rel(r.boundary_word(others[0]), d.X1),
                     rel(r.boundary_word(others[1]), d.X2)});
}

double double_relation_residual(const DoubleRep& d) {
    return scalar_identity_residual(d.eval("cbXBxYCy"));
}

std::vector<double> trace_spectrum(const DoubleRep& d,
                                   const std::vector<Word>& words) {
    std::vector<double> out;
    out.reserve(words.size());
    for (const Word& w : words) out.push_back(d.eval(w).trace());
    return out;
}

std::vector<Word> default_word_sample(int count, unsigned seed) {
    std::mt19937 rng(seed);
    const std::string letters = "bcdexyBCDEXY";
    std::uniform_int_distribution<int> len(2, 6);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(letters.size()) - 1);
    std::vector<Word> out;
    while (static_cast<int>(out.size()) < count) {
        Word w;
        const int l = len(rng);
        while (static_cast<int>(w.size()) < l) {
            const char ch = letters[pick(rng)];
            if (!w.empty() && (std::isupper(ch) ? std::tolower(ch) : std::toupper(ch)) ==
                                  w.back()) {
                continue;
            }
            w.push_back(ch);
        }
        out.push_back(w);
    }
    return out;
}

} // namespace gapkit
