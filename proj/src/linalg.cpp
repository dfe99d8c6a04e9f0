#include "gapkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gapkit {

Mat projective_normalize(const Mat& m) {
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n) throw DimensionMismatch("square matrix required");
    const double d = m.determinant();
    if (std::abs(d) < 1e-300) throw SingularInput("zero determinant");
    Mat out = m / std::pow(std::abs(d), 1.0 / n);
    const double scale = out.cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (std::abs(out(i, j)) > 1e-14 * scale) {
                if (out(i, j) < 0) out = -out;
                return out;
            }
        }
    }
    return out;
}

bool projectively_equal(const Mat& a, const Mat& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    // match scales at the largest entry of b: determinant-based normalization
    // loses precision for large-entry matrices with small determinants
    Eigen::Index i = 0, j = 0;
    const double bmax = b.cwiseAbs().maxCoeff(&i, &j);
    if (bmax == 0.0) return a.cwiseAbs().maxCoeff() == 0.0;
    const double s = a(i, j) / b(i, j);
    const double scale = std::max(a.cwiseAbs().maxCoeff(), std::abs(s) * bmax);
    if (scale == 0.0) return true;
    return (a - s * b).cwiseAbs().maxCoeff() <= tol * scale;
}

ProjectiveMatrix::ProjectiveMatrix(Mat m) : entries(projective_normalize(m)) {}

double volume_form(const std::vector<Vec>& vectors) {
    const int n = static_cast<int>(vectors.size());
    if (n == 0) throw DimensionMismatch("no vectors");
    Mat m(n, n);
    for (int j = 0; j < n; ++j) {
        if (vectors[j].size() != n) throw DimensionMismatch("vector dimension != count");
        m.col(j) = vectors[j];
    }
    return m.determinant();
}

namespace {

// Real roots of the characteristic polynomial, or empty if complex roots.
std::vector<double> char_roots_real(const Mat& m) {
    const int n = static_cast<int>(m.rows());
    if (n == 2) {
        const double tr = m.trace();
        const double det = m.determinant();
        const double disc = tr * tr - 4.0 * det;
        if (disc <= 0.0) return {};
        const double s = std::sqrt(disc);
        return {(tr + s) / 2.0, (tr - s) / 2.0};
    }
    if (n == 3) {
        // lambda^3 - c2 lambda^2 + c1 lambda - c0
        const double c2 = m.trace();
        const double c1 = (c2 * c2 - (m * m).trace()) / 2.0;
        const double c0 = m.determinant();
        // depressed: t^3 + p t + q with lambda = t + c2/3
        const double p = c1 - c2 * c2 / 3.0;
        const double q = -2.0 * c2 * c2 * c2 / 27.0 + c2 * c1 / 3.0 - c0;
        if (p >= 0.0) return {};  // three distinct real roots need p < 0
        const double r = std::sqrt(-p / 3.0);
        double cosarg = 3.0 * q / (2.0 * p * r);
        if (std::abs(cosarg) > 1.0 + 1e-9) return {};
        cosarg = std::clamp(cosarg, -1.0, 1.0);
        const double phi = std::acos(cosarg);
        std::vector<double> roots(3);
        for (int k = 0; k < 3; ++k) {
            roots[k] = 2.0 * r * std::cos((phi - 2.0 * std::numbers::pi * k) / 3.0)
                       + c2 / 3.0;
        }
        return roots;
    }
    throw DimensionMismatch("eigen_real_simple supports n = 2, 3 only");
}

} // namespace

EigenData eigen_real_simple(const Mat& m, double separation_threshold) {
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n) throw DimensionMismatch("square matrix required");
    std::vector<double> roots = char_roots_real(m);
    if (roots.empty()) throw NotPurelyLoxodromic("complex eigenvalues");

    std::sort(roots.begin(), roots.end(),
              [](double a, double b) { return std::abs(a) > std::abs(b); });
    double separation = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        const double hi = std::abs(roots[i]), lo = std::abs(roots[i + 1]);
        separation = std::min(separation, (hi - lo) / std::max(hi, 1e-300));
    }
    if (!(separation >= separation_threshold))
        throw NotPurelyLoxodromic("eigenvalue separation below threshold");

    EigenData out;
    out.values = Vec(n);
    out.vectors = Mat(n, n);
    out.separation = separation;
    const double mnorm = m.cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i) {
        double lambda = roots[i];
        // inverse iteration from a fixed deterministic start
        Vec v = Vec::Ones(n);
        for (int k = 0; k < n; ++k) v(k) += 0.01 * (k + 1);
        v.normalize();
        for (int iter = 0; iter < 4; ++iter) {
            Mat shifted = m - lambda * Mat::Identity(n, n);
            // tiny regularization keeps the solve finite at exact convergence;
            // partial-pivot LU (not rank-revealing) preserves the near-null
            // direction the iteration is after
            shifted.diagonal().array() += 1e-14 * std::max(mnorm, 1.0);
            Eigen::PartialPivLU<Mat> lu(shifted);
            Vec w = lu.solve(v);
            const double wn = w.norm();
            if (!std::isfinite(wn) || wn == 0.0) break;
            v = w / wn;
            // Rayleigh-style update from the dominant component
            int imax = 0;
            v.cwiseAbs().maxCoeff(&imax);
            const Vec mv = m * v;
            lambda = mv(imax) / v(imax);
        }
        // extended-precision polish: for strongly non-normal matrices the
        // double-precision Rayleigh quotient can leave the small eigenvalues
        // with relative error well above machine precision
        using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
        using LVec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
        const LMat ml = m.cast<long double>();
        LVec vl = v.cast<long double>();
        long double ll = lambda;
        for (int iter = 0; iter < 3; ++iter) {
            LMat shifted = ml - ll * LMat::Identity(n, n);
            shifted.diagonal().array() += 1e-22L * std::max<long double>(mnorm, 1.0L);
            LVec w = shifted.partialPivLu().solve(vl);
            const long double wn = w.norm();
            if (!std::isfinite(static_cast<double>(wn)) || wn == 0.0L) break;
            vl = w / wn;
            int imax = 0;
            vl.cwiseAbs().maxCoeff(&imax);
            ll = (ml * vl)(imax) / vl(imax);
        }
        lambda = static_cast<double>(ll);
        v = vl.cast<double>();
        const double residual = (m * v - lambda * v).norm();
        if (residual > 1e-8 * std::max(mnorm, 1.0))
            throw NotPurelyLoxodromic("inverse iteration failed to converge");
        out.values(i) = lambda;
        out.vectors.col(i) = v;
    }
    // re-sort after polish (order can only change for near-ties, already rejected)
    return out;
}

Flag::Flag(Mat b) : basis(std::move(b)) {
    if (basis.rows() != basis.cols()) throw DimensionMismatch("flag basis must be square");
    Eigen::FullPivLU<Mat> lu(basis);
    if (lu.rank() < basis.rows()) throw NotGeneralPosition("flag basis not independent");
}

Flag apply(const Mat& m, const Flag& f) { return Flag(m * f.basis); }

bool subspace_equal(const Mat& a, const Mat& b, double tol) {
    if (a.rows() != b.rows()) return false;
    auto rank_of = [&](const Mat& x) {
        Eigen::ColPivHouseholderQR<Mat> qr(x);
        qr.setThreshold(tol);
        return qr.rank();
    };
    const auto ra = rank_of(a);
    const auto rb = rank_of(b);
    if (ra != rb) return false;
    Mat joint(a.rows(), a.cols() + b.cols());
    joint << a, b;
    return rank_of(joint) == ra;
}

bool flags_equal(const Flag& f, const Flag& g, double tol) {
    if (f.dim() != g.dim()) return false;
    for (int k = 1; k <= f.dim(); ++k) {
        if (!subspace_equal(f.subspace(k), g.subspace(k), tol)) return false;
    }
    return true;
}

Flag flag_from_eigenvectors(const EigenData& e, const std::vector<int>& u) {
    const int n = static_cast<int>(e.values.size());
    if (static_cast<int>(u.size()) != n) throw DimensionMismatch("permutation size");
    std::vector<bool> seen(n, false);
    Mat b(n, n);
    for (int k = 0; k < n; ++k) {
        if (u[k] < 0 || u[k] >= n || seen[u[k]]) throw DimensionMismatch("invalid permutation");
        seen[u[k]] = true;
        b.col(k) = e.vectors.col(u[k]);
    }
    return Flag(b);
}

Flag dual_flag(const Flag& f) {
    // rows of basis^{-1} are the dual basis; G^k = annihilator of F^{n-k}
    // = span of the last k dual vectors, so reverse their order.
    const int n = f.dim();
    Mat dual = f.basis.inverse().transpose();
    Mat b(n, n);
    for (int k = 0; k < n; ++k) b.col(k) = dual.col(n - 1 - k);
    return Flag(b);
}

Flag compatible_flag(const Flag& f1, const Flag& f2, int p) {
    const int n = f1.dim();
    if (f2.dim() != n) throw DimensionMismatch("flag dimensions differ");
    if (p < 0 || p > n - 1) throw DimensionMismatch("p out of range");
    Mat b(n, n);
    b.leftCols(p) = f1.basis.leftCols(p);
    b.rightCols(n - p) = f2.basis.leftCols(n - p);
    Eigen::FullPivLU<Mat> lu(b);
    if (lu.rank() < n) throw NotTransverse("F1^p + F2^{n-p} not direct");
    return Flag(b);
}

Mat sym_power(const Eigen::Matrix2d& m, int n) {
    if (n < 2) throw DimensionMismatch("sym_power needs n >= 2");
    if (std::abs(m.determinant()) < 1e-300) throw SingularInput("singular 2x2 input");
    const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    const int deg = n - 1;
    Mat out = Mat::Zero(n, n);
    // column j: image of e1^{deg-j} e2^j = (a e1 + c e2)^{deg-j} (b e1 + d e2)^j
    auto binom = [](int nn, int kk) {
        double r = 1.0;
        for (int i = 1; i <= kk; ++i) r = r * (nn - kk + i) / i;
        return r;
    };
    for (int j = 0; j <= deg; ++j) {
        // coefficients of (a e1 + c e2)^{deg-j} in e1^{deg-j-k} e2^k
        std::vector<double> p1(deg - j + 1), p2(j + 1);
        for (int k = 0; k <= deg - j; ++k)
            p1[k] = binom(deg - j, k) * std::pow(a, deg - j - k) * std::pow(c, k);
        for (int k = 0; k <= j; ++k)
            p2[k] = binom(j, k) * std::pow(b, j - k) * std::pow(d, k);
        for (int k1 = 0; k1 <= deg - j; ++k1)
            for (int k2 = 0; k2 <= j; ++k2)
                out(k1 + k2, j) += p1[k1] * p2[k2];  // row = e2-degree
    }
    return out;
}

} // namespace gapkit
