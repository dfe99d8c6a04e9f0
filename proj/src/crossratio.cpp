#include "gapkit/crossratio.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace gapkit {

BoundaryPoint::BoundaryPoint(const Eigen::Vector2d& p) : v(p) {
    if (v.norm() < 1e-300) throw DegenerateConfiguration("zero representative");
    v.normalize();
}

BoundaryPoint BoundaryPoint::from_angle(double theta) {
    return BoundaryPoint({std::cos(theta), std::sin(theta)});
}

double BoundaryPoint::angle() const {
    double th = std::atan2(v(1), v(0));
    const double pi = std::numbers::pi;
    while (th < 0) th += pi;
    while (th >= pi) th -= pi;
    return th;
}

bool same_point(const BoundaryPoint& a, const BoundaryPoint& b, double tol) {
    return std::abs(a.v(0) * b.v(1) - a.v(1) * b.v(0)) <= tol;
}

namespace {
double det2(const Eigen::Vector2d& p, const Eigen::Vector2d& q) {
    return p(0) * q(1) - p(1) * q(0);
}
} // namespace

double classical_b(const BoundaryPoint& x, const BoundaryPoint& y,
                   const BoundaryPoint& z, const BoundaryPoint& t) {
    const double num = det2(x.v, y.v) * det2(z.v, t.v);
    const double den = det2(x.v, t.v) * det2(z.v, y.v);
    if (std::abs(den) < 1e-300)
        throw DegenerateQuadruple("x = t or z = y");
    return num / den;
}

double weak_cross_ratio(const FlagPairPoint& x, const FlagPairPoint& y,
                        const FlagPairPoint& z, const FlagPairPoint& t) {
    const double xy = x.line.dot(y.hyperplane);
    const double zt = z.line.dot(t.hyperplane);
    const double zy = z.line.dot(y.hyperplane);
    const double xt = x.line.dot(t.hyperplane);
    const double scale = x.line.norm() * y.hyperplane.norm() *
                         z.line.norm() * t.hyperplane.norm();
    if (std::abs(zy * xt) < 1e-24 * std::max(scale * scale, 1e-300))
        throw ZeroPairing("vanishing pairing in denominator");
    return (xy * zt) / (zy * xt);
}

double period(const Evaluator& B, const PointMap& gamma,
              const BoundaryPoint& gamma_plus, const BoundaryPoint& gamma_minus,
              const BoundaryPoint& y) {
    if (same_point(y, gamma_plus) || same_point(y, gamma_minus))
        throw DegenerateQuadruple("witness at a fixed point");
    return std::log(std::abs(B(gamma_minus, gamma(y), gamma_plus, y)));
}

double AxiomsReport::max_residual() const {
    return std::max({zero_norm, one_norm, cocycle_first, cocycle_second, pair_swap, inverse_xz, inverse_yt});
}

namespace {

std::vector<BoundaryPoint> sample_points(std::mt19937_64& rng, int k) {
    std::uniform_real_distribution<double> dist(0.0, std::numbers::pi);
    std::vector<double> angles;
    while (static_cast<int>(angles.size()) < k) {
        const double a = dist(rng);
        bool ok = true;
        for (double b : angles)
            if (std::abs(a - b) < 1e-3 || std::abs(std::abs(a - b) - std::numbers::pi) < 1e-3)
                ok = false;
        if (ok) angles.push_back(a);
    }
    std::vector<BoundaryPoint> pts;
    pts.reserve(k);
    for (double a : angles) pts.push_back(BoundaryPoint::from_angle(a));
    return pts;
}

double rel_err(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

} // namespace

AxiomsReport axioms_check(const Evaluator& B, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    AxiomsReport r;
    for (int i = 0; i < count; ++i) {
        auto p = sample_points(rng, 5);
        const auto &x = p[0], &y = p[1], &z = p[2], &t = p[3], &w = p[4];
        // zero normalization: B = 0 iff first = second or third = fourth
        r.zero_norm = std::max({r.zero_norm, std::abs(B(x, x, z, t)), std::abs(B(x, y, z, z))});
        if (std::abs(B(x, y, z, t)) < 1e-12) r.zero_norm = std::max(r.zero_norm, 1.0);
        // one normalization: B = 1 iff first = third or second = fourth
        r.one_norm = std::max({r.one_norm, std::abs(B(x, y, x, t) - 1.0),
                          std::abs(B(x, y, z, y) - 1.0)});
        // multiplicative cocycles in (first, third) and (second, fourth)
        r.cocycle_first = std::max(r.cocycle_first, rel_err(B(x, y, z, t), B(x, y, w, t) * B(w, y, z, t)));
        r.cocycle_second = std::max(r.cocycle_second, rel_err(B(x, y, z, t), B(x, y, z, w) * B(x, w, z, t)));
        // symmetries
        const double v = B(x, y, z, t);
        r.pair_swap = std::max(r.pair_swap, rel_err(v, B(z, t, x, y)));
        r.inverse_xz = std::max(r.inverse_xz, rel_err(v * B(z, y, x, t), 1.0));
        r.inverse_yt = std::max(r.inverse_yt, rel_err(v * B(x, t, z, y), 1.0));
    }
    return r;
}

OrderedReport ordered_check(const Evaluator& B, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double m11 = std::numeric_limits<double>::infinity();
    double m12 = m11, msep = m11;
    double i11 = m11, i12 = m11;
    for (int i = 0; i < count; ++i) {
        auto p = sample_points(rng, 4);
        std::sort(p.begin(), p.end(), [](const BoundaryPoint& a, const BoundaryPoint& b) {
            return a.angle() < b.angle();
        });
        // cyclically ordered quadruple (t, x, y, z)
        const auto &t = p[0], &x = p[1], &y = p[2], &z = p[3];
        m11 = std::min(m11, B(x, z, t, y) - 1.0);
        m12 = std::min(m12, -B(x, y, z, t));
        i11 = std::min(i11, 1.0 / B(x, z, t, y) - 1.0);
        i12 = std::min(i12, -1.0 / B(x, y, z, t));
        // separation signs: pairs (arg1, arg3) and (arg2, arg4)
        const double nonsep = B(p[0], p[2], p[1], p[3]);  // pairs (p0,p1),(p2,p3)
        const double sep = B(p[0], p[1], p[2], p[3]);     // pairs (p0,p2),(p1,p3)
        msep = std::min({msep, nonsep, -sep});
    }
    OrderedReport out;
    out.above_one_margin = m11;
    out.negative_margin = m12;
    out.separation_margin = msep;
    out.ordered = m11 > 0 && m12 > 0;
    out.inverse_ordered = !out.ordered && i11 > 0 && i12 > 0;
    return out;
}

double HyperbolicIdentityReport::max_residual() const {
    return std::max({complement, anharmonic, transpose});
}

HyperbolicIdentityReport hyperbolic_identity_check(const Evaluator& B, int count,
                                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    HyperbolicIdentityReport r;
    for (int i = 0; i < count; ++i) {
        auto p = sample_points(rng, 4);
        const auto &x = p[0], &y = p[1], &z = p[2], &t = p[3];
        r.complement = std::max(r.complement, rel_err(1.0 - B(t, y, z, x), B(x, y, z, t)));
        r.anharmonic = std::max({r.anharmonic,
                           rel_err(B(x, y, z, t), 1.0 - 1.0 / B(y, z, x, t)),
                           rel_err(B(x, y, z, t), 1.0 / (1.0 - B(z, x, y, t)))});
        r.transpose = std::max(r.transpose, rel_err(B(x, y, z, t), B(y, x, t, z)));
    }
    return r;
}

} // namespace gapkit
