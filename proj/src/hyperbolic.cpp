#include "gapkit/hyperbolic.hpp"

#include <cmath>

namespace gapkit {

MobiusMap::MobiusMap(const Eigen::Matrix2d& a) {
    const double d = a.determinant();
    if (d <= 0.0) throw SingularInput("MobiusMap requires positive determinant");
    m = a / std::sqrt(d);
}

double translation_length(const MobiusMap& map) {
    const double t = std::abs(map.trace());
    if (t <= 2.0) return 0.0;
    return 2.0 * std::acosh(t / 2.0);
}

std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const MobiusMap& map) {
    const double tr = map.trace();
    const double disc = tr * tr - 4.0;
    const Eigen::Matrix2d& m = map.m;
    if (disc > 1e-18) {
        auto eigvec = [&](double lambda) {
            const Eigen::Vector2d v1(m(0, 1), lambda - m(0, 0));
            const Eigen::Vector2d v2(lambda - m(1, 1), m(1, 0));
            return BoundaryPoint(v1.norm() >= v2.norm() ? v1 : v2);
        };
        const double s = std::sqrt(disc);
        const double l1 = (tr + s) / 2.0, l2 = (tr - s) / 2.0;
        const double big = std::abs(l1) >= std::abs(l2) ? l1 : l2;
        const double small = std::abs(l1) >= std::abs(l2) ? l2 : l1;
        return {eigvec(big), eigvec(small)};
    }
    if (disc > -1e-9) {
        // parabolic: kernel of m - (tr/2) Id
        const Eigen::Matrix2d n = m - (tr / 2.0) * Eigen::Matrix2d::Identity();
        if (n.cwiseAbs().maxCoeff() < 1e-12) {
            throw EllipticElement("identity has no canonical fixed point");
        }
        const Eigen::Vector2d v1(n(0, 1), -n(0, 0));
        const Eigen::Vector2d v2(n(1, 1), -n(1, 0));
        BoundaryPoint fp(v1.norm() >= v2.norm() ? v1 : v2);
        return {fp, fp};
    }
    throw EllipticElement("complex fixed points");
}

FuchsianPants pants_rep_from_lengths(double la, double lb, double lc) {
    if (la < 0 || lb < 0 || lc < 0) throw InvalidLengths("negative boundary length");
    if (la == 0 && lb == 0 && lc == 0)
        throw InvalidLengths("at least one boundary must have positive length");
    const double ta = -2.0 * std::cosh(la / 2.0);
    const double tb = -2.0 * std::cosh(lb / 2.0);
    const double tc = -2.0 * std::cosh(lc / 2.0);
    Eigen::Matrix2d mc, mb;
    mc << tc, 1.0, -1.0, 0.0;
    const double z = (ta - std::sqrt(std::max(ta * ta - 4.0, 0.0))) / 2.0;
    mb << 0.0, -z, 1.0 / z, tb;
    FuchsianPants p;
    p.gamma = MobiusMap(mc);
    p.beta = MobiusMap(mb);
    p.alpha = MobiusMap((mc * mb).inverse());
    p.la = la;
    p.lb = lb;
    p.lc = lc;
    return p;
}

ShearCoords shear_coords(const FuchsianPants& p, FixedPointChoice choice) {
    auto pick = [](const MobiusMap& m, FixedPointSign s) {
        auto [plus, minus] = fixed_points(m);
        return s == FixedPointSign::plus ? plus : minus;
    };
    const BoundaryPoint a0 = pick(p.alpha, choice.alpha);
    const BoundaryPoint b0 = pick(p.beta, choice.beta);
    const BoundaryPoint c0 = pick(p.gamma, choice.gamma);
    ShearCoords s;
    s.choice = choice;
    s.B = -classical_b(a0, b0, c0, p.alpha.inverse()(b0));
    s.C = -classical_b(b0, c0, a0, p.alpha(c0));
    s.A = -classical_b(c0, a0, b0, p.beta(a0));
    if (!(s.A > 0) || !(s.B > 0) || !(s.C > 0))
        throw DegenerateConfiguration("non-positive shear coordinate");
    s.l0a = std::log(s.B * s.C);
    s.l0b = std::log(s.A * s.C);
    s.l0c = std::log(s.A * s.B);
    return s;
}

double gap_formula(GapKind kind, double la, double lb, double lc) {
    if (la < 0 || lb < 0 || lc < 0) throw InvalidLengths("negative length");
    return gap_formula_t<double>(kind, la, lb, lc);
}

double w_alpha_parabolic(const MobiusMap& alpha, const BoundaryPoint& s,
                         const BoundaryPoint& t) {
    if (!alpha.is_parabolic()) throw NotParabolicBoundary("alpha must be parabolic");
    const BoundaryPoint ap = fixed_points(alpha).first;
    if (same_point(s, ap) || same_point(t, ap))
        throw DegenerateQuadruple("point at the cusp");
    return classical_b(alpha(s), ap, t, s);
}

} // namespace gapkit
