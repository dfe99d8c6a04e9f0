#pragma once
#include <Eigen/Dense>
#include <cmath>
#include "gapkit/crossratio.hpp"
#include "gapkit/errors.hpp"

namespace gapkit {

// ---------------------------------------------------------------------------
// MobiusMap: element of PSL(2,R), det normalized to 1.
// ---------------------------------------------------------------------------

struct MobiusMap {
    Eigen::Matrix2d m;

    MobiusMap() : m(Eigen::Matrix2d::Identity()) {}
    explicit MobiusMap(const Eigen::Matrix2d& a);

    [[nodiscard]] double trace() const { return m.trace(); }
    [[nodiscard]] bool is_hyperbolic(double tol = 1e-9) const {
        return std::abs(trace()) > 2.0 + tol;
    }
    [[nodiscard]] bool is_parabolic(double tol = 1e-9) const {
        return std::abs(std::abs(trace()) - 2.0) <= tol;
    }
    [[nodiscard]] MobiusMap inverse() const { return MobiusMap(m.inverse()); }
    [[nodiscard]] BoundaryPoint operator()(const BoundaryPoint& p) const {
        return BoundaryPoint(m * p.v);
    }
    friend MobiusMap operator*(const MobiusMap& a, const MobiusMap& b) {
        return MobiusMap(a.m * b.m);
    }
};

// translation length 2 arccosh(|tr|/2); 0 for parabolic
double translation_length(const MobiusMap& m);

// (attracting, repelling); both equal the unique fixed point for parabolics
std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const MobiusMap& m);

// ---------------------------------------------------------------------------
// FuchsianPants: marked pants (alpha, beta, gamma), alpha*gamma*beta = Id.
// ---------------------------------------------------------------------------

struct FuchsianPants {
    MobiusMap alpha, beta, gamma;
    double la = 0, lb = 0, lc = 0;  // boundary lengths (0 encodes a cusp)
};

// Fenchel-Nielsen style construction from boundary lengths.
FuchsianPants pants_rep_from_lengths(double la, double lb, double lc);

// ---------------------------------------------------------------------------
// Shear coordinates relative to a fixed-point choice.
// ---------------------------------------------------------------------------

enum class FixedPointSign : int { plus = 0, minus = 1 };

struct FixedPointChoice {
    FixedPointSign alpha = FixedPointSign::plus;
    FixedPointSign beta = FixedPointSign::plus;
    FixedPointSign gamma = FixedPointSign::minus;
};

struct ShearCoords {
    double A = 0, B = 0, C = 0;   // positive
    double l0a = 0, l0b = 0, l0c = 0;  // signed lengths: e^{l0a} = BC, ...
    FixedPointChoice choice;
};

ShearCoords shear_coords(const FuchsianPants& p, FixedPointChoice choice = {});

// ---------------------------------------------------------------------------
// Closed-form gap functions. All stable in log-space for large lengths.
// ---------------------------------------------------------------------------

enum class GapKind { pant, boundary, cusp, boundary_cusp };

namespace detail {
template <class Real>
Real softplus(Real u) {  // log(1 + e^u)
    using std::exp;
    using std::log1p;
    return u > Real(0) ? u + log1p(exp(-u)) : log1p(exp(u));
}
} // namespace detail

// pant: log((e^{(lb+lc)/2} + e^{la/2}) / (e^{(lb+lc)/2} + e^{-la/2}))
// boundary: log((cosh(lc/2) + cosh((lb+la)/2)) / (cosh(lc/2) + cosh((lb-la)/2)))
//           (lb = the other peripheral boundary, lc = the interior curve)
// cusp: 1 / (1 + e^{(lb+lc)/2})
// boundary_cusp: sinh(lb/2) / (cosh(lc/2) + cosh(lb/2))
template <class Real>
Real gap_formula_t(GapKind kind, Real la, Real lb, Real lc) {
    using detail::softplus;
    using std::exp;
    switch (kind) {
        case GapKind::pant: {
            const Real s = (lb + lc) / 2;
            return softplus(la / 2 - s) - softplus(-la / 2 - s);
        }
        case GapKind::boundary: {
            // cosh a + cosh b = 2 cosh((a+b)/2) cosh((a-b)/2); log cosh u =
            // |u| + log1p(e^{-2|u|}) - log 2
            auto logcosh = [](Real u) {
                using std::abs;
                using std::log1p;
                const Real a = abs(u);
                return a + log1p(exp(-2 * a)) - Real(0.6931471805599453094172321214581766L);
            };
            const Real a1 = lc / 2, b1 = (lb + la) / 2, b2 = (lb - la) / 2;
            return logcosh((a1 + b1) / 2) + logcosh((a1 - b1) / 2) -
                   logcosh((a1 + b2) / 2) - logcosh((a1 - b2) / 2);
        }
        case GapKind::cusp:
            return exp(-softplus((lb + lc) / 2));
        case GapKind::boundary_cusp:
            return exp(-softplus((lc - lb) / 2)) - exp(-softplus((lc + lb) / 2));
    }
    return Real(0);
}

double gap_formula(GapKind kind, double la, double lb, double lc);

// The n = 2 cusp auxiliary function W_alpha(s, t) = b(alpha(s), alpha^+, t, s)
// for parabolic alpha.
double w_alpha_parabolic(const MobiusMap& alpha, const BoundaryPoint& s,
                         const BoundaryPoint& t);

} // namespace gapkit
