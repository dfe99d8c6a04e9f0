#pragma once
#include <Eigen/Dense>
#include <array>
#include "gapkit/errors.hpp"
#include "gapkit/hyperbolic.hpp"
#include "gapkit/linalg.hpp"
#include "gapkit/positivity.hpp"

namespace gapkit {

// ---------------------------------------------------------------------------
// FGCoords: (x, y, a, A, b, B, c, C), all positive.
// ---------------------------------------------------------------------------

struct FGCoords {
    double x = 1, y = 1, a = 1, A = 1, b = 1, B = 1, c = 1, C = 1;
    [[nodiscard]] std::array<double, 8> as_array() const {
        return {x, y, a, A, b, B, c, C};
    }
};

// ---------------------------------------------------------------------------
// PantsRep3: images of (alpha, beta, gamma) in PGL(3,R), relation up to scalar.
// ---------------------------------------------------------------------------

struct PantsRep3 {
    Eigen::Matrix3d alpha, beta, gamma;
};

// Product order realizing the pants relation for the reconstructed
// holonomies: alpha * gamma * beta = scalar * Id (calibrated once, frozen).
PantsRep3 fg_holonomy(const FGCoords& k);

// The internal triangle matrix X = T(x) with T(x)^3 = x * Id.
Eigen::Matrix3d fg_triangle_matrix(double x);

// ---------------------------------------------------------------------------
// Flags and coordinates.
// ---------------------------------------------------------------------------

struct WeylTriple {
    std::array<int, 3> u{0, 1, 2}, v{0, 1, 2}, w{0, 1, 2};  // zero-based perms
};

struct FlagConfig6 {
    Flag Xa, Zg, Xb, Za, Xg, Zb;
};

// Flags from boundary eigendata: X_alpha from Hol(alpha) eigenvectors in the
// order wt.u, X_beta from Hol(beta) via wt.v, X_gamma from Hol(gamma) via
// wt.w; Z_alpha = Hol(beta) X_alpha, Z_beta = Hol(gamma) X_beta,
// Z_gamma = Hol(alpha) X_gamma.
FlagConfig6 fg_flags(const PantsRep3& rep, const WeylTriple& wt);

// Triple-ratio and edge-function coordinates of a flag configuration.
FGCoords fg_coords(const FlagConfig6& cfg);

// Search all 6^3 Weyl triples for the one minimizing the round-trip error
// against the given coordinates; returns (best triple, relative error).
std::pair<WeylTriple, double> detect_weyl(const PantsRep3& rep, const FGCoords& k);

// log |lambda_max / lambda_min|
double period_n(const Mat& m);

// ---------------------------------------------------------------------------
// Pant gap function.
// ---------------------------------------------------------------------------

// The Weyl choice of the closed-form gap theorem: u = (2,1,3), v(1) = 1,
// w(1) = 3 in one-based terms (zero-based arrays below).
WeylTriple canonical_weyl_choice();

// Direct gap from eigenvector data: with magnitude-sorted eigenlines L^M_i,
// h+ = annihilator of span(L^A_{u0}, L^A_{u1}), h- = annihilator of
// span(L^A_{u0}, L^A_{u2}), b = L^B_{v0}, c = L^C_{w0}:
//   G = log( <h+|c> <h-|b> / ( <h-|c> <h+|b> ) ).
double pant_gap_direct(const PantsRep3& rep, const WeylTriple& wt = canonical_weyl_choice());

// The three closed-form gap expressions, named by algebraic shape: a large
// rational fraction, the two-term log((1+B)/(B(1+c))), and a smaller fraction.
enum class GapForm { big_fraction, log_ratio, small_fraction };

// Closed-form gap expressions (log of the printed rational fractions).
double gap_closed_form(GapForm form, const FGCoords& k);

// Calibrated coordinate regime in which each closed form equals the direct
// gap (eigenvalue-ordering inequalities of the boundary holonomies).
bool in_regime(GapForm form, const FGCoords& k);

// Both printed forms of the boundary-gap theorem:
//   log((1 + C1 e^{l}) / (1 + C1)) with C1 = c, and log((1+B)/(B(1+c))).
// They agree whenever e^{l} = 1/(B c) (the regime where the closed form holds).
std::pair<double, double> boundary_gap_forms(const FGCoords& k, double ell_alpha);

// sym^2 lift of a Fuchsian pants into PantsRep3.
PantsRep3 sym2_pants(const FuchsianPants& p);

} // namespace gapkit
