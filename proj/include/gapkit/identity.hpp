#pragma once
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>
#include "gapkit/enumeration.hpp"
#include "gapkit/errors.hpp"
#include "gapkit/hyperbolic.hpp"

namespace gapkit {

// ---------------------------------------------------------------------------
// Gap series: one term per pants class, keyed by curve length.
// ---------------------------------------------------------------------------

struct GapTerm {
    std::string label;  // pants-class label
    double length = 0;  // length of the cut curve (cutoff key)
    double value = 0;   // gap value
};

struct GapSeries {
    std::vector<GapTerm> terms;  // sorted by (length, label)
    double cutoff = 0;
    [[nodiscard]] double total() const;  // compensated sum in term order
};

struct ConvergenceReport {
    double target = 0;
    std::vector<double> cutoffs;
    std::vector<double> partial_sums;
    std::vector<double> residuals;  // target - partial_sum
    bool monotone = false;          // partial sums nondecreasing, residual >= -tol
    bool pass = false;              // residual/ratio thresholds met
};

// {l_max - 6, l_max - 4, l_max - 2, l_max}
std::vector<double> default_cutoffs(double l_max);

// Compensated partial sums of a sorted series at increasing cutoffs; pass iff
// final residual <= residual_limit and each +2 step shrinks it by >= 1/ratio.
ConvergenceReport make_convergence_report(double target, const GapSeries& series,
                                          std::vector<double> cutoffs,
                                          double residual_limit = 5e-2,
                                          double ratio_limit = 0.6,
                                          double tol = 1e-9);

// ---------------------------------------------------------------------------
// One-holed torus, Fuchsian (trace coordinates x = tr a, y = tr b, z = tr ab;
// boundary word alpha = a b a^{-1} b^{-1}).
// ---------------------------------------------------------------------------

// 2x2 realization of the trace triple; throws NonDiscreteInput if |z| <= 2.
SurfaceRep torus_rep_from_traces(double x, double y, double z_ab);

// Length/value pairs of the formula-based gap series, usable at any precision.
// Each simple curve w cuts the torus into a pants (alpha, w, w); it carries
// torus_class_multiplicity classes, all with the same formula value.
template <class Real>
std::vector<std::pair<Real, Real>> torus_formula_terms(Real x, Real y, Real z_ab,
                                                       Real l_max, GapKind kind) {
    using std::abs;
    using std::acosh;
    const Real t_alpha = x * x + y * y + z_ab * z_ab - x * y * z_ab - Real(2);
    Real la = 0;
    if (kind == GapKind::pant) {
        if (!(abs(t_alpha) > Real(2)))
            throw NotPurelyLoxodromic("boundary not hyperbolic");
        la = Real(2) * acosh(abs(t_alpha) / Real(2));
    } else if (kind == GapKind::cusp) {
        if (!(abs(abs(t_alpha) - Real(2)) <= Real(1e-9)))
            throw NotParabolicBoundary("boundary trace not +-2");
    } else {
        throw DimensionMismatch("torus series kind must be pant or cusp");
    }
    std::vector<std::pair<Real, Real>> out;
    enumerate_simple_traces<Real>(x, y, z_ab, l_max, [&](Real t) {
        const Real lw = Real(2) * acosh(abs(t) / Real(2));
        const Real g = gap_formula_t<Real>(kind, la, lw, lw);
        for (int i = 0; i < torus_class_multiplicity; ++i) out.emplace_back(lw, g);
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Labeled series (doubles only): kind = pant (boundary identity) or cusp.
GapSeries torus_gap_series(double x, double y, double z_ab, double l_max,
                           GapKind kind);

// Boundary identity: sum of pant gaps -> ell(boundary). `extended` sums in
// long double.
ConvergenceReport boundary_identity_torus(double x, double y, double z_ab,
                                          double l_max, bool extended = false);

// Cusp identity: sum of cusp gaps -> 1. Requires |tr[a,b]| = 2.
ConvergenceReport cusp_identity_torus(double x, double y, double z_ab,
                                      double l_max, bool extended = false);

// ---------------------------------------------------------------------------
// The pants surface itself: the identity is a finite sum,
//   ell(alpha) = 2 G(la, lb, lc) + G^r(la, lb, lc) + G^r(la, lc, lb).
// ---------------------------------------------------------------------------

ConvergenceReport boundary_identity_pants(double la, double lb, double lc,
                                          double tol = 1e-9);

// ---------------------------------------------------------------------------
// sym^2-lifted torus: direct eigenvector gaps on the 3x3 rep; target is the
// n = 3 period of the boundary, twice the hyperbolic length.
// ---------------------------------------------------------------------------

ConvergenceReport boundary_identity_torus_sym2(double x, double y, double z_ab,
                                               double l_max);

// ---------------------------------------------------------------------------
// Circle oracle: gaps realized as disjoint intervals on the boundary circle,
// coordinatized along the axis of alpha by y -> log |b(alpha+, y, alpha-, zeta)|.
// ---------------------------------------------------------------------------

struct OracleInterval {
    std::string label;
    double start = 0;        // mod period
    double length = 0;       // direct cross-ratio gap
    double formula_gap = 0;  // closed-form value
};

struct CircleOracleReport {
    double period = 0;
    std::vector<OracleInterval> intervals;  // sorted by start
    double max_formula_error = 0;           // max |length - formula_gap|
    bool disjoint = false;
    double min_separation = 0;      // smallest slack between consecutive intervals
    double translation_residual = 0;  // max | |B(alpha z) - B(z)| - period |
    double total_measure = 0;
};

// Throws OverlapDetected if two intervals overlap by more than 1e-9.
CircleOracleReport circle_oracle_torus(double x, double y, double z_ab,
                                       double l_max, int samples = 20,
                                       unsigned seed = 11);

} // namespace gapkit
