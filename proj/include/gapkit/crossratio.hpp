#pragma once
#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include "gapkit/errors.hpp"
#include "gapkit/linalg.hpp"

namespace gapkit {

// ---------------------------------------------------------------------------
// BoundaryPoint: point of RP^1 as a homogeneous pair; cyclic order via angle.
// ---------------------------------------------------------------------------

struct BoundaryPoint {
    Eigen::Vector2d v;

    BoundaryPoint() : v(1.0, 0.0) {}
    explicit BoundaryPoint(const Eigen::Vector2d& p);
    static BoundaryPoint from_real(double x) { return BoundaryPoint({x, 1.0}); }
    static BoundaryPoint infinity() { return BoundaryPoint({1.0, 0.0}); }
    static BoundaryPoint from_angle(double theta);
    [[nodiscard]] double angle() const;  // in [0, pi)
};

bool same_point(const BoundaryPoint& a, const BoundaryPoint& b, double tol = 1e-9);

// Classical cross ratio b(x,y,z,t) = (x-y)(z-t)/((x-t)(z-y)), projectively.
double classical_b(const BoundaryPoint& x, const BoundaryPoint& y,
                   const BoundaryPoint& z, const BoundaryPoint& t);

// ---------------------------------------------------------------------------
// FlagPairPoint: a line with a transverse hyperplane (stored as a covector).
// ---------------------------------------------------------------------------

struct FlagPairPoint {
    Vec line;        // xi(u)
    Vec hyperplane;  // xi*(u), as a covector: kernel is the hyperplane
};

double weak_cross_ratio(const FlagPairPoint& x, const FlagPairPoint& y,
                        const FlagPairPoint& z, const FlagPairPoint& t);

// ---------------------------------------------------------------------------
// Period and checkers.
// ---------------------------------------------------------------------------

using Evaluator =
    std::function<double(const BoundaryPoint&, const BoundaryPoint&,
                         const BoundaryPoint&, const BoundaryPoint&)>;
using PointMap = std::function<BoundaryPoint(const BoundaryPoint&)>;

// log |B(gamma^-, gamma(y), gamma^+, y)|
double period(const Evaluator& B, const PointMap& gamma,
              const BoundaryPoint& gamma_plus, const BoundaryPoint& gamma_minus,
              const BoundaryPoint& y);

struct AxiomsReport {
    // max residual per axiom: zero normalization, one normalization,
    // two multiplicative cocycles, three symmetries
    double zero_norm = 0, one_norm = 0, cocycle_first = 0, cocycle_second = 0,
           pair_swap = 0, inverse_xz = 0, inverse_yt = 0;
    [[nodiscard]] double max_residual() const;
    [[nodiscard]] bool pass(double tol = 1e-9) const { return max_residual() <= tol; }
};

AxiomsReport axioms_check(const Evaluator& B, int count = 1000,
                          std::uint64_t seed = 12345);

struct OrderedReport {
    double above_one_margin = 0;   // min of B(x,z,t,y) - 1 over samples (want > 0)
    double negative_margin = 0;    // min of -B(x,y,z,t) over samples (want > 0)
    double separation_margin = 0;  // min signed-correct margin of the sign criterion
    bool ordered = false;
    bool inverse_ordered = false;  // 1/B passes instead
};

OrderedReport ordered_check(const Evaluator& B, int count = 1000,
                            std::uint64_t seed = 12345);

struct HyperbolicIdentityReport {
    double complement = 0, anharmonic = 0, transpose = 0;  // max residuals
    [[nodiscard]] double max_residual() const;
};

HyperbolicIdentityReport hyperbolic_identity_check(const Evaluator& B,
                                                   int count = 1000,
                                                   std::uint64_t seed = 12345);

} // namespace gapkit
