#pragma once
#include <array>
#include <string>
#include <vector>
#include "gapkit/enumeration.hpp"
#include "gapkit/errors.hpp"
#include "gapkit/linalg.hpp"

namespace gapkit {

// ---------------------------------------------------------------------------
// Good homomorphisms of the pants group F(b, c) (beta, gamma generators,
// alpha = b^{-1} c^{-1} as a word reading left to right: "BC").
// Boundary words by index: 0 -> "BC" (alpha), 1 -> "b", 2 -> "c".
// ---------------------------------------------------------------------------

struct GoodHom {
    SurfaceRep rep;      // generators 'b', 'c'
    int base = 0;        // boundary at which R(boundary) is diagonal decreasing
    [[nodiscard]] Word boundary_word(int index) const;
    [[nodiscard]] Mat eval(const Word& w) const { return rep.eval(w); }
    [[nodiscard]] int dim() const { return rep.dim(); }
};

// Conjugate the representation so the designated boundary image is diagonal
// with strictly decreasing entries.
GoodHom make_good(const SurfaceRep& rep, int base_boundary);

// R_bar(c, Delta) = K Delta K^{-1} where R(c * boundary_w * c^{-1}) =
// K Delta_w K^{-1}, Delta_w decreasing diagonal; K-scaling independent.
Mat r_bar(const GoodHom& r, const Word& arc_times_boundary, const Vec& delta_diag);

// diag(1, -1, 1, -1, ...)
Mat jn_matrix(int n);

// ---------------------------------------------------------------------------
// The double: Gamma = pi1(P) * pi1(P) * F_2 / H, with the m = 2 pants
// presentation hardcoded (canonical arcs are trivial, so the arc loop for
// boundary p is x_p with image R_bar(boundary_p, J) J).
//
// Word letters: 'b','c' first copy; 'd','e' second copy (images of b, c);
// 'x','y' the arc generators x_1 (boundary b) and x_2 (boundary c).
// ---------------------------------------------------------------------------

struct DoubleRep {
    Mat B0, C0, B1, C1, X1, X2;
    Mat J;
    [[nodiscard]] Mat eval(const Word& w) const;
    [[nodiscard]] int dim() const { return static_cast<int>(B0.rows()); }
};

DoubleRep j_extension(const GoodHom& r, const Mat& j);

// Max scaled off-scalar residual of the relators generating H:
//   R(b)^{-1} x1 J R(b) J x1^{-1} and R(c)^{-1} x2 J R(c) J x2^{-1},
// plus the base-boundary compatibility (automatic for diagonal boundary).
double h_generator_residual(const GoodHom& r, const DoubleRep& d);

// Residual of the glued-surface (genus 2) relation
//   C0 B0 x1^{-1} B0^{-1} x1 x2^{-1} C0^{-1} x2 = scalar * Id.
double double_relation_residual(const DoubleRep& d);

// Scaled distance of m from scalar * Id.
double scalar_identity_residual(const Mat& m);

// Trace list over a fixed word sample (conjugacy-class data for comparing
// representations without solving for a conjugator).
std::vector<double> trace_spectrum(const DoubleRep& d,
                                   const std::vector<Word>& words);
std::vector<Word> default_word_sample(int count = 20, unsigned seed = 7);

} // namespace gapkit
