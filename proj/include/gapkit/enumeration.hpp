#pragma once
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>
#include "gapkit/errors.hpp"
#include "gapkit/linalg.hpp"

namespace gapkit {

// ---------------------------------------------------------------------------
// Words over named generators; uppercase letters denote inverses.
// ---------------------------------------------------------------------------

using Word = std::string;

Word reduce_word(const Word& w);
Word inverse_word(const Word& w);
Word cyclic_reduce(const Word& w);

struct SurfaceRep {
    std::map<char, Mat> generators;  // lowercase keys
    [[nodiscard]] Mat eval(const Word& w) const;
    [[nodiscard]] int dim() const;
};

Mat word_to_matrix(const SurfaceRep& rep, const Word& w);

// ---------------------------------------------------------------------------
// Simple closed curves on the one-holed torus, keyed by Farey slope.
// ---------------------------------------------------------------------------

struct SlopeNode {
    long p = 0, q = 0;  // slope p/q in lowest terms, q >= 0 (p = 1, q = 0 is 'a')
    Word word;
    double trace = 0;
    [[nodiscard]] double length() const {
        return 2.0 * std::acosh(std::abs(trace) / 2.0);
    }
};

// All primitive slopes with geodesic length <= l_max, from the Fricke trace
// recursion on the two Stern-Brocot subtrees rooted at tr(ab) and tr(ab^{-1}).
std::vector<SlopeNode> simple_curves_torus(double tr_a, double tr_b, double tr_ab,
                                           double l_max);

// Trace-only streaming version usable with any floating point type.
template <class Real>
void enumerate_simple_traces(Real x, Real y, Real z_ab, Real l_max,
                             const std::function<void(Real)>& emit) {
    auto len = [](Real t) {
        using std::abs;
        using std::acosh;
        return Real(2) * acosh(abs(t) / Real(2));
    };
    auto check = [](Real t) {
        using std::abs;
        if (abs(t) <= Real(2)) throw NonDiscreteInput("simple-curve trace <= 2");
    };
    check(x);
    check(y);
    if (len(x) <= l_max) emit(x);
    if (len(y) <= l_max) emit(y);
    // children of triangle (u, v, w = tr(uv)) are (u, w, uw - v), (w, v, vw - u)
    std::function<void(Real, Real, Real)> rec = [&](Real u, Real v, Real w) {
        check(w);
        if (len(w) > l_max) return;
        emit(w);
        rec(u, w, u * w - v);
        rec(w, v, v * w - u);
    };
    rec(x, y, z_ab);
    rec(x, y, x * y - z_ab);
}

double fricke_commutator_trace(double x, double y, double z);

// ---------------------------------------------------------------------------
// Marked pants classes (alpha, beta, gamma) with alpha * gamma * beta = 1.
// ---------------------------------------------------------------------------

struct PantsClass {
    Word alpha, beta, gamma;
    std::string label;
};

// Normal form under conjugating (beta, gamma) by powers of alpha.
PantsClass normalize_class(const PantsClass& c);

// The embedded pants classes with first boundary = the torus boundary,
// obtained by cutting along the node curve. There are exactly
// torus_class_multiplicity of them per unoriented simple curve (a constant
// calibrated against the circle oracle). If a representation is supplied,
// the curve orientation is fixed so that the direct gap is positive.
inline constexpr int torus_class_multiplicity = 2;

std::vector<PantsClass> pants_classes_torus(const SlopeNode& node,
                                            const SurfaceRep* rep = nullptr);

// Pants classes of the pair of pants itself (generators b, c; alpha = B C).
struct SelfPantsClasses {
    std::vector<PantsClass> pants;     // P_alpha (two isometric classes)
    std::vector<char> boundary;        // S_alpha second-boundary letters
};

SelfPantsClasses pants_classes_selfpants();

} // namespace gapkit
