#pragma once
#include <string>
#include <vector>
#include "gapkit/errors.hpp"
#include "gapkit/linalg.hpp"

namespace gapkit {

struct TripleRatioIndex {
    int m = 1, l = 1, p = 1;  // positive, m + l + p = n
};

// All (m, l, p) with m, l, p >= 1 and m + l + p = n; size (n-1)(n-2)/2.
std::vector<TripleRatioIndex> triple_ratio_indices(int n);

// The (m, l, p)-triple ratio of (F, G, H); basis-choice invariant.
double triple_ratio(const Flag& f, const Flag& g, const Flag& h,
                    TripleRatioIndex idx);

// Edge function delta_i(X, Y, Z, T), i in 1..n-1.
double edge_fn(const Flag& x, const Flag& y, const Flag& z, const Flag& t, int i);

struct PositivityResult {
    bool positive = false;
    std::string witness;  // first violating index on failure
};

PositivityResult is_positive_triple(const Flag& f, const Flag& g, const Flag& h);
PositivityResult is_positive_quadruple(const Flag& x, const Flag& y,
                                       const Flag& z, const Flag& t);
// Cyclic family: every positively ordered quadruple must be positive.
PositivityResult is_positive_map(const std::vector<Flag>& cyclic);

// Osculating flag of the rational normal curve t -> (1, t, ..., t^{n-1}).
Flag veronese_flag(double t, int n);

// Flag spanned by curve points: F^k = span(xi(pts[0]), ..., xi(pts[k-1])).
Flag secant_flag(const std::vector<double>& pts, int n);

} // namespace gapkit
