#pragma once
#include <Eigen/Dense>
#include <vector>
#include "gapkit/errors.hpp"

namespace gapkit {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// ---------------------------------------------------------------------------
// ProjectiveMatrix: a nonsingular matrix up to scale. Canonical form has
// |det| = 1 and the first nonzero entry (row-major scan) positive.
// ---------------------------------------------------------------------------

Mat projective_normalize(const Mat& m);
bool projectively_equal(const Mat& a, const Mat& b, double tol = 1e-9);

struct ProjectiveMatrix {
    Mat entries;

    explicit ProjectiveMatrix(Mat m);
    [[nodiscard]] int dim() const { return static_cast<int>(entries.rows()); }

    friend bool operator==(const ProjectiveMatrix& a, const ProjectiveMatrix& b) {
        return projectively_equal(a.entries, b.entries);
    }
};

// Determinant of the matrix whose columns are the given vectors.
double volume_form(const std::vector<Vec>& vectors);

// ---------------------------------------------------------------------------
// EigenData: real simple spectrum sorted by decreasing |lambda|.
// ---------------------------------------------------------------------------

struct EigenData {
    Vec values;       // sorted by decreasing absolute value
    Mat vectors;      // matching unit eigenvectors as columns
    double separation = 0.0;  // min relative gap between consecutive |values|
};

// Closed-form (quadratic / trigonometric-cubic) eigendecomposition for
// n = 2, 3, polished by inverse iteration. Throws NotPurelyLoxodromic when
// the spectrum is complex or the relative separation falls below threshold.
EigenData eigen_real_simple(const Mat& m, double separation_threshold = 1e-8);

// ---------------------------------------------------------------------------
// Flag: complete flag stored as an ordered basis; F^k = span of first k cols.
// ---------------------------------------------------------------------------

struct Flag {
    Mat basis;  // n x n, columns are the basis vectors

    Flag() = default;
    explicit Flag(Mat b);
    [[nodiscard]] int dim() const { return static_cast<int>(basis.rows()); }
    [[nodiscard]] Vec line() const { return basis.col(0); }
    [[nodiscard]] Mat subspace(int k) const { return basis.leftCols(k); }
};

Flag apply(const Mat& m, const Flag& f);

// Subspace equality via rank of concatenated bases.
bool subspace_equal(const Mat& a, const Mat& b, double tol = 1e-9);
bool flags_equal(const Flag& f, const Flag& g, double tol = 1e-9);

// Flag (L_{u(1)}, L_{u(1)} + L_{u(2)}, ...) from eigendata; u is a
// permutation of {0..n-1} in zero-based indexing.
Flag flag_from_eigenvectors(const EigenData& e, const std::vector<int>& u);

// Dual flag: G^k = annihilator of F^{n-k}, in the dual standard basis.
Flag dual_flag(const Flag& f);

// Compatible flag: F^k = F1^k for k <= p, F1^p + F2^{k-p} for k > p.
Flag compatible_flag(const Flag& f1, const Flag& f2, int p);

// Irreducible representation of GL(2) on degree-(n-1) homogeneous
// polynomials in two variables; basis (e1^{n-1}, e1^{n-2} e2, ..., e2^{n-1}).
Mat sym_power(const Eigen::Matrix2d& m, int n);

} // namespace gapkit
