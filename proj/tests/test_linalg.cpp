#include <random>

#include "doctest.h"
#include "gapkit/linalg.hpp"

using namespace gapkit;

namespace {

Vec v3(double a, double b, double c) {
    Vec v(3);
    v << a, b, c;
    return v;
}

Mat random_mat(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

Mat random_invertible(std::mt19937& rng, int n) {
    for (;;) {
        Mat m = random_mat(rng, n);
        if (std::abs(m.determinant()) > 0.1) return m;
    }
}

} // namespace

TEST_CASE("volume_form: standard basis, alternating, cofactor oracle") {
    CHECK(volume_form({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}) == doctest::Approx(1.0));
    // swapping two arguments negates the value
    std::mt19937 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        Vec a = v3(0, 0, 0), b = a, c = a;
        std::uniform_real_distribution<double> d(-1.0, 1.0);
        for (int i = 0; i < 3; ++i) {
            a(i) = d(rng);
            b(i) = d(rng);
            c(i) = d(rng);
        }
        const double v = volume_form({a, b, c});
        CHECK(volume_form({b, a, c}) == doctest::Approx(-v));
        // cofactor expansion along the first column
        const double cof = a(0) * (b(1) * c(2) - b(2) * c(1)) -
                           a(1) * (b(0) * c(2) - b(2) * c(0)) +
                           a(2) * (b(0) * c(1) - b(1) * c(0));
        CHECK(v == doctest::Approx(cof));
        // multilinearity in the first slot
        CHECK(volume_form({Vec(2.5 * a), b, c}) == doctest::Approx(2.5 * v));
    }
    CHECK_THROWS_AS(volume_form({v3(1, 0, 0), v3(0, 1, 0)}), DimensionMismatch);
}

TEST_CASE("projective normalization fixes scale and sign") {
    std::mt19937 rng(2);
    const Mat m = random_invertible(rng, 3);
    const Mat n = projective_normalize(m);
    CHECK(std::abs(n.determinant()) == doctest::Approx(1.0));
    CHECK(projectively_equal(m, Mat(-3.0 * m)));
    CHECK(projectively_equal(m, Mat(0.01 * m)));
    CHECK_FALSE(projectively_equal(m, Mat(m.transpose())));
    CHECK_THROWS_AS(projective_normalize(Mat(Mat::Zero(3, 3))), SingularInput);
}

TEST_CASE("eigen_real_simple: diagonal, rejection, residual bound") {
    Mat d = Mat::Zero(3, 3);
    d.diagonal() << 5, 2, 1;
    const EigenData e = eigen_real_simple(d);
    CHECK(e.values(0) == doctest::Approx(5));
    CHECK(e.values(1) == doctest::Approx(2));
    CHECK(e.values(2) == doctest::Approx(1));
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(e.vectors.col(i)(i)) == doctest::Approx(1.0));

    // rotation: complex spectrum
    Mat rot(2, 2);
    rot << 0, -1, 1, 0;
    CHECK_THROWS_AS(eigen_real_simple(rot), NotPurelyLoxodromic);
    // repeated eigenvalues: below separation threshold
    CHECK_THROWS_AS(eigen_real_simple(Mat(Mat::Identity(3, 3))), NotPurelyLoxodromic);

    // random conjugates of a fixed spectrum: residual <= 1e-10 * ||M||
    std::mt19937 rng(3);
    Mat spec = Mat::Zero(3, 3);
    spec.diagonal() << 4.0, 1.5, -0.5;
    for (int trial = 0; trial < 50; ++trial) {
        const Mat k = random_invertible(rng, 3);
        const Mat m = k * spec * k.inverse();
        const EigenData ed = eigen_real_simple(m);
        CHECK(ed.values(0) == doctest::Approx(4.0));
        CHECK(ed.values(2) == doctest::Approx(-0.5));
        for (int i = 0; i < 3; ++i) {
            const double res = (m * ed.vectors.col(i) - ed.values(i) * ed.vectors.col(i)).norm();
            CHECK(res <= 1e-10 * m.cwiseAbs().maxCoeff());
        }
    }

    // n = 2
    Mat h(2, 2);
    h << 3, 1, 1, 1;
    const EigenData e2 = eigen_real_simple(h);
    CHECK(e2.values(0) * e2.values(1) == doctest::Approx(h.determinant()));
    CHECK(e2.values(0) + e2.values(1) == doctest::Approx(h.trace()));
}

TEST_CASE("flag_from_eigenvectors: identity gives an invariant flag") {
    Mat d = Mat::Zero(3, 3);
    d.diagonal() << 3, 2, 1;
    const EigenData e = eigen_real_simple(d);
    // u = (2,1,3) one-based = {1,0,2} zero-based -> basis (e2, e1, e3)
    const Flag f = flag_from_eigenvectors(e, {1, 0, 2});
    CHECK(std::abs(f.basis.col(0)(1)) == doctest::Approx(1.0));
    CHECK(std::abs(f.basis.col(1)(0)) == doctest::Approx(1.0));
    CHECK(std::abs(f.basis.col(2)(2)) == doctest::Approx(1.0));
    CHECK_THROWS_AS(flag_from_eigenvectors(e, {0, 0, 2}), DimensionMismatch);

    std::mt19937 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const Mat k = random_invertible(rng, 3);
        const Mat m = k * d * k.inverse();
        const Flag att = flag_from_eigenvectors(eigen_real_simple(m), {0, 1, 2});
        for (int kk = 1; kk <= 3; ++kk)
            CHECK(subspace_equal(Mat(m * att.subspace(kk)), att.subspace(kk)));
    }
}

TEST_CASE("dual_flag: displayed example, standard flag, involution") {
    // X = F((0,0,1), (0,1,0)) -> X* = F((1,0,0), (0,1,0))
    Mat b(3, 3);
    b.col(0) = v3(0, 0, 1);
    b.col(1) = v3(0, 1, 0);
    b.col(2) = v3(1, 0, 0);
    Mat expect(3, 3);
    expect.col(0) = v3(1, 0, 0);
    expect.col(1) = v3(0, 1, 0);
    expect.col(2) = v3(0, 0, 1);
    CHECK(flags_equal(dual_flag(Flag(b)), Flag(expect)));

    // standard flag -> reversed coordinate flag in the dual basis
    const Flag std3((Mat(Mat::Identity(3, 3))));
    Mat rev(3, 3);
    rev.col(0) = v3(0, 0, 1);
    rev.col(1) = v3(0, 1, 0);
    rev.col(2) = v3(1, 0, 0);
    CHECK(flags_equal(dual_flag(std3), Flag(rev)));

    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Flag f(random_invertible(rng, 3));
        CHECK(flags_equal(dual_flag(dual_flag(f)), f));
    }
}

TEST_CASE("compatible_flag: endpoint cases and coordinate example") {
    std::mt19937 rng(6);
    const Flag f1(random_invertible(rng, 3));
    const Flag f2(random_invertible(rng, 3));
    CHECK(flags_equal(compatible_flag(f1, f2, 2), f1));
    CHECK(flags_equal(compatible_flag(f1, f2, 0), f2));

    // coordinate flags, p = 1 -> (e1, e1 + e3)
    const Flag std3((Mat(Mat::Identity(3, 3))));
    Mat rev(3, 3);
    rev.col(0) = v3(0, 0, 1);
    rev.col(1) = v3(0, 1, 0);
    rev.col(2) = v3(1, 0, 0);
    const Flag mixed = compatible_flag(std3, Flag(rev), 1);
    Mat expect(3, 3);
    expect.col(0) = v3(1, 0, 0);
    expect.col(1) = v3(0, 0, 1);
    expect.col(2) = v3(0, 1, 0);
    CHECK(flags_equal(mixed, Flag(expect)));

    CHECK_THROWS_AS(compatible_flag(std3, std3, 1), NotTransverse);
}

TEST_CASE("sym_power: examples and homomorphism property") {
    Eigen::Matrix2d j2;
    j2 << 1, 0, 0, -1;
    Mat j3 = Mat::Zero(3, 3);
    j3.diagonal() << 1, -1, 1;
    CHECK(projectively_equal(sym_power(j2, 3), j3));

    const double lam = 1.7;
    Eigen::Matrix2d dl;
    dl << lam, 0, 0, 1.0 / lam;
    Mat expect = Mat::Zero(3, 3);
    expect.diagonal() << lam * lam, 1.0, 1.0 / (lam * lam);
    CHECK(projectively_equal(sym_power(dl, 3), expect));

    std::mt19937 rng(7);
    for (int n : {3, 4, 5}) {
        for (int trial = 0; trial < (n == 3 ? 1000 : 50); ++trial) {
            const Eigen::Matrix2d a = random_invertible(rng, 2);
            const Eigen::Matrix2d b = random_invertible(rng, 2);
            CHECK(projectively_equal(sym_power(Eigen::Matrix2d(a * b), n),
                                     Mat(sym_power(a, n) * sym_power(b, n))));
        }
    }
    CHECK_THROWS_AS(sym_power(Eigen::Matrix2d(Eigen::Matrix2d::Zero()), 3),
                    SingularInput);
}
