#include <algorithm>
#include <random>

#include "doctest.h"
#include "gapkit/positivity.hpp"

using namespace gapkit;

namespace {

Flag rand_flag(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (;;) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = d(rng);
        if (std::abs(m.determinant()) > 0.05) return Flag(m);
    }
}

Flag rescaled(const Flag& f, std::mt19937& rng) {
    std::uniform_real_distribution<double> d(0.2, 3.0);
    Mat b = f.basis;
    for (int j = 0; j < f.dim(); ++j) b.col(j) *= (rng() % 2 ? 1.0 : -1.0) * d(rng);
    return Flag(b);
}

// re-express the same flag in another basis (upper-triangular change)
Flag reexpressed(const Flag& f, std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    const int n = f.dim();
    Mat u = Mat::Identity(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) u(i, j) = d(rng);
    for (int i = 0; i < n; ++i) u(i, i) = 0.3 + std::abs(d(rng));
    return Flag(f.basis * u);
}

} // namespace

TEST_CASE("triple_ratio_indices: count (n-1)(n-2)/2") {
    for (int n = 3; n <= 6; ++n)
        CHECK(static_cast<int>(triple_ratio_indices(n).size()) ==
              (n - 1) * (n - 2) / 2);
    const auto idx3 = triple_ratio_indices(3);
    REQUIRE(idx3.size() == 1);
    CHECK(idx3[0].m == 1);
    CHECK(idx3[0].l == 1);
    CHECK(idx3[0].p == 1);
}

TEST_CASE("triple_ratio: invariance and the n=3 pairing formula") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const Flag f = rand_flag(rng, 3), g = rand_flag(rng, 3), h = rand_flag(rng, 3);
        double t;
        try {
            t = triple_ratio(f, g, h, {1, 1, 1});
        } catch (const Error&) {
            continue;
        }
        // invariance under rescaling of basis vectors and basis re-expression
        CHECK(triple_ratio(rescaled(f, rng), rescaled(g, rng), rescaled(h, rng),
                           {1, 1, 1}) == doctest::Approx(t).epsilon(1e-10));
        CHECK(triple_ratio(reexpressed(f, rng), reexpressed(g, rng),
                           reexpressed(h, rng), {1, 1, 1}) ==
              doctest::Approx(t).epsilon(1e-9));
        // pairing formula: hyperplane covector of each flag = normal of F^2
        auto line_hyp = [](const Flag& fl) {
            const Eigen::Vector3d a = fl.basis.col(0), b = fl.basis.col(1);
            return std::make_pair(Eigen::Vector3d(fl.basis.col(0)),
                                  Eigen::Vector3d(a.cross(b)));
        };
        auto [l1, p1] = line_hyp(f);
        auto [l2, p2] = line_hyp(g);
        auto [l3, p3] = line_hyp(h);
        const double pairing = (l1.dot(p3) * l3.dot(p2) * l2.dot(p1)) /
                               (l1.dot(p2) * l2.dot(p3) * l3.dot(p1));
        CHECK(t == doctest::Approx(pairing).epsilon(1e-9));
    }
    CHECK_THROWS_AS(triple_ratio(rand_flag(rng, 3), rand_flag(rng, 3),
                                 rand_flag(rng, 3), {2, 2, 2}),
                    DimensionMismatch);
}

TEST_CASE("edge_fn: n=2 cross-ratio formula, duality, degeneration") {
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    auto flag2 = [&](double x) {
        Mat b(2, 2);
        b << x, 1, 1, 0;
        return Flag(b);
    };
    // delta_1(X,Y,Z,T) = -b(X,T,Z,Y) with b the classical cross ratio
    for (int trial = 0; trial < 50; ++trial) {
        const double x = d(rng), y = d(rng), z = d(rng), t = d(rng);
        if (std::abs(x - y) < 0.05 || std::abs(x - t) < 0.05 ||
            std::abs(z - y) < 0.05 || std::abs(z - t) < 0.05)
            continue;
        const double b_xtzy = ((x - t) * (z - y)) / ((x - y) * (z - t));
        CHECK(edge_fn(flag2(x), flag2(y), flag2(z), flag2(t), 1) ==
              doctest::Approx(-b_xtzy).epsilon(1e-10));
    }
    // duality: delta_1(U,V,W,R) * delta_{n-1}(W,V,U,R) = 1
    for (int n : {3, 4}) {
        for (int trial = 0; trial < 30; ++trial) {
            const Flag u = rand_flag(rng, n), v = rand_flag(rng, n);
            const Flag w = rand_flag(rng, n), r = rand_flag(rng, n);
            try {
                CHECK(edge_fn(u, v, w, r, 1) * edge_fn(w, v, u, r, n - 1) ==
                      doctest::Approx(1.0).epsilon(1e-9));
            } catch (const Error&) {
            }
        }
    }
    // as the fourth defining vector tends to the second's, delta_1 -> -1
    for (int n : {2, 3}) {
        const Flag x = rand_flag(rng, n), y = rand_flag(rng, n), z = rand_flag(rng, n);
        for (double eps : {1e-3, 1e-5, 1e-7}) {
            Mat tb = rand_flag(rng, n).basis;
            tb.col(0) = y.basis.col(0) + eps * tb.col(0);
            const double delta = edge_fn(x, y, z, Flag(tb), 1);
            CHECK(std::abs(delta + 1.0) <= 50 * eps + 1e-9);
        }
    }
}

TEST_CASE("veronese_flag: coordinate case and direct-sum property") {
    const Flag v0 = veronese_flag(0.0, 4);
    CHECK(flags_equal(v0, Flag((Mat(Mat::Identity(4, 4))))));

    std::mt19937 rng(53);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        const double t1 = d(rng), t2 = d(rng);
        if (std::abs(t1 - t2) < 0.1) continue;
        for (int n : {3, 4, 5}) {
            const Flag f1 = veronese_flag(t1, n), f2 = veronese_flag(t2, n);
            for (int k1 = 1; k1 < n; ++k1) {
                const int k2 = n - k1;
                Mat joint(n, n);
                joint << f1.subspace(k1), f2.subspace(k2);
                CHECK(std::abs(joint.determinant()) > 1e-10);
            }
        }
    }
}

TEST_CASE("moment-curve flags are positive; predicate invariances") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> d(-4.0, 4.0);
    for (int n : {3, 4, 5}) {
        for (int trial = 0; trial < 60; ++trial) {
            double t[4];
            for (double& ti : t) ti = d(rng);
            std::sort(t, t + 4);
            if (t[1] - t[0] < 0.05 || t[2] - t[1] < 0.05 || t[3] - t[2] < 0.05)
                continue;
            const Flag a = veronese_flag(t[0], n), b = veronese_flag(t[1], n);
            const Flag c = veronese_flag(t[2], n), e = veronese_flag(t[3], n);
            CHECK(is_positive_triple(a, b, c).positive);
            const PositivityResult q = is_positive_quadruple(a, b, c, e);
            CHECK(q.positive);
            // cyclic invariance of quadruple positivity
            CHECK(is_positive_quadruple(b, c, e, a).positive ==
                  q.positive);
            // permutation invariance of triple positivity
            CHECK(is_positive_triple(c, a, b).positive);
            CHECK(is_positive_triple(b, a, c).positive);
        }
        // positive map over a sampled cyclically ordered family
        std::vector<Flag> fam;
        for (double ti : {-2.0, -1.0, 0.0, 1.5, 3.0}) fam.push_back(veronese_flag(ti, n));
        CHECK(is_positive_map(fam).positive);
    }
    // ℝ⁴ moment-curve example: t = 0, 1, 2 gives all triple ratios positive
    const Flag f0 = veronese_flag(0, 4), f1 = veronese_flag(1, 4), f2 = veronese_flag(2, 4);
    for (auto idx : triple_ratio_indices(4))
        CHECK(triple_ratio(f0, f1, f2, idx) > 0.0);
    // a scrambled (non-cyclic) order is detected with a witness
    std::mt19937 rng2(61);
    const PositivityResult bad = is_positive_quadruple(
        veronese_flag(0, 3), veronese_flag(2, 3), veronese_flag(1, 3),
        veronese_flag(3, 3));
    if (!bad.positive) CHECK(!bad.witness.empty());
}

TEST_CASE("secant_flag spans curve points") {
    const Flag s = secant_flag({0.0, 1.0, 2.0}, 3);
    Vec p0(3), p1(3);
    p0 << 1, 0, 0;
    p1 << 1, 1, 1;
    CHECK(subspace_equal(s.subspace(1), Mat(p0)));
    Mat two(3, 2);
    two << p0, p1;
    CHECK(subspace_equal(s.subspace(2), two));
    CHECK_THROWS_AS(secant_flag({0.0, 1.0}, 3), DimensionMismatch);
}
