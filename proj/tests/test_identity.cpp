#include <cmath>
#include <random>

#include "doctest.h"
#include "gapkit/identity.hpp"

using namespace gapkit;

TEST_CASE("convergence report: cutoffs, monotonicity, thresholds") {
    CHECK(default_cutoffs(12.0) == std::vector<double>{6.0, 8.0, 10.0, 12.0});

    GapSeries s;
    s.cutoff = 12;
    // geometric tail towards 1
    double len = 2.0;
    for (double v : {0.5, 0.25, 0.125, 0.0625, 0.03125}) {
        s.terms.push_back({"t" + std::to_string(static_cast<int>(len)), len, v});
        len += 2.0;
    }
    const auto r = make_convergence_report(1.0, s, default_cutoffs(10.0));
    CHECK(r.pass);
    CHECK(r.monotone);
    CHECK(r.partial_sums.back() == doctest::Approx(0.96875));  // cutoff inclusive
    CHECK(r.residuals.back() == doctest::Approx(0.03125));

    // an overshooting series breaks monotone-below-target
    GapSeries bad = s;
    bad.terms.push_back({"x", 9.0, 0.4});
    const auto rb = make_convergence_report(1.0, bad, default_cutoffs(10.0));
    CHECK_FALSE(rb.monotone);
}

TEST_CASE("torus_rep_from_traces reproduces the trace triple") {
    const SurfaceRep rep = torus_rep_from_traces(3, 3, 4);
    CHECK(rep.eval("a").trace() == doctest::Approx(3.0));
    CHECK(rep.eval("b").trace() == doctest::Approx(3.0));
    CHECK(rep.eval("ab").trace() == doctest::Approx(4.0));
    CHECK(rep.eval("abAB").trace() ==
          doctest::Approx(fricke_commutator_trace(3, 3, 4)));
    CHECK_THROWS_AS(torus_rep_from_traces(3, 3, 2), NonDiscreteInput);
}

TEST_CASE("boundary identity on the (3,3,4) torus") {
    const auto r = boundary_identity_torus(3, 3, 4, 12);
    CHECK(r.target == doctest::Approx(2.0 * std::acosh(2.0)));
    CHECK(r.monotone);
    CHECK(r.pass);
    REQUIRE(r.residuals.size() == 4);
    for (double res : r.residuals) CHECK(res >= -1e-9);
    CHECK(r.residuals.back() <= 5e-2);
    for (std::size_t i = 0; i + 1 < r.residuals.size(); ++i)
        CHECK(r.residuals[i + 1] <= 0.6 * r.residuals[i]);
    // frozen magnitude of the final residual (regression guard)
    CHECK(r.residuals.back() == doctest::Approx(2.8e-4).epsilon(0.5));

    // extended-precision accumulation agrees with binary64
    const auto rx = boundary_identity_torus(3, 3, 4, 12, true);
    CHECK(rx.partial_sums.back() ==
          doctest::Approx(r.partial_sums.back()).epsilon(1e-12));
}

TEST_CASE("cusp identity on the modular torus") {
    const auto r = cusp_identity_torus(3, 3, 3, 12);
    CHECK(r.target == doctest::Approx(1.0));
    CHECK(r.monotone);
    CHECK(r.pass);
    for (double s : r.partial_sums) CHECK(s <= 1.0 + 1e-9);
    // first terms: two classes on the shortest curve, each 1/(1+e^l)
    const double l0 = 2.0 * std::acosh(1.5);
    const GapSeries s = torus_gap_series(3, 3, 3, 4.0, GapKind::cusp);
    REQUIRE(s.terms.size() >= 2);
    CHECK(s.terms[0].length == doctest::Approx(l0));
    CHECK(s.terms[0].value == doctest::Approx(1.0 / (1.0 + std::exp(l0))));
    CHECK(s.terms[1].value == doctest::Approx(s.terms[0].value));

    // a non-parabolic boundary is rejected
    CHECK_THROWS_AS(cusp_identity_torus(3, 3, 4, 8), NotParabolicBoundary);
    // and the boundary identity rejects a cusp
    CHECK_THROWS_AS(boundary_identity_torus(3, 3, 3, 8), NotPurelyLoxodromic);
}

TEST_CASE("pants identity is exact (finite sum)") {
    std::mt19937 rng(97);
    std::uniform_real_distribution<double> d(0.5, 4.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto r = boundary_identity_pants(d(rng), d(rng), d(rng));
        CHECK(r.pass);
        CHECK(std::abs(r.residuals.back()) <= 1e-9);
    }
}

TEST_CASE("sym2-lifted boundary identity doubles the hyperbolic identity") {
    const auto r2 = boundary_identity_torus(3, 3, 4, 10);
    const auto r3 = boundary_identity_torus_sym2(3, 3, 4, 10);
    CHECK(r3.target == doctest::Approx(2.0 * r2.target).epsilon(1e-9));
    CHECK(r3.monotone);
    CHECK(r3.pass);
    REQUIRE(r3.partial_sums.size() == r2.partial_sums.size());
    for (std::size_t i = 0; i < r3.partial_sums.size(); ++i)
        CHECK(r3.partial_sums[i] ==
              doctest::Approx(2.0 * r2.partial_sums[i]).epsilon(1e-9));
}

TEST_CASE("circle oracle: intervals realize the gaps") {
    const auto o = circle_oracle_torus(3, 3, 4, 8);
    CHECK(o.period == doctest::Approx(2.0 * std::acosh(2.0)));
    CHECK(o.intervals.size() == 28);  // frozen count at cutoff 8
    CHECK(o.disjoint);
    CHECK(o.max_formula_error <= 1e-9);
    CHECK(o.min_separation > 0);
    CHECK(o.translation_residual <= 1e-10);
    CHECK(o.total_measure <= o.period);
    // starts sorted and within [0, period)
    for (std::size_t i = 0; i < o.intervals.size(); ++i) {
        CHECK(o.intervals[i].start >= 0);
        CHECK(o.intervals[i].start < o.period);
        if (i > 0) CHECK(o.intervals[i].start >= o.intervals[i - 1].start);
        CHECK(o.intervals[i].length ==
              doctest::Approx(o.intervals[i].formula_gap).epsilon(1e-9));
    }
}
