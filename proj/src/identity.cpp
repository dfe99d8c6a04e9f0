#include "gapkit/identity.hpp"

#include <random>
#include "gapkit/crossratio.hpp"
#include "gapkit/fock_goncharov.hpp"

namespace gapkit {

namespace {

double kahan_total(const std::vector<double>& xs) {
    double s = 0, c = 0;
    for (double x : xs) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

} // namespace

double GapSeries::total() const {
    std::vector<double> vals;
    vals.reserve(terms.size());
    for (const auto& t : terms) vals.push_back(t.value);
    return kahan_total(vals);
}

std::vector<double> default_cutoffs(double l_max) {
    return {l_max - 6, l_max - 4, l_max - 2, l_max};
}

ConvergenceReport make_convergence_report(double target, const GapSeries& series,
                                          std::vector<double> cutoffs,
                                          double residual_limit, double ratio_limit,
                                          double tol) {
    ConvergenceReport r;
    r.target = target;
    r.cutoffs = std::move(cutoffs);
    double s = 0, c = 0;
    std::size_t i = 0;
    for (double cut : r.cutoffs) {
        while (i < series.terms.size() && series.terms[i].length <= cut) {
            const double y = series.terms[i].value - c;
            const double t = s + y;
            c = (t - s) - y;
            s = t;
            ++i;
        }
        r.partial_sums.push_back(s);
        r.residuals.push_back(target - s);
    }
    r.monotone = true;
    for (std::size_t k = 0; k < r.partial_sums.size(); ++k) {
        if (k > 0 && r.partial_sums[k] < r.partial_sums[k - 1] - tol) r.monotone = false;
        if (r.residuals[k] < -tol) r.monotone = false;
    }
    r.pass = r.monotone && !r.residuals.empty() &&
             r.residuals.back() <= residual_limit;
    for (std::size_t k = 0; k + 1 < r.residuals.size(); ++k) {
        if (!(r.residuals[k + 1] <= ratio_limit * r.residuals[k] + tol)) r.pass = false;
    }
    return r;
}

SurfaceRep torus_rep_from_traces(double x, double y, double z_ab) {
    if (std::abs(z_ab) <= 2.0) throw NonDiscreteInput("tr(ab) must exceed 2");
    const double zeta = (z_ab + std::sqrt(z_ab * z_ab - 4.0)) / 2.0;
    Mat a(2, 2), b(2, 2);
    a << x, 1, -1, 0;
    b << 0, -zeta, 1 / zeta, y;
    SurfaceRep rep;
    rep.generators['a'] = a;
    rep.generators['b'] = b;
    return rep;
}

GapSeries torus_gap_series(double x, double y, double z_ab, double l_max,
                           GapKind kind) {
    if (kind != GapKind::pant && kind != GapKind::cusp)
        throw DimensionMismatch("torus series kind must be pant or cusp");
    const double t_alpha = fricke_commutator_trace(x, y, z_ab);
    double la = 0;
    if (kind == GapKind::pant) {
        if (!(std::abs(t_alpha) > 2.0))
            throw NotPurelyLoxodromic("boundary not hyperbolic");
        la = 2.0 * std::acosh(std::abs(t_alpha) / 2.0);
    } else if (std::abs(std::abs(t_alpha) - 2.0) > 1e-9) {
        throw NotParabolicBoundary("boundary trace not +-2");
    }
    GapSeries s;
    s.cutoff = l_max;
    for (const SlopeNode& node : simple_curves_torus(x, y, z_ab, l_max)) {
        const double lw = node.length();
        const double g = gap_formula(kind, la, lw, lw);
        for (const PantsClass& c : pants_classes_torus(node)) {
            s.terms.push_back({c.label, lw, g});
        }
    }
    std::sort(s.terms.begin(), s.terms.end(), [](const GapTerm& a, const GapTerm& b) {
        return std::tie(a.length, a.label) < std::tie(b.length, b.label);
    });
    return s;
}

namespace {

ConvergenceReport torus_identity_report(double x, double y, double z_ab,
                                        double l_max, bool extended, GapKind kind,
                                        double target) {
    if (!extended) {
        return make_convergence_report(target, torus_gap_series(x, y, z_ab, l_max, kind),
                                       default_cutoffs(l_max));
    }
    using LD = long double;
    const auto terms =
        torus_formula_terms<LD>(LD(x), LD(y), LD(z_ab), LD(l_max), kind);
    ConvergenceReport r;
    r.target = target;
    r.cutoffs = default_cutoffs(l_max);
    LD s = 0, c = 0;
    std::size_t i = 0;
    for (double cut : r.cutoffs) {
        while (i < terms.size() && static_cast<double>(terms[i].first) <= cut) {
            const LD yv = terms[i].second - c;
            const LD t = s + yv;
            c = (t - s) - yv;
            s = t;
            ++i;
        }
        r.partial_sums.push_back(static_cast<double>(s));
        r.residuals.push_back(target - static_cast<double>(s));
    }
    r.monotone = true;
    for (std::size_t k = 0; k < r.partial_sums.size(); ++k) {
        if (k > 0 && r.partial_sums[k] < r.partial_sums[k - 1] - 1e-12)
            r.monotone = false;
        if (r.residuals[k] < -1e-9) r.monotone = false;
    }
    r.pass = r.monotone && r.residuals.back() <= 5e-2;
    for (std::size_t k = 0; k + 1 < r.residuals.size(); ++k) {
        if (!(r.residuals[k + 1] <= 0.6 * r.residuals[k] + 1e-9)) r.pass = false;
    }
    return r;
}

} // namespace

ConvergenceReport boundary_identity_torus(double x, double y, double z_ab,
                                          double l_max, bool extended) {
    const double t_alpha = fricke_commutator_trace(x, y, z_ab);
    if (!(std::abs(t_alpha) > 2.0))
        throw NotPurelyLoxodromic("boundary not hyperbolic");
    const double target = 2.0 * std::acosh(std::abs(t_alpha) / 2.0);
    return torus_identity_report(x, y, z_ab, l_max, extended, GapKind::pant, target);
}

ConvergenceReport cusp_identity_torus(double x, double y, double z_ab,
                                      double l_max, bool extended) {
    const double t_alpha = fricke_commutator_trace(x, y, z_ab);
    if (std::abs(std::abs(t_alpha) - 2.0) > 1e-9)
        throw NotParabolicBoundary("boundary trace not +-2");
    return torus_identity_report(x, y, z_ab, l_max, extended, GapKind::cusp, 1.0);
}

ConvergenceReport boundary_identity_pants(double la, double lb, double lc,
                                          double tol) {
    if (!(la > 0) || !(lb > 0) || !(lc > 0))
        throw InvalidLengths("pants identity needs three positive lengths");
    GapSeries s;
    s.cutoff = std::max({la, lb, lc});
    const double g = gap_formula(GapKind::pant, la, lb, lc);
    s.terms.push_back({"self/1", lb + lc, g});
    s.terms.push_back({"self/2", lb + lc, g});
    s.terms.push_back({"bdry/b", lb, gap_formula(GapKind::boundary, la, lb, lc)});
    s.terms.push_back({"bdry/c", lc, gap_formula(GapKind::boundary, la, lc, lb)});
    ConvergenceReport r;
    r.target = la;
    r.cutoffs = {s.cutoff + lb + lc};
    r.partial_sums = {s.total()};
    r.residuals = {la - r.partial_sums[0]};
    r.monotone = true;
    r.pass = std::abs(r.residuals[0]) <= tol;
    return r;
}

ConvergenceReport boundary_identity_torus_sym2(double x, double y, double z_ab,
                                               double l_max) {
    const SurfaceRep rep2 = torus_rep_from_traces(x, y, z_ab);
    SurfaceRep rep3;
    for (const auto& [name, m] : rep2.generators)
        rep3.generators[name] = sym_power(Eigen::Matrix2d(m), 3);

    const Mat alpha3 = rep3.eval("abAB");
    const double target = period_n(alpha3);

    GapSeries s;
    s.cutoff = l_max;
    for (const SlopeNode& node : simple_curves_torus(x, y, z_ab, l_max)) {
        for (const PantsClass& c : pants_classes_torus(node, &rep2)) {
            PantsRep3 p;
            p.alpha = rep3.eval(c.alpha);
            p.beta = rep3.eval(c.beta);
            p.gamma = rep3.eval(c.gamma);
            s.terms.push_back({c.label, node.length(), pant_gap_direct(p)});
        }
    }
    std::sort(s.terms.begin(), s.terms.end(), [](const GapTerm& a, const GapTerm& b) {
        return std::tie(a.length, a.label) < std::tie(b.length, b.label);
    });
    return make_convergence_report(target, s, default_cutoffs(l_max));
}

CircleOracleReport circle_oracle_torus(double x, double y, double z_ab,
                                       double l_max, int samples, unsigned seed) {
    const SurfaceRep rep = torus_rep_from_traces(x, y, z_ab);
    const MobiusMap alpha(rep.eval("abAB"));
    if (!alpha.is_hyperbolic())
        throw NotPurelyLoxodromic("boundary not hyperbolic");
    const auto [ap, am] = fixed_points(alpha);
    const BoundaryPoint zeta = fixed_points(MobiusMap(rep.eval("a"))).first;
    const double ell = translation_length(alpha);
    auto bmap = [&](const BoundaryPoint& p) {
        return std::log(std::abs(classical_b(ap, p, am, zeta)));
    };
    auto mod_ell = [&](double v) {
        double m = std::fmod(v, ell);
        if (m < 0) m += ell;
        return m;
    };

    CircleOracleReport rep_out;
    rep_out.period = ell;
    const double t_alpha = fricke_commutator_trace(x, y, z_ab);
    const double la = 2.0 * std::acosh(std::abs(t_alpha) / 2.0);

    for (const SlopeNode& node : simple_curves_torus(x, y, z_ab, l_max)) {
        const double lw = node.length();
        const double formula = gap_formula(GapKind::pant, la, lw, lw);
        for (const PantsClass& c : pants_classes_torus(node, &rep)) {
            const MobiusMap mb(rep.eval(c.beta));
            const MobiusMap mg(rep.eval(c.gamma));
            const BoundaryPoint bp = fixed_points(mb).first;
            const BoundaryPoint gm = fixed_points(mg).second;
            const double g = std::log(classical_b(ap, gm, am, bp));
            rep_out.intervals.push_back({c.label, mod_ell(bmap(bp)), g, formula});
        }
    }
    std::sort(rep_out.intervals.begin(), rep_out.intervals.end(),
              [](const OracleInterval& a, const OracleInterval& b) {
                  return a.start < b.start;
              });

    rep_out.max_formula_error = 0;
    rep_out.total_measure = 0;
    for (const auto& iv : rep_out.intervals) {
        rep_out.max_formula_error =
            std::max(rep_out.max_formula_error, std::abs(iv.length - iv.formula_gap));
        rep_out.total_measure += iv.length;
    }

    rep_out.disjoint = true;
    rep_out.min_separation = ell;
    const std::size_t n = rep_out.intervals.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& cur = rep_out.intervals[i];
        const double next_start = (i + 1 < n) ? rep_out.intervals[i + 1].start
                                              : rep_out.intervals[0].start + ell;
        const double slack = next_start - (cur.start + cur.length);
        rep_out.min_separation = std::min(rep_out.min_separation, slack);
        if (slack < -1e-9)
            throw OverlapDetected("gap intervals overlap on the circle: " + cur.label);
        if (slack < 0) rep_out.disjoint = false;
    }

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, M_PI);
    rep_out.translation_residual = 0;
    int done = 0;
    while (done < samples) {
        const BoundaryPoint z = BoundaryPoint::from_angle(ang(rng));
        if (same_point(z, ap, 1e-6) || same_point(z, am, 1e-6) ||
            same_point(z, zeta, 1e-6)) {
            continue;
        }
        const double d = bmap(alpha(z)) - bmap(z);
        const double res = std::min(std::abs(d - ell), std::abs(d + ell));
        rep_out.translation_residual = std::max(rep_out.translation_residual, res);
        ++done;
    }
    return rep_out;
}

} // namespace gapkit
