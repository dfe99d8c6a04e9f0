#include "gapkit/fock_goncharov.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace gapkit {

namespace {

Eigen::Matrix3d E_matrix(double w, double z) {
    Eigen::Matrix3d e;
    e << 0, 0, 1.0 / z,
         0, -1, 0,
         w, 0, 0;
    return e;
}

double kahan_sum(const std::vector<double>& terms) {
    double s = 0.0, comp = 0.0;
    for (double t : terms) {
        const double y = t - comp;
        const double u = s + y;
        comp = (u - s) - y;
        s = u;
    }
    return s;
}

Eigen::Vector3d annihilator(const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
    return u.cross(v);
}

} // namespace

Eigen::Matrix3d fg_triangle_matrix(double x) {
    Eigen::Matrix3d t;
    t << 0, 0, 1,
         0, -1, -1,
         x, 1 + x, 1;
    return t;
}

PantsRep3 fg_holonomy(const FGCoords& k) {
    if (k.x <= 0 || k.y <= 0 || k.a <= 0 || k.A <= 0 || k.b <= 0 || k.B <= 0 ||
        k.c <= 0 || k.C <= 0)
        throw InvalidLengths("coordinates must be positive");
    const Eigen::Matrix3d X = fg_triangle_matrix(k.x);
    const Eigen::Matrix3d Y = fg_triangle_matrix(k.y);
    const Eigen::Matrix3d Qa = E_matrix(k.A, k.a);
    const Eigen::Matrix3d Qb = E_matrix(k.B, k.b);
    const Eigen::Matrix3d Qc = E_matrix(k.C, k.c);
    PantsRep3 rep;
    rep.alpha = X * Qc.inverse() * Y * Qb;
    rep.beta = X * X * Qa.inverse() * Y * Qc * X * X;
    rep.gamma = Qb.inverse() * Y * Qa * X;
    return rep;
}

FlagConfig6 fg_flags(const PantsRep3& rep, const WeylTriple& wt) {
    const EigenData ea = eigen_real_simple(rep.alpha);
    const EigenData eb = eigen_real_simple(rep.beta);
    const EigenData ec = eigen_real_simple(rep.gamma);
    FlagConfig6 cfg;
    cfg.Xa = flag_from_eigenvectors(ea, {wt.u[0], wt.u[1], wt.u[2]});
    cfg.Xb = flag_from_eigenvectors(eb, {wt.v[0], wt.v[1], wt.v[2]});
    cfg.Xg = flag_from_eigenvectors(ec, {wt.w[0], wt.w[1], wt.w[2]});
    cfg.Za = apply(rep.beta, cfg.Xa);
    cfg.Zb = apply(rep.gamma, cfg.Xb);
    cfg.Zg = apply(rep.alpha, cfg.Xg);
    return cfg;
}

FGCoords fg_coords(const FlagConfig6& cfg) {
    FGCoords k;
    k.x = triple_ratio(cfg.Xa, cfg.Xb, cfg.Xg, {1, 1, 1});
    k.y = triple_ratio(cfg.Za, cfg.Xg, cfg.Xb, {1, 1, 1});
    k.a = edge_fn(cfg.Xg, cfg.Za, cfg.Xb, cfg.Xa, 1);
    k.A = edge_fn(cfg.Xg, cfg.Za, cfg.Xb, cfg.Xa, 2);
    k.b = edge_fn(cfg.Xa, cfg.Zb, cfg.Xg, cfg.Xb, 1);
    k.B = edge_fn(cfg.Xa, cfg.Zb, cfg.Xg, cfg.Xb, 2);
    k.c = edge_fn(cfg.Xb, cfg.Zg, cfg.Xa, cfg.Xg, 1);
    k.C = edge_fn(cfg.Xb, cfg.Zg, cfg.Xa, cfg.Xg, 2);
    return k;
}

namespace {

double coords_rel_error(const FGCoords& got, const FGCoords& want) {
    const auto g = got.as_array();
    const auto w = want.as_array();
    double e = 0;
    for (size_t i = 0; i < 8; ++i)
        e = std::max(e, std::abs(g[i] - w[i]) / std::abs(w[i]));
    return e;
}

} // namespace

std::pair<WeylTriple, double> detect_weyl(const PantsRep3& rep, const FGCoords& k) {
    static const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    WeylTriple best;
    double best_err = std::numeric_limits<double>::infinity();
    for (const auto& u : perms)
        for (const auto& v : perms)
            for (const auto& w : perms) {
                WeylTriple wt{u, v, w};
                try {
                    const double err = coords_rel_error(fg_coords(fg_flags(rep, wt)), k);
                    if (err < best_err) {
                        best_err = err;
                        best = wt;
                    }
                } catch (const Error&) {
                    // degenerate configuration for this triple; skip
                }
            }
    if (!std::isfinite(best_err))
        throw DegenerateConfiguration("no Weyl triple yields a valid configuration");
    return {best, best_err};
}

double period_n(const Mat& m) {
    const EigenData e = eigen_real_simple(m);
    const int n = static_cast<int>(e.values.size());
    return std::log(std::abs(e.values(0) / e.values(n - 1)));
}

WeylTriple canonical_weyl_choice() {
    WeylTriple wt;
    wt.u = {1, 0, 2};
    wt.v = {0, 1, 2};
    wt.w = {2, 0, 1};
    return wt;
}

double pant_gap_direct(const PantsRep3& rep, const WeylTriple& wt) {
    const EigenData ea = eigen_real_simple(rep.alpha);
    const EigenData eb = eigen_real_simple(rep.beta);
    const EigenData ec = eigen_real_simple(rep.gamma);
    const Eigen::Vector3d hp =
        annihilator(ea.vectors.col(wt.u[0]), ea.vectors.col(wt.u[1]));
    const Eigen::Vector3d hm =
        annihilator(ea.vectors.col(wt.u[0]), ea.vectors.col(wt.u[2]));
    const Eigen::Vector3d b = eb.vectors.col(wt.v[0]);
    const Eigen::Vector3d c = ec.vectors.col(wt.w[0]);
    const double num = hp.dot(c) * hm.dot(b);
    const double den = hm.dot(c) * hp.dot(b);
    if (std::abs(den) < 1e-24) throw ZeroPairing("vanishing eigenline pairing");
    const double ratio = num / den;
    if (!(ratio > 0)) throw ZeroPairing("gap cross ratio not positive");
    return std::log(ratio);
}

namespace {

std::pair<double, double> small_fraction_value(const FGCoords& k) {
    const double x = k.x, y = k.y, b = k.b, B = k.B, c = k.c, C = k.C;
    const std::vector<double> num_terms = {
        x * b * y, x * y, x * b, x * b * B * C, x * C * b, b * B * x,
        b * b * B * C, b * B * C};
    const std::vector<double> den_terms = {
        b * c * C * C, c * C * b, b * c * y * C, y * C * b,
        c * y * C, y * C, C * x * y, x * y};
    return {kahan_sum(num_terms) * y, b * B * kahan_sum(den_terms)};
}

std::pair<double, double> big_fraction_value(const FGCoords& k) {
    const double x = k.x, y = k.y, a = k.a, A = k.A, b = k.b, B = k.B, c = k.c,
                 C = k.C;
    const std::vector<double> f1 = {
        a * y * A, y * A, x * y * A, x * y, A * A * a * b, a * b * A,
        a * y * b * A, y * b * A};
    const std::vector<double> f2 = {
        x * b * y, x * y, x * b, x * b * B * C, x * C * b, b * B * x,
        b * b * B * C, b * B * C};
    const double num = kahan_sum(f1) * kahan_sum(f2) * x * y;
    const double b2 = b * b, b3 = b * b * b, b4 = b2 * b2;
    const double x2 = x * x, x3 = x2 * x, y2 = y * y, y3 = y2 * y;
    const double A2 = A * A, B2 = B * B, C2 = C * C;
    const std::vector<double> den_terms = {
        b * x3 * y3,
        b * x3 * y2,
        b * x3 * C * y2,
        x2 * y2 * A * C * b,
        b2 * B * x2 * y2 * C,
        b * B * x2 * y2 * C,
        b * B * x3 * C * y2,
        b * B * x3 * y2,
        x3 * y3,
        2 * b2 * B * x2 * y2 * A * C,
        b2 * B * x2 * y2 * A * c * C,
        b3 * B * x * a * y * A * c * C2,
        x2 * y2 * b2 * A * B * a * C,
        x * b3 * A * B2 * a * c * C2,
        C * b * A * B * a * x2 * y2,
        x3 * y2 * A * C * b,
        x * b3 * A2 * B2 * a * c * C2,
        b4 * A2 * B2 * a * c * C2,
        b2 * A * B2 * a * c * x * y * C,
        b2 * A * B * a * x * y * C,
        b2 * A * x2 * y2 * C,
        x2 * y2 * A * c * B * C * b,
        b3 * A2 * B2 * a * c * C2,
        x3 * y2 * b * A,
        x3 * y2 * b * A * B,
        2 * x * b2 * B * a * y2 * A * c * C,
        x * b3 * B * A2 * a * c * C * y,
        x * y2 * b * B * A * C,
        x * b3 * B * y2 * A * c * C,
        2 * x * b3 * B * a * A * c * C * y,
        x * b3 * B * a * A * c * y2 * C,
        x * b3 * A * B2 * a * c * y * C,
        x * y2 * b3 * A * B * a * C,
        2 * x * b2 * B * y2 * A * c * C,
        2 * x * b2 * B * y2 * A * C,
        x * b3 * B * y2 * A * C,
        x * b3 * B * A2 * a * c * C,
        x * b3 * A2 * B2 * a * c * C,
        x * b3 * A * B2 * a * c * C,
        x * b3 * B * a * A * c * C2,
        x * b3 * B * a * A * c * C,
        x * y2 * b * B * a * A * c * C,
        2 * x * y * b2 * B * a * A * c * C,
        x * y * b2 * B * a * A * c * C2,
        x * y * b3 * A * B * a * C,
        x * y * b3 * B * A * c * C,
        x * y * b2 * B * A2 * a * c * C,
        x * y * b2 * B * A * c * C,
        x3 * y2 * b * B * A * C,
        2 * x2 * y2 * b * B * A * C,
        x2 * y2 * b2 * B * A,
        x2 * y2 * b * A * B,
        x * y2 * C * b * A * B * a,
        x * y2 * b * B * A * c * C,
        x * b3 * B * A2 * a * c * C2,
        2 * x * y2 * b2 * A * B * a * C};
    return {num, kahan_sum(den_terms)};
}

} // namespace

double gap_closed_form(GapForm form, const FGCoords& k) {
    switch (form) {
        case GapForm::log_ratio:
            return std::log((1.0 + k.B) / (k.B * (1.0 + k.c)));
        case GapForm::small_fraction: {
            auto [num, den] = small_fraction_value(k);
            if (den <= 0) throw ZeroDenominator("small_fraction denominator");
            return std::log(num / den);
        }
        case GapForm::big_fraction: {
            auto [num, den] = big_fraction_value(k);
            if (den <= 0) throw ZeroDenominator("big_fraction denominator");
            return std::log(num / den);
        }
    }
    return 0;
}

bool in_regime(GapForm form, const FGCoords& k) {
    const double x = k.x, y = k.y, a = k.a, A = k.A, b = k.b, B = k.B, c = k.c,
                 C = k.C;
    // boundary eigenvalue ratios: alpha diag (cB, 1, xy/(Cb));
    // beta (x^2 y/(Ac), x, x C a) / x; gamma (xy/(Ba), 1, bA)
    const double ra = x * y / (C * b);
    const double beta_ok = (x * y / (A * c) > std::max(1.0, C * a));
    if (!beta_ok) return false;
    switch (form) {
        case GapForm::log_ratio:
            return 1.0 > ra && ra > c * B && x * y / (B * a) < std::min(1.0, b * A);
        case GapForm::big_fraction:
            return ra > 1.0 && 1.0 > c * B && b * A < std::min(1.0, x * y / (B * a));
        case GapForm::small_fraction:
            return ra > 1.0 && 1.0 > c * B && x * y / (B * a) < std::min(1.0, b * A);
    }
    return false;
}

std::pair<double, double> boundary_gap_forms(const FGCoords& k, double ell_alpha) {
    const double first = std::log1p(k.c * std::exp(ell_alpha)) - std::log1p(k.c);
    const double second = std::log((1.0 + k.B) / (k.B * (1.0 + k.c)));
    return {first, second};
}

PantsRep3 sym2_pants(const FuchsianPants& p) {
    PantsRep3 rep;
    rep.alpha = sym_power(p.alpha.m, 3);
    rep.beta = sym_power(p.beta.m, 3);
    rep.gamma = sym_power(p.gamma.m, 3);
    return rep;
}

} // namespace gapkit
