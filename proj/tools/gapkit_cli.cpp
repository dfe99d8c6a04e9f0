// gapkit command-line surface: runs the verification suites and emits
// human-readable or CSV reports.
//
// Exit codes: 0 = all checks passed, 1 = a tolerance check failed,
//             2 = invalid input (bad flags or a degenerate configuration).
//
// CSV schemas (first column is always a monotone key):
//   axioms         axiom,residual
//   verify-boundary cutoff,partial_sum,residual
//   verify-cusp     cutoff,partial_sum,residual
//   fg-gap          form,value,direct,residual
//   fg-roundtrip    sample,error
//   double          n,h_residual,relation_residual,mirror_residual
//   enumerate       index,p,q,trace,length,word

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gapkit/crossratio.hpp"
#include "gapkit/doubling.hpp"
#include "gapkit/enumeration.hpp"
#include "gapkit/fock_goncharov.hpp"
#include "gapkit/hyperbolic.hpp"
#include "gapkit/identity.hpp"

using namespace gapkit;

namespace {

enum class Format { text, csv };

struct CommonOpts {
    double tol = 1e-9;
    double cutoff = 12.0;
    int samples = 1000;
    unsigned seed = 12345;
    std::string precision = "f64";
    std::string format = "text";
    std::vector<double> traces;
    std::vector<double> lengths;
    std::vector<double> coords;
    std::vector<std::string> weyl;

    [[nodiscard]] Format fmt() const {
        return format == "csv" ? Format::csv : Format::text;
    }
    [[nodiscard]] bool extended() const { return precision == "ext"; }
};

// deterministic number formatting so identical (config, seed) runs produce
// byte-identical CSV
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

FGCoords coords_from(const std::vector<double>& v) {
    FGCoords k;
    k.x = v[0];
    k.y = v[1];
    k.a = v[2];
    k.A = v[3];
    k.b = v[4];
    k.B = v[5];
    k.c = v[6];
    k.C = v[7];
    for (double e : v)
        if (!(e > 0)) throw DegenerateConfiguration("coordinates must be positive");
    return k;
}

WeylTriple weyl_from(const std::vector<std::string>& v) {
    WeylTriple wt;
    std::array<std::array<int, 3>*, 3> dst{&wt.u, &wt.v, &wt.w};
    for (int i = 0; i < 3; ++i) {
        const std::string& s = v[i];
        if (s.size() != 3) throw DimensionMismatch("--weyl entries are 3 digits");
        for (int j = 0; j < 3; ++j) {
            const int d = s[j] - '1';
            if (d < 0 || d > 2) throw DimensionMismatch("--weyl digits must be 1-3");
            (*dst[i])[j] = d;
        }
    }
    return wt;
}

int run_axioms(const CommonOpts& o) {
    const Evaluator classical = [](const BoundaryPoint& x, const BoundaryPoint& y,
                                   const BoundaryPoint& z, const BoundaryPoint& t) {
        return classical_b(x, y, z, t);
    };
    const AxiomsReport a = axioms_check(classical, o.samples, o.seed);
    const HyperbolicIdentityReport h =
        hyperbolic_identity_check(classical, o.samples, o.seed + 1);
    const OrderedReport ord = ordered_check(classical, o.samples, o.seed + 2);
    const std::vector<std::pair<const char*, double>> rows = {
        {"zero_norm", a.zero_norm},         {"one_norm", a.one_norm},
        {"cocycle_first", a.cocycle_first}, {"cocycle_second", a.cocycle_second},
        {"pair_swap", a.pair_swap},         {"inverse_xz", a.inverse_xz},
        {"inverse_yt", a.inverse_yt},       {"complement", h.complement},
        {"anharmonic", h.anharmonic},       {"transpose", h.transpose}};
    if (o.fmt() == Format::csv) {
        std::printf("index,axiom,residual\n");
        for (std::size_t i = 0; i < rows.size(); ++i)
            std::printf("%zu,%s,%s\n", i + 1, rows[i].first,
                        num(rows[i].second).c_str());
    } else {
        std::printf("cross-ratio axiom residuals over %d quadruples (seed %u)\n",
                    o.samples, o.seed);
        for (const auto& [name, r] : rows)
            std::printf("  %-15s %s\n", name, num(r).c_str());
        std::printf("  ordered: %s (margins %s / %s)\n",
                    ord.ordered ? "yes" : "no", num(ord.above_one_margin).c_str(),
                    num(ord.negative_margin).c_str());
    }
    const bool pass =
        a.max_residual() <= o.tol && h.max_residual() <= o.tol && ord.ordered;
    if (o.fmt() == Format::text)
        std::printf("%s (tolerance %s)\n", pass ? "PASS" : "FAIL",
                    num(o.tol).c_str());
    return pass ? 0 : 1;
}

int report_identity(const CommonOpts& o, const ConvergenceReport& r) {
    if (o.fmt() == Format::csv) {
        std::printf("cutoff,partial_sum,residual\n");
        for (std::size_t i = 0; i < r.cutoffs.size(); ++i)
            std::printf("%s,%s,%s\n", num(r.cutoffs[i]).c_str(),
                        num(r.partial_sums[i]).c_str(),
                        num(r.residuals[i]).c_str());
    } else {
        std::printf("target %s\n", num(r.target).c_str());
        std::printf("%10s %18s %14s\n", "cutoff", "partial sum", "residual");
        for (std::size_t i = 0; i < r.cutoffs.size(); ++i)
            std::printf("%10s %18s %14s\n", num(r.cutoffs[i]).c_str(),
                        num(r.partial_sums[i]).c_str(),
                        num(r.residuals[i]).c_str());
    }
    const bool pass = r.pass && r.monotone && r.residuals.back() <= o.tol;
    if (o.fmt() == Format::text)
        std::printf("%s (monotone %s, final residual %s, tolerance %s)\n",
                    pass ? "PASS" : "FAIL", r.monotone ? "yes" : "no",
                    num(r.residuals.back()).c_str(), num(o.tol).c_str());
    return pass ? 0 : 1;
}

int run_boundary(const CommonOpts& o) {
    const auto& t = o.traces;
    return report_identity(
        o, boundary_identity_torus(t[0], t[1], t[2], o.cutoff, o.extended()));
}

int run_cusp(const CommonOpts& o) {
    const auto& t = o.traces;
    return report_identity(
        o, cusp_identity_torus(t[0], t[1], t[2], o.cutoff, o.extended()));
}

int run_fg_gap(const CommonOpts& o) {
    const FGCoords k = coords_from(o.coords);
    const PantsRep3 rep = fg_holonomy(k);
    const WeylTriple wt = o.weyl.empty() ? canonical_weyl_choice() : weyl_from(o.weyl);
    const double direct = pant_gap_direct(rep, wt);
    struct Row {
        const char* form;
        double value;
    };
    std::vector<Row> rows;
    if (in_regime(GapForm::big_fraction, k))
        rows.push_back({"big_fraction", gap_closed_form(GapForm::big_fraction, k)});
    if (in_regime(GapForm::log_ratio, k))
        rows.push_back({"log_ratio", gap_closed_form(GapForm::log_ratio, k)});
    if (in_regime(GapForm::small_fraction, k))
        rows.push_back({"small_fraction", gap_closed_form(GapForm::small_fraction, k)});
    bool pass = true;
    if (o.fmt() == Format::csv) {
        std::printf("form,value,direct,residual\n");
        for (const Row& r : rows)
            std::printf("%s,%s,%s,%s\n", r.form, num(r.value).c_str(),
                        num(direct).c_str(), num(std::abs(r.value - direct)).c_str());
    } else {
        std::printf("direct eigenvector gap: %s\n", num(direct).c_str());
        if (rows.empty())
            std::printf("no closed-form regime applies at these coordinates\n");
        for (const Row& r : rows)
            std::printf("  closed form %s: %s (residual %s)\n", r.form,
                        num(r.value).c_str(),
                        num(std::abs(r.value - direct)).c_str());
    }
    for (const Row& r : rows)
        if (std::abs(r.value - direct) > o.tol) pass = false;
    if (o.fmt() == Format::text)
        std::printf("%s (tolerance %s)\n", pass ? "PASS" : "FAIL",
                    num(o.tol).c_str());
    return pass ? 0 : 1;
}

int run_fg_roundtrip(const CommonOpts& o) {
    std::vector<FGCoords> inputs;
    if (!o.coords.empty()) {
        inputs.push_back(coords_from(o.coords));
    } else {
        std::mt19937 rng(o.seed);
        std::uniform_real_distribution<double> lu(-1.0, 1.0);
        while (static_cast<int>(inputs.size()) < o.samples) {
            FGCoords k;
            double* f[8] = {&k.x, &k.y, &k.a, &k.A, &k.b, &k.B, &k.c, &k.C};
            for (double* p : f) *p = std::exp(lu(rng));
            try {  // keep only purely loxodromic samples
                const PantsRep3 rep = fg_holonomy(k);
                eigen_real_simple(Mat(rep.alpha));
                eigen_real_simple(Mat(rep.beta));
                eigen_real_simple(Mat(rep.gamma));
            } catch (const NotPurelyLoxodromic&) {
                continue;
            }
            inputs.push_back(k);
        }
    }
    bool pass = true;
    if (o.fmt() == Format::csv) std::printf("sample,error\n");
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const FGCoords& k = inputs[i];
        const PantsRep3 rep = fg_holonomy(k);
        const auto [wt, detect_err] = detect_weyl(rep, k);
        const FGCoords back = fg_coords(fg_flags(rep, wt));
        const auto ka = k.as_array(), ba = back.as_array();
        double err = detect_err;
        for (int j = 0; j < 8; ++j)
            err = std::max(err, std::abs(ba[j] - ka[j]) /
                                    std::max(1.0, std::abs(ka[j])));
        if (err > o.tol) pass = false;
        if (o.fmt() == Format::csv)
            std::printf("%zu,%s\n", i, num(err).c_str());
        else
            std::printf("sample %3zu: round-trip error %s\n", i, num(err).c_str());
    }
    if (o.fmt() == Format::text)
        std::printf("%s (%zu samples, tolerance %s)\n", pass ? "PASS" : "FAIL",
                    inputs.size(), num(o.tol).c_str());
    return pass ? 0 : 1;
}

int run_double(const CommonOpts& o) {
    const auto& l = o.lengths;
    const FuchsianPants p = pants_rep_from_lengths(l[0], l[1], l[2]);
    // scale-matched projective mismatch (maximum over the mirror pairs)
    auto proj_residual = [](const Mat& a, const Mat& b) {
        Eigen::Index i = 0, j = 0;
        const double bmax = b.cwiseAbs().maxCoeff(&i, &j);
        const double s = a(i, j) / b(i, j);
        const double scale = std::max(a.cwiseAbs().maxCoeff(), std::abs(s) * bmax);
        return (a - s * b).cwiseAbs().maxCoeff() / scale;
    };
    bool pass = true;
    if (o.fmt() == Format::csv)
        std::printf("n,h_residual,relation_residual,mirror_residual\n");
    for (int n : {2, 3}) {
        SurfaceRep rep;
        if (n == 2) {
            rep.generators['b'] = Mat(p.beta.m);
            rep.generators['c'] = Mat(p.gamma.m);
        } else {
            rep.generators['b'] = sym_power(p.beta.m, 3);
            rep.generators['c'] = sym_power(p.gamma.m, 3);
        }
        const GoodHom g = make_good(rep, 0);
        const Mat j = jn_matrix(n);
        const DoubleRep d = j_extension(g, j);
        const double hres = h_generator_residual(g, d);
        const double rres = double_relation_residual(d);
        // mirror involution: swapping the two copies and inverting the arcs
        // is conjugation by J
        double mres = 0;
        const std::pair<Word, Word> mirror_pairs[] = {
            {"b", "d"}, {"c", "e"}, {"x", "X"}, {"y", "Y"}};
        for (const auto& [w, mw] : mirror_pairs)
            mres = std::max(mres,
                            proj_residual(d.eval(mw), Mat(j * d.eval(w) * j)));
        if (hres > o.tol || rres > o.tol || mres > o.tol) pass = false;
        if (o.fmt() == Format::csv)
            std::printf("%d,%s,%s,%s\n", n, num(hres).c_str(), num(rres).c_str(),
                        num(mres).c_str());
        else
            std::printf(
                "n = %d: H-generator residual %s, relation residual %s, "
                "mirror residual %s\n",
                n, num(hres).c_str(), num(rres).c_str(), num(mres).c_str());
    }
    if (o.fmt() == Format::text)
        std::printf("%s (tolerance %s)\n", pass ? "PASS" : "FAIL",
                    num(o.tol).c_str());
    return pass ? 0 : 1;
}

int run_enumerate(const CommonOpts& o) {
    const auto& t = o.traces;
    auto curves = simple_curves_torus(t[0], t[1], t[2], o.cutoff);
    std::sort(curves.begin(), curves.end(), [](const SlopeNode& a, const SlopeNode& b) {
        return a.length() < b.length();
    });
    if (o.fmt() == Format::csv) {
        std::printf("index,p,q,trace,length,word\n");
        for (std::size_t i = 0; i < curves.size(); ++i)
            std::printf("%zu,%ld,%ld,%s,%s,%s\n", i, curves[i].p, curves[i].q,
                        num(curves[i].trace).c_str(),
                        num(curves[i].length()).c_str(), curves[i].word.c_str());
    } else {
        std::printf("%zu simple closed curves with length <= %s\n", curves.size(),
                    num(o.cutoff).c_str());
        std::printf("%8s %10s %14s %14s  %s\n", "slope", "word", "trace",
                    "length", "pants classes");
        for (const SlopeNode& c : curves) {
            const auto classes = pants_classes_torus(c);
            std::string labels;
            for (const PantsClass& pc : classes) {
                if (!labels.empty()) labels += ", ";
                labels += "(" + pc.beta + ", " + pc.gamma + ")";
            }
            std::printf("%5ld/%-2ld %10s %14s %14s  %s\n", c.p, c.q,
                        c.word.c_str(), num(c.trace).c_str(),
                        num(c.length()).c_str(), labels.c_str());
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gapkit: numerical verification of boundary/cusp gap identities for "
        "hyperbolic and PSL(3,R) Hitchin pants representations"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "Config file mirroring the flags (key=value; subcommand "
                   "options under a [subcommand] section; pass --config before "
                   "the subcommand)");

    CommonOpts o;
    int rc = 0;
    // per-subcommand defaults for --tol/--samples, applied when the flag was
    // not given explicitly
    auto add_common = [&](CLI::App* sub, bool uses_rng, double default_tol,
                          int default_samples = 1000) {
        CLI::Option* tol_opt =
            sub->add_option("--tol", o.tol, "Tolerance for the pass/fail verdict");
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"text", "csv"}));
        CLI::Option* samples_opt = nullptr;
        if (uses_rng) {
            samples_opt =
                sub->add_option("--samples", o.samples, "Number of random samples");
            sub->add_option("--seed", o.seed, "RNG seed");
        }
        sub->preparse_callback([&o, tol_opt, samples_opt, default_tol,
                                default_samples](std::size_t) {
            if (tol_opt->count() == 0) o.tol = default_tol;
            if (samples_opt && samples_opt->count() == 0)
                o.samples = default_samples;
        });
        return sub;
    };
    auto add_traces = [&](CLI::App* sub) {
        sub->add_option("--traces", o.traces,
                        "Torus trace coordinates tr(a),tr(b),tr(ab)")
            ->expected(3)
            ->delimiter(',')
            ->required();
        sub->add_option("--cutoff", o.cutoff, "Curve-length cutoff");
    };

    CLI::App* ax = add_common(
        app.add_subcommand("axioms", "Cross-ratio axiom and relation residuals "
                                     "(CSV: axiom,residual)"),
        true, 1e-9);
    ax->callback([&] { rc = run_axioms(o); });

    CLI::App* vb = add_common(
        app.add_subcommand("verify-boundary",
                           "Boundary identity on a one-holed torus "
                           "(CSV: cutoff,partial_sum,residual)"),
        false, 5e-2);
    add_traces(vb);
    vb->add_option("--precision", o.precision, "Summation precision")
        ->check(CLI::IsMember({"f64", "ext"}));
    vb->callback([&] { rc = run_boundary(o); });

    CLI::App* vc = add_common(
        app.add_subcommand("verify-cusp",
                           "Cusp identity on a cusped torus "
                           "(CSV: cutoff,partial_sum,residual)"),
        false, 5e-2);
    add_traces(vc);
    vc->add_option("--precision", o.precision, "Summation precision")
        ->check(CLI::IsMember({"f64", "ext"}));
    vc->callback([&] { rc = run_cusp(o); });

    CLI::App* fg = add_common(
        app.add_subcommand("fg-gap",
                           "Closed-form pant gaps vs the direct eigenvector gap "
                           "(CSV: form,value,direct,residual)"),
        false, 1e-6);
    fg->add_option("--coords", o.coords,
                   "Coordinates x,y,a,A,b,B,c,C (all positive)")
        ->expected(8)
        ->delimiter(',')
        ->required();
    fg->add_option("--weyl", o.weyl,
                   "Weyl triple as three digit strings, e.g. 213,123,312")
        ->expected(3)
        ->delimiter(',');
    fg->callback([&] { rc = run_fg_gap(o); });

    CLI::App* rt = add_common(
        app.add_subcommand("fg-roundtrip",
                           "Coordinates -> holonomies -> flags -> coordinates "
                           "(CSV: sample,error)"),
        true, 1e-8, 100);
    rt->add_option("--coords", o.coords,
                   "Single input x,y,a,A,b,B,c,C instead of random samples")
        ->expected(8)
        ->delimiter(',');
    rt->callback([&] { rc = run_fg_roundtrip(o); });

    CLI::App* db = add_common(
        app.add_subcommand("double",
                           "J-extension doubling checks for n = 2 and n = 3 "
                           "(CSV: n,h_residual,relation_residual,mirror_residual)"),
        false, 1e-8);
    db->add_option("--lengths", o.lengths, "Pants boundary lengths")
        ->expected(3)
        ->delimiter(',')
        ->required();
    db->callback([&] { rc = run_double(o); });

    CLI::App* en = add_common(
        app.add_subcommand("enumerate",
                           "Simple closed curves and pants classes up to a "
                           "length cutoff (CSV: index,p,q,trace,length,word)"),
        false, 1e-9);
    add_traces(en);
    en->callback([&] { rc = run_enumerate(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // input error
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return rc;
}
