#include "gapkit/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include "gapkit/hyperbolic.hpp"

namespace gapkit {

Word reduce_word(const Word& w) {
    Word out;
    for (char ch : w) {
        if (!out.empty() && out.back() == static_cast<char>(std::isupper(ch)
                                ? std::tolower(ch)
                                : std::toupper(ch))) {
            out.pop_back();
        } else {
            out.push_back(ch);
        }
    }
    return out;
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out.push_back(std::isupper(*it) ? static_cast<char>(std::tolower(*it))
                                        : static_cast<char>(std::toupper(*it)));
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = reduce_word(w);
    while (r.size() > 1 && r.front() == (std::isupper(r.back())
                                             ? std::tolower(r.back())
                                             : std::toupper(r.back()))) {
        r = r.substr(1, r.size() - 2);
    }
    return r;
}

Mat SurfaceRep::eval(const Word& w) const {
    const int n = dim();
    Mat m = Mat::Identity(n, n);
    for (char ch : w) {
        const char key = static_cast<char>(std::tolower(ch));
        auto it = generators.find(key);
        if (it == generators.end()) throw DimensionMismatch("unknown generator letter");
        if (std::isupper(ch)) {
            m = m * it->second.inverse();
        } else {
            m = m * it->second;
        }
    }
    return m;
}

int SurfaceRep::dim() const {
    if (generators.empty()) throw DimensionMismatch("no generators");
    return static_cast<int>(generators.begin()->second.rows());
}

Mat word_to_matrix(const SurfaceRep& rep, const Word& w) { return rep.eval(w); }

double fricke_commutator_trace(double x, double y, double z) {
    return x * x + y * y + z * z - x * y * z - 2.0;
}

namespace {

struct SlopePair {
    long p, q;
};

SlopePair mediant(SlopePair a, SlopePair b) { return {a.p + b.p, a.q + b.q}; }

void canonicalize(long& p, long& q) {
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
}

} // namespace

std::vector<SlopeNode> simple_curves_torus(double tr_a, double tr_b, double tr_ab,
                                           double l_max) {
    std::vector<SlopeNode> out;
    auto check = [](double t) {
        if (std::abs(t) <= 2.0) throw NonDiscreteInput("simple-curve trace <= 2");
    };
    auto emit = [&](long p, long q, const Word& w, double tr) {
        canonicalize(p, q);
        out.push_back({p, q, w, tr});
    };
    check(tr_a);
    check(tr_b);
    auto len = [](double t) { return 2.0 * std::acosh(std::abs(t) / 2.0); };
    if (len(tr_a) <= l_max) emit(1, 0, "a", tr_a);
    if (len(tr_b) <= l_max) emit(0, 1, "b", tr_b);

    // triangle (u, v, w = uv): children (u, w, uw - v) and (w, v, vw - u)
    std::function<void(SlopePair, SlopePair, const Word&, const Word&, double,
                       double, double)>
        rec = [&](SlopePair su, SlopePair sv, const Word& wu, const Word& wv,
                  double tu, double tv, double tw) {
            check(tw);
            if (len(tw) > l_max) return;
            const SlopePair sw = mediant(su, sv);
            const Word ww = reduce_word(wu + wv);
            emit(sw.p, sw.q, ww, tw);
            rec(su, sw, wu, ww, tu, tw, tu * tw - tv);
            rec(sw, sv, ww, wv, tw, tv, tv * tw - tu);
        };
    rec({1, 0}, {0, 1}, "a", "b", tr_a, tr_b, tr_ab);
    rec({1, 0}, {0, -1}, "a", "B", tr_a, tr_b, tr_a * tr_b - tr_ab);

    std::sort(out.begin(), out.end(), [](const SlopeNode& a, const SlopeNode& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.p != b.p) return a.p < b.p;
        return a.q < b.q;
    });
    return out;
}

PantsClass normalize_class(const PantsClass& c) {
    const Word a = reduce_word(c.alpha);
    const Word ai = inverse_word(a);
    auto shifted = [&](const PantsClass& base, int dir) {
        PantsClass out = base;
        if (dir > 0) {
            out.beta = reduce_word(a + base.beta + ai);
            out.gamma = reduce_word(a + base.gamma + ai);
        } else {
            out.beta = reduce_word(ai + base.beta + a);
            out.gamma = reduce_word(ai + base.gamma + a);
        }
        return out;
    };
    auto key = [](const PantsClass& x) {
        return std::make_tuple(x.beta.size() + x.gamma.size(), x.beta, x.gamma);
    };
    PantsClass best = c;
    best.alpha = a;
    best.beta = reduce_word(c.beta);
    best.gamma = reduce_word(c.gamma);
    for (int dir : {+1, -1}) {
        PantsClass cur = best;
        int worse = 0;
        while (worse < 2) {
            cur = shifted(cur, dir);
            if (key(cur) < key(best)) {
                best = cur;
                worse = 0;
            } else {
                ++worse;
            }
        }
    }
    return best;
}

namespace {

// direct pant gap log b(alpha+, gamma-, alpha-, beta+) for a torus class
double direct_gap_torus(const SurfaceRep& rep, const PantsClass& c) {
    const MobiusMap ma(rep.eval(c.alpha));
    const MobiusMap mb(rep.eval(c.beta));
    const MobiusMap mg(rep.eval(c.gamma));
    auto [ap, am] = fixed_points(ma);
    auto bp = fixed_points(mb).first;
    auto gm = fixed_points(mg).second;
    return std::log(classical_b(ap, gm, am, bp));
}

} // namespace

std::vector<PantsClass> pants_classes_torus(const SlopeNode& node,
                                            const SurfaceRep* rep) {
    static const Word alpha = "abAB";
    static const Word alpha_inv = "baBA";
    const Word& w = node.word;

    // all cyclic rotations of w and w^{-1}: the markings of the two sides
    std::set<Word> rotations;
    for (const Word& base : {w, inverse_word(w)}) {
        for (std::size_t k = 0; k < base.size(); ++k)
            rotations.insert(base.substr(k) + base.substr(0, k));
    }

    // A marking (alpha, beta, gamma) with alpha gamma beta = 1 cuts along w
    // exactly when beta and gamma are both conjugates of w^{+-1}; generate
    // candidates where one of them is a rotation and the induced companion
    // cyclically reduces back into the rotation set.
    std::map<std::pair<Word, Word>, PantsClass> found;
    auto offer = [&](PantsClass c) {
        c = normalize_class(c);
        found.emplace(std::make_pair(c.beta, c.gamma), c);
    };
    for (const Word& r : rotations) {
        const Word gamma = reduce_word(alpha_inv + r);
        if (rotations.count(cyclic_reduce(gamma)) != 0)
            offer({alpha, inverse_word(r), gamma, {}});
        const Word beta = reduce_word(r + alpha_inv);
        if (rotations.count(cyclic_reduce(beta)) != 0)
            offer({alpha, beta, inverse_word(r), {}});
    }

    std::vector<PantsClass> out;
    for (auto& [key, c] : found) {
        if (rep != nullptr && direct_gap_torus(*rep, c) <= 0.0) continue;
        out.push_back(c);
    }
    if (static_cast<int>(out.size()) != torus_class_multiplicity)
        throw DegenerateConfiguration("expected " +
                                      std::to_string(torus_class_multiplicity) +
                                      " pants classes for curve " + w + ", found " +
                                      std::to_string(out.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].label = w + "/" + std::to_string(i + 1);
    return out;
}

SelfPantsClasses pants_classes_selfpants() {
    SelfPantsClasses out;
    // alpha = (gamma * beta)^{-1} = B C in the free group on b (= beta), c (= gamma)
    PantsClass p1{"BC", "b", "c", "self/1"};
    // second class: (alpha, alpha gamma alpha^{-1}, beta)
    PantsClass p2{"BC", reduce_word(Word("BC") + "c" + inverse_word("BC")), "b",
                  "self/2"};
    out.pants = {p1, p2};
    out.boundary = {'b', 'c'};  // S_alpha: beta preferred, then gamma
    return out;
}

} // namespace gapkit
