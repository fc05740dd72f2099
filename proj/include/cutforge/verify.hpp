#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cuts.hpp"
#include "independence.hpp"
#include "tower_ops.hpp"

namespace cutforge {

enum class Verdict { Pass, Fail, Undecided, Inapplicable };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Undecided: return "undecided";
        case Verdict::Inapplicable: return "inapplicable";
    }
    return "";
}

// Outcome of checking one structural statement on one concrete instance.
// A fail always carries a concrete counterexample in `witness`; a pass
// carries the bound or the evidence found.
struct LemmaReport {
    std::string lemma;
    std::string instance;
    Verdict verdict;
    std::string witness;

    std::string str() const {
        std::string s = lemma + " [" + instance + "]: " + to_string(verdict);
        if (!witness.empty()) s += " (" + witness + ")";
        return s;
    }
};

namespace verifydetail {

// Base-field probes used for sampled side checks: a coarse grid of
// constants and generator powers together with their negatives.
inline std::vector<FragElem> probe_grid(const TowerField& K) {
    std::vector<FragElem> out;
    std::size_t n = K.ambient_gens();
    for (const FragElem& w : cutdetail::kernel_candidates(K)) {
        out.push_back(w);
        out.push_back(-w);
    }
    for (long c : {2L, 7L}) {
        out.push_back(FragElem(Rat(c)).promoted(n));
        out.push_back(FragElem(Rat(1, c)).promoted(n));
    }
    return out;
}

// Does x sit on the correct side of every decidable probe of C? This is a
// sampled substitute for an exact realization test: restricted cuts keep
// generating sequences from the larger field, so the straddle shortcut
// does not apply to them.
inline bool spot_realizes(const CutSpec& C, const TowerElem& x, int fuel, long& checked) {
    const TowerFieldPtr& K = C.field();
    if (x.is_frag() && C.kind() == CutSpec::Kind::ElementInduced)
        return inddetail::same_cut(x.frag(), C.witness(), *K, fuel);
    for (const FragElem& k : probe_grid(*K)) {
        try {
            TowerElem kE(K, k);
            bool left = side(C, kE, fuel) == CutSide::Left;
            Ord o = cmp(kE, x, fuel);
            if (o == Ord::EQ) return false;  // a base element never fills its own cut
            if (left != (o == Ord::LT)) return false;
            ++checked;
        } catch (const undecided_error&) {
            // this probe stays open; others may still decide
        }
    }
    return true;
}

// Do two cuts over the same base field agree on every decidable probe?
inline bool probes_agree(const CutSpec& A, const CutSpec& B, int fuel, std::string* split) {
    for (const FragElem& k : probe_grid(*A.field())) {
        try {
            if (side(A, k, fuel) != side(B, k, fuel)) {
                if (split) *split = k.str();
                return false;
            }
        } catch (const undecided_error&) {
        }
    }
    return true;
}

// Leading term of x - y, decided without materializing the difference:
// fragments subtract directly, streams are cancelled term by term until
// they diverge. state: 0 = equal, 1 = decided, 2 = out of fuel.
struct DiffLead {
    int state;
    ExpVec val;
    RealAlg lead;
};

inline DiffLead diff_leading(const TowerElem& x, const TowerElem& y, int fuel) {
    if (x.is_frag() && y.is_frag()) {
        std::size_t n = std::max(x.ngens(), y.ngens());
        FragElem d = x.frag().promoted(n) - y.frag().promoted(n);
        if (d.zero()) return {0, ExpVec(0), RealAlg(0)};
        return {1, d.val(), d.leading_coeff()};
    }
    if (x.is_stream() && y.is_stream()) {
        if (x.stream().id() == y.stream().id()) return {0, ExpVec(0), RealAlg(0)};
        std::size_t ix = 0, iy = 0;
        for (int step = 0; step < fuel; ++step) {
            auto tx = x.stream().term(ix);
            auto ty = y.stream().term(iy);
            if (!tx && !ty) return {0, ExpVec(0), RealAlg(0)};
            if (tx && (!ty || tx->first < ty->first)) return {1, tx->first, tx->second};
            if (ty && (!tx || ty->first < tx->first)) return {1, ty->first, -ty->second};
            if (ra_cmp(tx->second, ty->second) != Ord::EQ)
                return {1, tx->first, tx->second - ty->second};
            ++ix;
            ++iy;
        }
    }
    return {2, ExpVec(0), RealAlg(0)};
}

}  // namespace verifydetail

// Least n with x^(1/n) < y < x^n for two realizations of a multiplicative
// cut; exhausting n_max reports undecided rather than guessing.
inline LemmaReport check_multiplicative_bound(const CutSpec& C, const TowerElem& x,
                                              const TowerElem& y, int n_max = 8,
                                              int fuel = kDefaultFuel) {
    LemmaReport rep{"multiplicative-bound",
                    C.str() + ", x = " + x.str() + ", y = " + y.str(), Verdict::Inapplicable, ""};
    try {
        if (!is_multiplicative(C, fuel)) {
            rep.witness = "cut is not multiplicative";
            return rep;
        }
        if (x.is_frag() && !inddetail::realizes(C, x.frag(), fuel)) {
            rep.witness = "x does not realize the cut";
            return rep;
        }
        if (y.is_frag() && !inddetail::realizes(C, y.frag(), fuel)) {
            rep.witness = "y does not realize the cut";
            return rep;
        }
        if (sign_of(x, fuel) <= 0) {
            rep.witness = "x is not positive";
            return rep;
        }
        for (int n = 1; n <= n_max; ++n) {
            if (cmp_with_power(y, x, Rat(1, n), fuel) == Ord::GT &&
                cmp_with_power(y, x, Rat(n), fuel) == Ord::LT) {
                rep.verdict = Verdict::Pass;
                rep.witness = "n = " + std::to_string(n);
                return rep;
            }
        }
        rep.verdict = Verdict::Undecided;
        rep.witness = "no bound up to n = " + std::to_string(n_max);
    } catch (const undecided_error& e) {
        rep.verdict = Verdict::Undecided;
        rep.witness = e.what();
    }
    return rep;
}

// For an additive cut C of its base field L and two elements of L that
// straddle C while inducing the same cut C' on the subfield K: when the
// multiplicative kernel of C restricts to the kernel of C', the ratio y/x
// must induce that restricted kernel cut on K. Hypothesis violations are
// reported as inapplicable, never as failures.
inline LemmaReport check_quotient_cut(const TowerFieldPtr& K, const CutSpec& C,
                                      const TowerElem& x, const TowerElem& y,
                                      int fuel = kDefaultFuel) {
    if (!K->subfield_of(*C.field()))
        throw precondition_error("check_quotient_cut: K is not a subfield of the cut's field");
    LemmaReport rep{"quotient-cut",
                    C.str() + " over " + K->name() + ", x = " + x.str() + ", y = " + y.str(),
                    Verdict::Inapplicable, ""};
    try {
        CofinalityTag tag = cofinality(C, fuel);
        if (tag.left == Cof::Zero || tag.right == Cof::Zero) {
            rep.witness = "improper cut";
            return rep;
        }
        if (!is_additive(C, fuel)) {
            rep.witness = "cut is not additive";
            return rep;
        }
        if (side(C, x, fuel) != CutSide::Left || side(C, y, fuel) != CutSide::Right) {
            rep.witness = "x, y do not straddle the cut";
            return rep;
        }
        CutSpec Cp = restrict_to(C, K);
        long checked = 0;
        if (!verifydetail::spot_realizes(Cp, x, fuel, checked) ||
            !verifydetail::spot_realizes(Cp, y, fuel, checked)) {
            rep.witness = "a realization does not induce the restricted cut";
            return rep;
        }
        CutSpec D1 = derive_mlt(Cp, fuel);
        CutSpec D2 = restrict_to(derive_mlt(C, fuel), K);
        std::string split;
        if (!verifydetail::probes_agree(D1, D2, fuel, &split)) {
            rep.witness = "kernel restriction hypothesis splits at " + split;
            return rep;
        }
        if (!x.is_frag() || !y.is_frag()) {
            rep.witness = "ratio of the realizations is not representable";
            return rep;
        }
        std::size_t nq = std::max(x.ngens(), y.ngens());
        FragElem q = y.frag().promoted(nq) / x.frag().promoted(nq);
        long agreed = 0;
        for (const FragElem& k : verifydetail::probe_grid(*K)) {
            try {
                TowerElem kE(K, k);
                bool left = side(D2, kE, fuel) == CutSide::Left;
                Ord o = cmp(kE, TowerElem(C.field(), q), fuel);
                if (left != (o == Ord::LT)) {
                    rep.verdict = Verdict::Fail;
                    rep.witness = "y/x = " + q.str() + " splits from the kernel cut at " + k.str();
                    return rep;
                }
                ++agreed;
            } catch (const undecided_error&) {
            }
        }
        rep.verdict = Verdict::Pass;
        rep.witness = agreed == 0 ? "vacuous: no probe decided"
                                  : "y/x = " + q.str() + " agreed on " + std::to_string(agreed) +
                                        " probes";
    } catch (const undecided_error& e) {
        rep.verdict = Verdict::Undecided;
        rep.witness = e.what();
    }
    return rep;
}

// Companion statement at the additive level: for a positive Dedekind but
// non-additive C, the difference y - x of two straddling realizations of
// the restricted cut must induce the restricted additive kernel on K.
inline LemmaReport check_difference_cut(const TowerFieldPtr& K, const CutSpec& C,
                                        const TowerElem& x, const TowerElem& y,
                                        int fuel = kDefaultFuel) {
    if (!K->subfield_of(*C.field()))
        throw precondition_error("check_difference_cut: K is not a subfield of the cut's field");
    LemmaReport rep{"difference-cut",
                    C.str() + " over " + K->name() + ", x = " + x.str() + ", y = " + y.str(),
                    Verdict::Inapplicable, ""};
    try {
        if (!is_positive(C, fuel) || !is_dedekind(C, fuel)) {
            rep.witness = "cut is not positive Dedekind";
            return rep;
        }
        if (is_additive(C, fuel)) {
            rep.witness = "cut is additive; the additive kernel degenerates";
            return rep;
        }
        if (side(C, x, fuel) != CutSide::Left || side(C, y, fuel) != CutSide::Right) {
            rep.witness = "x, y do not straddle the cut";
            return rep;
        }
        CutSpec Cp = restrict_to(C, K);
        long checked = 0;
        if (!verifydetail::spot_realizes(Cp, x, fuel, checked) ||
            !verifydetail::spot_realizes(Cp, y, fuel, checked)) {
            rep.witness = "a realization does not induce the restricted cut";
            return rep;
        }
        CutSpec D1 = derive_add(Cp, fuel);
        CutSpec D2 = restrict_to(derive_add(C, fuel), K);
        if (!is_additive(D2, fuel)) {
            rep.witness = "derived kernel is not additive";
            return rep;
        }
        std::string split;
        if (!verifydetail::probes_agree(D1, D2, fuel, &split)) {
            rep.witness = "kernel restriction hypothesis splits at " + split;
            return rep;
        }
        if (!x.is_frag() || !y.is_frag()) {
            rep.witness = "difference of the realizations is not representable";
            return rep;
        }
        std::size_t nd = std::max(x.ngens(), y.ngens());
        FragElem d = y.frag().promoted(nd) - x.frag().promoted(nd);
        long agreed = 0;
        for (const FragElem& k : verifydetail::probe_grid(*K)) {
            try {
                TowerElem kE(K, k);
                bool left = side(D2, kE, fuel) == CutSide::Left;
                Ord o = cmp(kE, TowerElem(C.field(), d), fuel);
                if (left != (o == Ord::LT)) {
                    rep.verdict = Verdict::Fail;
                    rep.witness = "y-x = " + d.str() + " splits from the kernel cut at " + k.str();
                    return rep;
                }
                ++agreed;
            } catch (const undecided_error&) {
            }
        }
        rep.verdict = Verdict::Pass;
        rep.witness = agreed == 0 ? "vacuous: no probe decided"
                                  : "y-x = " + d.str() + " agreed on " + std::to_string(agreed) +
                                        " probes";
    } catch (const undecided_error& e) {
        rep.verdict = Verdict::Undecided;
        rep.witness = e.what();
    }
    return rep;
}

enum class Mode { Constant, Increasing, Decreasing };

inline std::string to_string(Mode m) {
    switch (m) {
        case Mode::Constant: return "constant";
        case Mode::Increasing: return "increasing";
        case Mode::Decreasing: return "decreasing";
    }
    return "";
}

struct MonoPiece {
    TowerElem lo, hi;
    Mode mode;
};

namespace verifydetail {

// a point strictly between two breakpoints, reading isolated algebraic
// endpoints through their certifying brackets
inline FragElem point_between(const TowerElem& a, const TowerElem& b) {
    FragElem ra = a.is_frag() ? a.frag() : a.alg().hi();
    FragElem rb = b.is_frag() ? b.frag() : b.alg().lo();
    std::size_t n = std::max(ra.ngens(), rb.ngens());
    return (ra.promoted(n) + rb.promoted(n)) / FragElem(2);
}

}  // namespace verifydetail

// Split (lo, hi) at the critical points and poles of num/den into maximal
// pieces of constant monotonicity, each labelled by the sign of the
// derivative numerator at an interior sample.
inline std::vector<MonoPiece> piecewise_monotone_decompose(const TowerFieldPtr& K,
                                                           const Poly<FragElem>& num,
                                                           const Poly<FragElem>& den,
                                                           const FragElem& lo, const FragElem& hi,
                                                           int fuel = kDefaultFuel) {
    if (den.zero()) throw precondition_error("piecewise_monotone_decompose: zero denominator");
    if (!(lo < hi)) throw precondition_error("piecewise_monotone_decompose: empty interval");
    Poly<FragElem> N = num.derivative() * den - num * den.derivative();

    TowerElem loE(K, lo), hiE(K, hi);
    std::vector<TowerElem> brk;
    auto collect = [&](const Poly<FragElem>& p) {
        if (p.zero() || p.degree() < 1) return;
        for (const TowerElem& r : root_isolate_over(K, p, fuel))
            if (cmp(r, loE, fuel) == Ord::GT && cmp(r, hiE, fuel) == Ord::LT) brk.push_back(r);
    };
    collect(N);
    collect(den);
    std::sort(brk.begin(), brk.end(),
              [&](const TowerElem& a, const TowerElem& b) { return cmp(a, b, fuel) == Ord::LT; });
    brk.erase(std::unique(brk.begin(), brk.end(),
                          [&](const TowerElem& a, const TowerElem& b) {
                              return cmp(a, b, fuel) == Ord::EQ;
                          }),
              brk.end());

    std::vector<TowerElem> pts;
    pts.push_back(loE);
    for (auto& r : brk) pts.push_back(r);
    pts.push_back(hiE);

    std::vector<MonoPiece> out;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Mode m = Mode::Constant;
        if (!N.zero()) {
            FragElem s = verifydetail::point_between(pts[i], pts[i + 1]);
            FragElem v = N.eval(s);
            // a sample landing exactly on a root slides toward the left end
            for (int tries = 0; v.zero() && tries < 4; ++tries) {
                FragElem la = pts[i].is_frag() ? pts[i].frag() : pts[i].alg().hi();
                s = (la.promoted(s.ngens()) + s) / FragElem(2);
                v = N.eval(s);
            }
            if (v.sign() > 0) m = Mode::Increasing;
            else if (v.sign() < 0) m = Mode::Decreasing;
        }
        out.push_back({pts[i], pts[i + 1], m});
    }
    return out;
}

// Two realizations of a cut with vanishing gap widths must agree up to a
// difference below every positive base element. Decided exactly from the
// leading term of x - y.
inline LemmaReport check_scott_gap(const CutSpec& C, const TowerElem& x, const TowerElem& y,
                                   int fuel = kDefaultFuel) {
    const TowerFieldPtr& K = C.field();
    LemmaReport rep{"scott-gap", C.str() + ", x = " + x.str() + ", y = " + y.str(),
                    Verdict::Undecided, ""};
    try {
        if (!is_scott(C, fuel)) {
            rep.verdict = Verdict::Inapplicable;
            rep.witness = "gap widths do not vanish";
            return rep;
        }
        auto d = verifydetail::diff_leading(x, y, fuel);
        if (d.state == 0) {
            rep.verdict = Verdict::Pass;
            rep.witness = "identical realizations";
            return rep;
        }
        if (d.state == 2) {
            rep.witness = "difference not resolved within fuel";
            return rep;
        }
        int j = cutdetail::top_coord(d.val);
        if (j > cutdetail::top_kgen(*K) && sgn(d.val[j]) > 0) {
            rep.verdict = Verdict::Pass;
            rep.witness = "val(x-y) = " + d.val.str() + " is below every positive base element";
            return rep;
        }
        // build a concrete base element at or below |x - y|
        std::size_t n = K->ambient_gens();
        ExpVec v(n);
        for (std::size_t c = 0; c < d.val.size() && c < n; ++c) v[c] = d.val[c];
        RealAlg labs = d.lead.sign() < 0 ? -d.lead : d.lead;
        if (v.supported_on(K->gens())) {
            Rat q(1);
            while (ra_cmp(RealAlg(q), labs) == Ord::GT) q /= 2;
            FragElem r = cutdetail::monomial_frag(n, v) * FragElem(q);
            rep.verdict = Verdict::Fail;
            rep.witness = "counterexample r = " + r.str();
            return rep;
        }
        for (const FragElem& w : cutdetail::kernel_candidates(*K)) {
            if (w.zero() || w.sign() <= 0) continue;
            if (ev_cmp(w.val(), v) > 0) {  // strictly smaller scale than the difference
                rep.verdict = Verdict::Fail;
                rep.witness = "counterexample r = " + w.str();
                return rep;
            }
        }
        rep.witness = "difference exceeds the gap but no grid counterexample found";
    } catch (const undecided_error& e) {
        rep.verdict = Verdict::Undecided;
        rep.witness = e.what();
    }
    return rep;
}

// One cut per proper asymmetry class over K, plus the symmetric gap for
// contrast: (1,w), (w,1), (w,0), (0,w) and the archimedean (w,w) cut.
// Needs at least one infinitesimal generator: over the real-closed
// rationals the archimedean gap is filled.
inline std::vector<std::pair<CofinalityTag, CutSpec>> build_asymmetric_examples(
    const TowerFieldPtr& K) {
    std::vector<int> gens = K->gens();
    if (gens.empty())
        throw precondition_error(
            "build_asymmetric_examples: base field has no infinitesimal generators");
    int g = *std::min_element(gens.begin(), gens.end());
    std::size_t n = K->ambient_gens();
    std::size_t gu = static_cast<std::size_t>(g);
    FragElem tg = FragElem::generator(n, gu);

    std::vector<std::pair<CofinalityTag, CutSpec>> out;
    out.emplace_back(CofinalityTag{Cof::One, Cof::Omega}, CutSpec::above_point(K, tg));
    out.emplace_back(CofinalityTag{Cof::Omega, Cof::One}, CutSpec::below_point(K, tg));
    out.emplace_back(CofinalityTag{Cof::Omega, Cof::Zero}, CutSpec::plus_infinity(K));
    out.emplace_back(CofinalityTag{Cof::Zero, Cof::Omega}, CutSpec::minus_infinity(K));
    CutSeq arch;
    arch.lower = [](long i) { return FragElem(Rat(i + 1)); };
    arch.upper = [n, gu](long i) { return FragElem::generator(n, gu, Rat(-1, i + 1)); };
    arch.lower_label = "n";
    arch.upper_label = "t" + std::to_string(g + 1) + "^(-1/n)";
    out.emplace_back(CofinalityTag{Cof::Omega, Cof::Omega},
                     CutSpec::seq_generated(K, std::move(arch)));
    return out;
}

}  // namespace cutforge
