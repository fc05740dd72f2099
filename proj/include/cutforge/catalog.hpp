#ifndef CUTFORGE_CATALOG_HPP
#define CUTFORGE_CATALOG_HPP

#include <string>
#include <utility>
#include <vector>

#include "cutforge/cuts.hpp"

namespace cutforge {

// Full predicate vector of a cut. `scott` is false rather than undefined
// for non-Dedekind cuts, so the vector is total.
struct Classification {
    CofinalityTag tag;
    bool dedekind = false;
    bool positive = false;
    bool scott = false;
    bool additive = false;
    bool multiplicative = false;

    friend bool operator==(const Classification& a, const Classification& b) {
        return a.tag == b.tag && a.dedekind == b.dedekind && a.positive == b.positive &&
               a.scott == b.scott && a.additive == b.additive &&
               a.multiplicative == b.multiplicative;
    }
    friend bool operator!=(const Classification& a, const Classification& b) { return !(a == b); }

    std::string str() const {
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        return "tag " + tag.str() + ", dedekind " + yn(dedekind) + ", positive " + yn(positive) +
               ", scott " + yn(scott) + ", additive " + yn(additive) + ", multiplicative " +
               yn(multiplicative);
    }
};

inline Classification classify(const CutSpec& C, int fuel = kDefaultFuel) {
    Classification r;
    r.tag = cofinality(C, fuel);
    r.dedekind = is_dedekind(C, fuel);
    r.positive = is_positive(C, fuel);
    r.scott = r.dedekind && is_scott(C, fuel);
    r.additive = is_additive(C, fuel);
    r.multiplicative = is_multiplicative(C, fuel);
    return r;
}

// A named cut together with its expected classification. The expected
// vectors below were worked out by hand from the sequence definitions and
// cross-checked against a bounded-height membership scan; the test suite
// re-derives each one through classify().
struct CatalogEntry {
    std::string name;
    CutSpec cut;
    Classification expected;
};

namespace catalog {

namespace detail {

inline FragElem gen(std::size_t n, std::size_t i, const Rat& p = Rat(1)) {
    return FragElem::generator(n, i, p);
}
inline FragElem cst(std::size_t n, const Rat& v) { return FragElem(v).promoted(n); }

}  // namespace detail

// Bounded vs unbounded over a field with at least t1: lower n, upper
// t1^(-1/n).
inline CutSpec arch_cut(const TowerFieldPtr& K) {
    std::size_t n = K->ambient_gens();
    CutSeq s;
    s.lower = [n](long i) { return detail::cst(n, Rat(i + 1)); };
    s.upper = [n](long i) { return detail::gen(n, 0, Rat(-1, i + 1)); };
    s.lower_label = "n";
    s.upper_label = "t1^(-1/n)";
    return CutSpec::seq_generated(K, std::move(s));
}

// Partial sums of t1^(1-1/m): the gap widths stay pinned near the t1
// scale, so the cut is Dedekind but neither Scott nor additive.
inline CutSpec psum_cut(const TowerFieldPtr& K) {
    std::size_t n = K->ambient_gens();
    auto lower = [n](long i) {
        Puiseux p(n);
        for (long m = 2; m <= i + 2; ++m) {
            ExpVec e(n);
            e[0] = Rat(1) - Rat(1, m);
            p = p + Puiseux::monomial(n, RealAlg(1), e);
        }
        return FragElem(p);
    };
    CutSeq s;
    s.lower = lower;
    s.upper = [n, lower](long i) {
        return lower(i) + detail::cst(n, 2) * detail::gen(n, 0, Rat(1) - Rat(1, i + 2));
    };
    s.lower_label = "sum(m<=n, t1^(1-1/m))";
    s.upper_label = "lower + 2*t1^(1-1/n)";
    return CutSpec::seq_generated(K, std::move(s));
}

// Partial sums of the lacunary series sum t1^(2^m): the gap after the n-th
// sum is ~ t1^(2^(n+1)), which falls below every fixed t1 power.
inline CutSpec lacunary_cut(const TowerFieldPtr& K) {
    std::size_t n = K->ambient_gens();
    auto lower = [n](long i) {
        Puiseux p(n);
        Rat e(2);
        for (long m = 0; m <= i; ++m) {
            ExpVec v(n);
            v[0] = e;
            p = p + Puiseux::monomial(n, RealAlg(1), v);
            e = e * Rat(2);
        }
        return FragElem(p);
    };
    CutSeq s;
    s.lower = lower;
    s.upper = [n, lower](long i) {
        Rat e(2);
        for (long m = 0; m <= i; ++m) e = e * Rat(2);
        return lower(i) + detail::cst(n, 2) * detail::gen(n, 0, e);
    };
    s.lower_label = "sum(m<=n, t1^(2^m))";
    s.upper_label = "lower + 2*t1^(2^(n+1))";
    return CutSpec::seq_generated(K, std::move(s));
}

// The cut just below the t1 scale: lower n*t1, upper 2*t1^(1-1/n).
// Additive (doubling stays under the scale) but 2 sits on the right.
inline CutSpec below_t1_cut(const TowerFieldPtr& K) {
    std::size_t n = K->ambient_gens();
    CutSeq s;
    s.lower = [n](long i) { return detail::cst(n, Rat(i + 1)) * detail::gen(n, 0); };
    s.upper = [n](long i) { return detail::cst(n, 2) * detail::gen(n, 0, Rat(1) - Rat(1, i + 2)); };
    s.lower_label = "n*t1";
    s.upper_label = "2*t1^(1-1/n)";
    return CutSpec::seq_generated(K, std::move(s));
}

// Boundary just below the 1/t1 scale: lower t1^(-(1-1/m)), upper
// t1^(-1)/m. Additive since no field element separates the two scale
// families; not multiplicative since squaring a lower term escapes.
inline CutSpec inv_scale_cut(const TowerFieldPtr& K) {
    std::size_t n = K->ambient_gens();
    CutSeq s;
    s.lower = [n](long i) { return detail::gen(n, 0, Rat(-(i + 1), i + 2)); };
    s.upper = [n](long i) { return detail::gen(n, 0, Rat(-1)) / detail::cst(n, Rat(i + 1)); };
    s.lower_label = "t1^(-(1-1/m))";
    s.upper_label = "t1^(-1)/m";
    return CutSpec::seq_generated(K, std::move(s));
}

// t2 plus an offset pinned between the m*t1*t2 and t1^(1-1/m)*t2 scales:
// positive Dedekind, but doubling the t2 part escapes, so not additive.
inline CutSpec offset_scale_cut(const TowerFieldPtr& K) {
    std::size_t n = K->ambient_gens();
    CutSeq s;
    s.lower = [n](long i) {
        return detail::gen(n, 1) + detail::cst(n, Rat(i + 1)) * detail::gen(n, 0) * detail::gen(n, 1);
    };
    s.upper = [n](long i) {
        return detail::gen(n, 1) + detail::gen(n, 0, Rat(i + 1, i + 2)) * detail::gen(n, 1);
    };
    s.lower_label = "t2 + m*t1*t2";
    s.upper_label = "t2 + t1^(1-1/m)*t2";
    return CutSpec::seq_generated(K, std::move(s));
}

// The lacunary series as a single stream element; fresh shared state per
// call, so two calls yield distinct (if equal) realizations.
inline StreamElem lacunary_stream(std::size_t n) {
    return StreamElem(n,
                      [n](std::size_t i) -> std::optional<std::pair<ExpVec, RealAlg>> {
                          Rat e(2);
                          for (std::size_t m = 0; m < i; ++m) e = e * Rat(2);
                          ExpVec v(n);
                          v[0] = e;
                          return std::make_pair(v, RealAlg(1));
                      },
                      "sum(m, t1^(2^m))");
}

// The standard catalog: cuts over Q_rc, Q_rc(t1) and Q_rc(t1,t2) in an
// ambient tower of n >= 3 generators, each with its expected vector.
inline std::vector<CatalogEntry> standard_catalog(std::size_t n = 3) {
    if (n < 3) throw precondition_error("standard_catalog: need at least 3 ambient generators");
    auto Q = TowerField::rationals_rc(n);
    auto F1 = TowerField::with_gens(n, {0});
    auto L12 = TowerField::with_gens(n, {0, 1});
    auto W = [](Cof l, Cof r) { return CofinalityTag{l, r}; };
    const Cof z = Cof::Zero, o = Cof::One, w = Cof::Omega;

    std::vector<CatalogEntry> out;
    auto add = [&out](std::string name, CutSpec c, CofinalityTag tag, bool ded, bool pos,
                      bool scott, bool addv, bool mlt) {
        out.push_back({std::move(name), std::move(c), {tag, ded, pos, scott, addv, mlt}});
    };

    // over Q_rc
    add("q-plus-infinity", CutSpec::plus_infinity(Q), W(w, z), false, true, false, true, true);
    add("q-minus-infinity", CutSpec::minus_infinity(Q), W(z, w), false, false, false, false, false);
    add("q-above-zero", CutSpec::above_point(Q, FragElem(0).promoted(n)), W(o, w), false, false,
        false, false, false);
    // t1 is positive but below every positive rational: the left side is
    // the nonpositive half, with greatest element 0
    add("q-cut-of-t1", CutSpec::element_induced(Q, TowerElem(Q, detail::gen(n, 0))), W(o, w),
        false, false, false, false, false);
    // 1/t1 exceeds every rational: the upper class is empty
    add("q-cut-of-inv-t1",
        CutSpec::element_induced(Q, TowerElem(Q, detail::gen(n, 0, Rat(-1)))), W(w, z), false,
        true, false, true, true);

    // over Q_rc(t1)
    add("f1-archimedean", arch_cut(F1), W(w, w), true, true, false, true, true);
    add("f1-psum", psum_cut(F1), W(w, w), true, true, false, false, false);
    // its additive kernel: the cut just below the t1 scale
    add("f1-psum-add-kernel", derive_add(psum_cut(F1)), W(w, w), true, true, false, true, false);
    // its multiplicative kernel: bounded ratios collapse to the
    // archimedean cut
    add("f1-psum-mlt-kernel", derive_mlt(psum_cut(F1)), W(w, w), true, true, false, true, true);
    add("f1-lacunary", lacunary_cut(F1), W(w, w), true, true, true, false, false);
    add("f1-below-t1", below_t1_cut(F1), W(w, w), true, true, false, true, false);
    // the same series as one stream witness
    add("f1-lacunary-stream",
        CutSpec::element_induced(F1, TowerElem(F1, lacunary_stream(n))), W(w, w), true, true,
        true, false, false);
    // t2 is below every positive element of Q_rc(t1)
    add("f1-cut-of-t2", CutSpec::element_induced(F1, TowerElem(F1, detail::gen(n, 1))), W(o, w),
        false, false, false, false, false);

    // over Q_rc(t1,t2)
    add("l12-inv-scale", inv_scale_cut(L12), W(w, w), true, true, false, true, false);
    add("l12-offset-scale", offset_scale_cut(L12), W(w, w), true, true, false, false, false);
    add("l12-below-t1-point", CutSpec::below_point(L12, detail::gen(n, 0)), W(w, o), false, true,
        false, false, false);
    add("l12-cut-of-t3", CutSpec::element_induced(L12, TowerElem(L12, detail::gen(n, 2))),
        W(o, w), false, false, false, false, false);

    return out;
}

inline const CatalogEntry& find(const std::vector<CatalogEntry>& cat, const std::string& name) {
    for (const CatalogEntry& e : cat)
        if (e.name == name) return e;
    throw precondition_error("catalog: no entry named " + name);
}

}  // namespace catalog

}  // namespace cutforge

#endif
