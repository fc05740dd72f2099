#ifndef CUTFORGE_INDEPENDENCE_HPP
#define CUTFORGE_INDEPENDENCE_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cutforge/cuts.hpp"

namespace cutforge {

// Knobs for the bounded-height realization searches. Every negative answer
// ("no element of L fills this cut") is relative to these bounds; they are
// carried into reports so the search is reproducible.
struct SearchBounds {
    long degree = 6;        // |numerator| of candidate exponents
    long height = 12;       // |candidate coefficients|
    long ramification = 4;  // denominator of candidate exponents
};

// A finite family of cuts over a common base field, optionally paired with
// realizations living in the ambient field (one per cut, same order).
struct CutFamily {
    TowerFieldPtr K;
    std::vector<CutSpec> cuts;
    std::vector<TowerElem> realizations;

    void add(CutSpec c) { cuts.push_back(std::move(c)); }
    void add(CutSpec c, TowerElem a) {
        cuts.push_back(std::move(c));
        realizations.push_back(std::move(a));
    }
    std::size_t size() const { return cuts.size(); }
};

// A swap-closed set of cofinality tags: admitting (x,y) admits (y,x).
struct ThetaSet {
    ThetaSet() = default;
    ThetaSet(std::initializer_list<CofinalityTag> ts) {
        for (const auto& t : ts) insert(t);
    }
    void insert(const CofinalityTag& t) {
        if (!contains(t)) tags_.push_back(t);
        CofinalityTag sw{t.right, t.left};
        if (!contains(sw)) tags_.push_back(sw);
    }
    bool contains(const CofinalityTag& t) const {
        for (const auto& x : tags_)
            if (x == t) return true;
        return false;
    }
    const std::vector<CofinalityTag>& tags() const { return tags_; }

  private:
    std::vector<CofinalityTag> tags_;
};

enum class HullFilter { Symmetric, Theta, All };

// Outcome of are_dependent. The certificate, when present, is a vanishing
// polynomial combination of the realizations: sum of c * f1^e1 * ... * fm^em
// over the listed (exponent tuple, coefficient) pairs.
struct DependenceResult {
    bool dependent = false;
    std::vector<std::pair<std::vector<long>, RealAlg>> certificate;
};

struct HullResult {
    TowerFieldPtr base;
    TowerFieldPtr L;
    std::vector<std::size_t> chosen;      // indices into the input family
    std::vector<TowerElem> realizations;  // of the chosen cuts
    std::vector<std::size_t> realized;    // family indices filled by some element of L
    SearchBounds bounds;
    long candidates_examined = 0;  // negative-search certificate for `realized`
};

namespace inddetail {

inline const FragElem& as_frag(const TowerElem& a) {
    if (a.is_stream())
        throw unsupported_stream_op("algebraic dependence over stream realizations");
    if (!a.is_frag())
        throw precondition_error("dependence queries need fragment realizations");
    return a.frag();
}

// Rank by Gaussian elimination over the fragment field; exact.
inline std::size_t frag_rank(std::vector<std::vector<FragElem>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c].zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c].zero()) continue;
            FragElem f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

// One nontrivial kernel vector of the column space, or empty if the columns
// are linearly independent. Exact elimination over the coefficient field.
inline std::vector<RealAlg> nullspace_vector(std::vector<std::vector<RealAlg>> m,
                                             std::size_t cols) {
    std::vector<long> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && is_zero(m[piv][c])) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || is_zero(m[r][c])) continue;
            RealAlg f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
        }
        pivot_of_col[c] = static_cast<long>(rank);
        ++rank;
    }
    long free_col = -1;
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] < 0) {
            free_col = static_cast<long>(c);
            break;
        }
    if (free_col < 0) return {};
    std::vector<RealAlg> v(cols, RealAlg(0));
    v[free_col] = RealAlg(1);
    for (std::size_t c = 0; c < cols; ++c) {
        long r = pivot_of_col[c];
        if (r < 0) continue;
        v[c] = -(m[r][free_col] / m[r][c]);
    }
    return v;
}

// Exponent tuples in m variables of total degree <= d, constant included.
inline std::vector<std::vector<long>> degree_tuples(std::size_t m, long d) {
    std::vector<std::vector<long>> out{std::vector<long>(m, 0)};
    for (std::size_t done = 0; done < out.size(); ++done) {
        std::vector<long> cur = out[done];
        long total = 0;
        for (long e : cur) total += e;
        if (total >= d) continue;
        // extend only in the last touched coordinate or later, for uniqueness
        std::size_t start = 0;
        for (std::size_t i = m; i-- > 0;)
            if (cur[i] > 0) {
                start = i;
                break;
            }
        for (std::size_t i = start; i < m; ++i) {
            std::vector<long> nxt = cur;
            nxt[i] += 1;
            out.push_back(std::move(nxt));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Is there a K-supported vector strictly lex-greater than c on coordinates
// below j? Needed when a candidate separating valuation is pinned to 0 at a
// foreign coordinate and the decision moves to the less significant ones.
inline bool kvec_strictly_above(const ExpVec& c, std::size_t j, const TowerField& K) {
    for (std::size_t i = j; i-- > 0;) {
        if (K.has_gen(static_cast<int>(i))) return true;  // bump this coordinate
        if (sgn(c[i]) < 0) return true;                    // 0 beats c here
        if (sgn(c[i]) > 0) return false;                   // 0 loses and cannot match
    }
    return false;  // only the zero vector remains, which is not strict
}

inline bool kvec_strictly_below(const ExpVec& c, std::size_t j, const TowerField& K) {
    for (std::size_t i = j; i-- > 0;) {
        if (K.has_gen(static_cast<int>(i))) return true;
        if (sgn(c[i]) > 0) return true;
        if (sgn(c[i]) < 0) return false;
    }
    return false;
}

// Does some valuation of K lie strictly between a and b (value-group order)?
// Scanning from the most significant coordinate: the candidate must copy the
// common prefix (so foreign nonzero entries there kill it), and at the first
// difference either the coordinate belongs to K (pick an interior rational)
// or the candidate is forced to 0 there and the usual lex case split applies.
inline bool kval_between(const ExpVec& a0, const ExpVec& b0, const TowerField& K) {
    const ExpVec& a = ev_cmp(a0, b0) < 0 ? a0 : b0;
    const ExpVec& b = ev_cmp(a0, b0) < 0 ? b0 : a0;
    if (a == b) return false;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == b[i]) {
            if (!is_zero(a[i]) && !K.has_gen(static_cast<int>(i))) return false;
            continue;
        }
        if (K.has_gen(static_cast<int>(i))) return true;  // interior rational exists
        if (sgn(a[i]) < 0 && sgn(b[i]) > 0) return true;  // 0 is strictly inside
        if (is_zero(a[i])) return kvec_strictly_above(a, i, K);
        if (is_zero(b[i])) return kvec_strictly_below(b, i, K);
        return false;  // forced 0 falls outside (a_i, b_i)
    }
    return false;
}

// True when d is below every positive element of K: its leading scale sits
// at a generator deeper than all of K's.
inline bool k_infinitesimal(const FragElem& d, const TowerField& K) {
    if (d.zero()) return false;
    FragElem a = d.promoted(K.ambient_gens());
    ExpVec v = a.val();
    int j = cutdetail::top_coord(v);
    return j > cutdetail::top_kgen(K) && sgn(v[j]) > 0;
}

// Do x and the witness of C induce the same cut on K? Decided exactly from
// the peeling analyses: beyond-K elements on the same side always agree;
// elements next to an extreme K point agree iff the matched part and the
// side of approach agree (two K-infinitesimal offsets bound no K element);
// interleaved remainders agree iff they share the matched part and sign and
// no K valuation separates their foreign leading scales (the separating
// monomial would be a K element strictly between the two witnesses).
inline bool same_cut(const FragElem& x, const TowerElem& w, const TowerField& K, int fuel) {
    auto ix = cutdetail::analyze_frag(x, K, fuel);
    auto iw = cutdetail::analyze_element(w, K, fuel);
    if (ix.tag != iw.tag) return false;
    if (ix.tag.left == Cof::Zero || ix.tag.right == Cof::Zero) return true;
    if (ix.limit || iw.limit)
        throw undecided_error(fuel, "cut comparison against an unresolved stream prefix");
    if (ix.b_k != iw.b_k) return false;
    if (!ix.tag.symmetric()) return true;  // extreme-point case: tag fixes the side
    return ix.have_delta && iw.have_delta && ix.delta_sign == iw.delta_sign &&
           !kval_between(ix.delta_val, iw.delta_val, K);
}

// Does x (an ambient fragment) fill the cut C of K — every K element left
// of C below x, every one right of C above it? Endpoint and element kinds
// are decided exactly; sequence kinds are checked against the first `fuel`
// generators.
inline bool realizes(const CutSpec& C, const FragElem& x, int fuel = kDefaultFuel) {
    const TowerField& K = *C.field();
    std::size_t n = std::max<std::size_t>(x.ngens(), K.ambient_gens());
    FragElem xa = x.promoted(n);
    if (K.contains(xa)) return false;  // a field never fills its own cuts
    switch (C.kind()) {
        case CutSpec::Kind::AbovePoint: {
            FragElem d = xa - C.point().promoted(n);
            return d.sign() > 0 && k_infinitesimal(d, K);
        }
        case CutSpec::Kind::BelowPoint: {
            FragElem d = C.point().promoted(n) - xa;
            return d.sign() > 0 && k_infinitesimal(d, K);
        }
        case CutSpec::Kind::PlusInfinity: {
            auto info = cutdetail::analyze_frag(xa, K, fuel);
            return info.tag.left == Cof::Omega && info.tag.right == Cof::Zero;
        }
        case CutSpec::Kind::MinusInfinity: {
            auto info = cutdetail::analyze_frag(xa, K, fuel);
            return info.tag.left == Cof::Zero && info.tag.right == Cof::Omega;
        }
        case CutSpec::Kind::ElementInduced: return same_cut(xa, C.witness(), K, fuel);
        case CutSpec::Kind::SeqGenerated:
            for (long i = 0; i < fuel; ++i) {
                if ((xa - C.seq().lower(i).promoted(n)).sign() <= 0) return false;
                if ((C.seq().upper(i).promoted(n) - xa).sign() <= 0) return false;
            }
            return true;
    }
    return false;
}

// Bounded-height candidate pool for "is C realized in L": monomials in L's
// generators foreign to K, foreign-times-K mixed monomials, and for point
// cuts the point nudged by each foreign monomial.
inline std::vector<FragElem> realization_candidates(const TowerField& L, const TowerField& K,
                                                    const CutSpec& C, const SearchBounds& b) {
    std::size_t n = L.ambient_gens();
    std::vector<Rat> exps;
    for (long p = -b.degree; p <= b.degree; ++p) {
        if (p == 0) continue;
        for (long r = 1; r <= b.ramification; ++r) exps.push_back(rat(p, r));
    }
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());

    std::vector<Rat> coeffs;
    for (long c = 1; c <= b.height; ++c) {
        coeffs.push_back(Rat(c));
        coeffs.push_back(Rat(-c));
    }
    coeffs.push_back(rat(1, 2));
    coeffs.push_back(rat(-1, 2));

    std::vector<int> foreign;
    for (int g : L.gens())
        if (!K.has_gen(g)) foreign.push_back(g);

    std::vector<FragElem> out;
    for (int g : foreign)
        for (const Rat& q : exps)
            for (const Rat& c : coeffs)
                out.push_back(FragElem::monomial(n, RealAlg(c), ExpVec::unit(n, g, q)));

    for (int g : foreign)
        for (int h : L.gens()) {
            if (h == g) continue;
            for (const Rat& q : exps)
                for (long p = -b.degree; p <= b.degree; ++p) {
                    if (p == 0) continue;
                    ExpVec e = ExpVec::unit(n, g, q) + ExpVec::unit(n, h, Rat(p));
                    out.push_back(FragElem::monomial(n, RealAlg(1), e));
                    out.push_back(FragElem::monomial(n, RealAlg(-1), e));
                }
        }

    if (C.kind() == CutSpec::Kind::AbovePoint || C.kind() == CutSpec::Kind::BelowPoint) {
        FragElem a = C.point().promoted(n);
        std::size_t plain = out.size();
        for (std::size_t i = 0; i < plain; ++i) out.push_back(a + out[i]);
    }
    return out;
}

}  // namespace inddetail

// Algebraic dependence over K of elements of the ambient field, by the
// Jacobian criterion in the generators K does not contain. On a dependent
// answer, a certificate is searched for by linear elimination over the
// monomials in the realizations of total degree <= cert_degree.
inline DependenceResult are_dependent(const TowerFieldPtr& K,
                                      const std::vector<TowerElem>& realizations,
                                      long cert_degree = 4) {
    DependenceResult res;
    if (realizations.empty()) return res;
    std::size_t n = K->ambient_gens();
    std::vector<FragElem> f;
    for (const auto& a : realizations) {
        f.push_back(inddetail::as_frag(a).promoted(n));
        if (K->contains(f.back()))
            throw precondition_error("dependence: realization lies in the base field");
    }
    std::vector<int> ext = K->external_gens();
    std::vector<std::vector<FragElem>> jac(f.size(), std::vector<FragElem>(ext.size()));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < ext.size(); ++j)
            jac[i][j] = f[i].derivative(static_cast<std::size_t>(ext[j]));
    res.dependent = inddetail::frag_rank(std::move(jac)) < f.size();
    if (!res.dependent) return res;

    // bounded-degree elimination: clear denominators, then solve for a
    // rational-coefficient kernel of the monomial substitution map
    auto tuples = inddetail::degree_tuples(f.size(), cert_degree);
    std::vector<FragElem> subst;
    for (const auto& t : tuples) {
        FragElem p(1);
        p = p.promoted(n);
        for (std::size_t i = 0; i < f.size(); ++i)
            if (t[i] > 0) p = p * f[i].pow(t[i]);
        subst.push_back(p);
    }
    std::size_t T = subst.size();
    std::vector<Puiseux> prefix(T + 1, Puiseux(n, RealAlg(1))), suffix(T + 1, Puiseux(n, RealAlg(1)));
    for (std::size_t k = 0; k < T; ++k) prefix[k + 1] = prefix[k] * subst[k].den();
    for (std::size_t k = T; k-- > 0;) suffix[k] = suffix[k + 1] * subst[k].den();
    std::vector<Puiseux> cleared;
    for (std::size_t k = 0; k < T; ++k) cleared.push_back(subst[k].num() * (prefix[k] * suffix[k + 1]));
    std::vector<ExpVec> support;
    for (const auto& q : cleared)
        for (const auto& [e, c] : q.terms()) {
            (void)c;
            if (std::find(support.begin(), support.end(), e) == support.end())
                support.push_back(e);
        }
    std::vector<std::vector<RealAlg>> mat(support.size(),
                                          std::vector<RealAlg>(cleared.size(), RealAlg(0)));
    for (std::size_t k = 0; k < cleared.size(); ++k)
        for (const auto& [e, c] : cleared[k].terms())
            for (std::size_t r = 0; r < support.size(); ++r)
                if (support[r] == e) mat[r][k] = c;
    auto v = inddetail::nullspace_vector(std::move(mat), cleared.size());
    if (v.empty()) return res;
    FragElem check(0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (is_zero(v[k])) continue;
        res.certificate.emplace_back(tuples[k], v[k]);
        check = check + subst[k] * FragElem(v[k]).promoted(n);
    }
    if (!check.zero()) res.certificate.clear();  // elimination artifact; drop it
    return res;
}

// Extends a cut of K to the unique cut of L >= K with the same description,
// after a bounded-height search confirms no element of L fills it.
inline CutSpec canonical_extension(const CutSpec& C, const TowerFieldPtr& L,
                                   const SearchBounds& bounds = {}, int fuel = kDefaultFuel,
                                   long* examined = nullptr) {
    const TowerFieldPtr& K = C.field();
    if (!K->subfield_of(*L)) throw precondition_error("canonical_extension: L does not contain K");
    if (C.kind() == CutSpec::Kind::ElementInduced && L->contains(C.witness()))
        throw realized_in_field(C.witness().str());
    long count = 0;
    for (const FragElem& cand : inddetail::realization_candidates(*L, *K, C, bounds)) {
        ++count;
        try {
            if (inddetail::realizes(C, cand, fuel)) {
                if (examined) *examined = count;
                throw realized_in_field(cand.str());
            }
        } catch (const undecided_error&) {
        }
    }
    if (examined) *examined = count;
    switch (C.kind()) {
        case CutSpec::Kind::PlusInfinity: return CutSpec::plus_infinity(L);
        case CutSpec::Kind::MinusInfinity: return CutSpec::minus_infinity(L);
        case CutSpec::Kind::AbovePoint: return CutSpec::above_point(L, C.point());
        case CutSpec::Kind::BelowPoint: return CutSpec::below_point(L, C.point());
        case CutSpec::Kind::ElementInduced: return CutSpec::element_induced(L, C.witness());
        case CutSpec::Kind::SeqGenerated: return CutSpec::seq_generated(L, C.seq());
    }
    throw precondition_error("canonical_extension: unknown cut kind");
}

// Greedy maximal subfamily with independent realizations. The subset is
// order-dependent; its size is the matroid rank and is not.
inline CutFamily max_independent(const CutFamily& family) {
    if (family.realizations.size() != family.cuts.size())
        throw precondition_error("max_independent: realizations required for every cut");
    CutFamily out;
    out.K = family.K;
    std::vector<TowerElem> probe;
    for (std::size_t i = 0; i < family.size(); ++i) {
        probe.push_back(family.realizations[i]);
        if (are_dependent(family.K, probe).dependent) {
            probe.pop_back();
            continue;
        }
        out.add(family.cuts[i], family.realizations[i]);
    }
    return out;
}

// One hull step: keep the cuts whose cofinality tag passes the filter,
// extend K by the realizations of a maximal independent subfamily of them,
// and report which family cuts end up filled in the extension (bounded
// search; "and no others" is the caller's check against this report).
inline HullResult one_step_hull(const TowerFieldPtr& K, const CutFamily& family, HullFilter filter,
                                const ThetaSet& theta = {}, const SearchBounds& bounds = {},
                                int fuel = kDefaultFuel) {
    HullResult res;
    res.base = K;
    res.bounds = bounds;
    std::vector<std::size_t> passing;
    for (std::size_t i = 0; i < family.size(); ++i) {
        CofinalityTag tag = cofinality(family.cuts[i], fuel);
        bool pass = filter == HullFilter::All ||
                    (filter == HullFilter::Symmetric && tag.symmetric()) ||
                    (filter == HullFilter::Theta && theta.contains(tag));
        if (pass) passing.push_back(i);
    }
    if (!passing.empty() && family.realizations.size() != family.cuts.size())
        throw precondition_error("one_step_hull: realizations required for the filtered cuts");

    std::vector<TowerElem> probe;
    for (std::size_t i : passing) {
        probe.push_back(family.realizations[i]);
        if (are_dependent(K, probe).dependent) {
            probe.pop_back();
            continue;
        }
        res.chosen.push_back(i);
        res.realizations.push_back(family.realizations[i]);
    }

    std::vector<int> gens = K->gens();
    for (const TowerElem& a : res.realizations) {
        const FragElem& fr = inddetail::as_frag(a);
        for (std::size_t g = 0; g < K->ambient_gens(); ++g)
            if (fr.involves(g) && std::find(gens.begin(), gens.end(), static_cast<int>(g)) == gens.end())
                gens.push_back(static_cast<int>(g));
    }
    std::sort(gens.begin(), gens.end());
    res.L = gens == K->gens() ? K : TowerField::with_gens(K->ambient_gens(), gens);

    for (std::size_t i = 0; i < family.size(); ++i) {
        if (std::find(res.chosen.begin(), res.chosen.end(), i) != res.chosen.end()) {
            res.realized.push_back(i);
            continue;
        }
        bool filled = false;
        if (i < family.realizations.size() && family.realizations[i].is_frag() &&
            res.L->contains(family.realizations[i].frag())) {
            try {
                filled = inddetail::realizes(family.cuts[i], family.realizations[i].frag(), fuel);
            } catch (const undecided_error&) {
            }
        }
        if (!filled) {
            for (const FragElem& cand :
                 inddetail::realization_candidates(*res.L, *K, family.cuts[i], bounds)) {
                ++res.candidates_examined;
                try {
                    if (inddetail::realizes(family.cuts[i], cand, fuel)) {
                        filled = true;
                        break;
                    }
                } catch (const undecided_error&) {
                }
            }
        }
        if (filled) res.realized.push_back(i);
    }
    return res;
}

// Finite hull chain K = K0 <= K1 <= ... built by repeated one_step_hull
// with a per-field cut catalog. The chain stops early when a level's
// catalog contributes no passing cuts.
inline std::vector<HullResult> iterate_hull(
    TowerFieldPtr K, const std::function<CutFamily(const TowerFieldPtr&)>& catalog,
    HullFilter filter, const ThetaSet& theta = {}, int steps = 1, int max_steps = 4,
    const SearchBounds& bounds = {}, int fuel = kDefaultFuel) {
    if (steps < 0 || steps > max_steps)
        throw precondition_error("iterate_hull: step count outside the configured bound");
    std::vector<HullResult> chain;
    for (int s = 0; s < steps; ++s) {
        CutFamily fam = catalog(K);
        HullResult h = one_step_hull(K, fam, filter, theta, bounds, fuel);
        if (h.chosen.empty()) break;  // catalog exhausted at this level
        K = h.L;
        chain.push_back(std::move(h));
    }
    return chain;
}

}  // namespace cutforge

#endif
