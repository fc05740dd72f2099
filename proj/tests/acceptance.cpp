// Acceptance gate: ten end-to-end checks, one line of output each.
// Exit status is the number of failing checks.
//
// Oracles are independent of the code paths they judge: interval
// refinement against symbolic arithmetic, dense grid scans against Sturm
// isolation, hand-derived catalog vectors against the classifiers, and
// monomial-matrix rank against the Jacobian criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cutforge/catalog.hpp"
#include "cutforge/independence.hpp"
#include "cutforge/verify.hpp"

using namespace cutforge;

namespace {

constexpr std::size_t N = 3;

struct Line {
    bool pass;
    std::string detail;
};

FragElem t(std::size_t i, const Rat& p = Rat(1)) { return FragElem::generator(N, i, p); }
FragElem c(const Rat& v) { return FragElem(v).promoted(N); }
TowerElem te(const TowerFieldPtr& K, const FragElem& a) { return TowerElem(K, a); }

Rat pow2_neg(int bits) {
    Rat w(1);
    for (int i = 0; i < bits; ++i) w /= 2;
    return w;
}

bool overlap(const QInterval& a, const QInterval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

// ---------------------------------------------------------------------------
// 1. real algebraic arithmetic vs 500-bit interval refinement

Line realalg_oracle() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> coeff(-50, 50), deg(1, 8);

    std::vector<RealAlg> pool;
    while (pool.size() < 2000) {
        int d = deg(rng);
        std::vector<Rat> cs(static_cast<std::size_t>(d) + 1);
        for (auto& x : cs) x = Rat(coeff(rng));
        if (is_zero(cs.back())) cs.back() = Rat(1);
        for (const RealAlg& r : RealAlg::isolate_roots(Poly<Rat>(cs))) pool.push_back(r);
    }

    const Rat w = pow2_neg(500);
    long ties = 0;
    for (std::size_t i = 0; i + 1 < 2000; i += 2) {
        RealAlg x = pool[i], y = pool[i + 1];
        x.refine_below(w);
        y.refine_below(w);
        QInterval ix = x.interval(), iy = y.interval();
        Ord expect = ix.hi < iy.lo ? Ord::LT : iy.hi < ix.lo ? Ord::GT : Ord::EQ;
        if (ra_cmp(x, y) != expect)
            return {false, "cmp mismatch at pair " + std::to_string(i / 2)};

        RealAlg s = x + y;
        s.refine_below(w);
        if (!overlap(s.interval(), ix + iy))
            return {false, "sum outside oracle interval at pair " + std::to_string(i / 2)};

        RealAlg p = x * y;
        p.refine_below(w);
        if (!overlap(p.interval(), ix * iy))
            return {false, "product outside oracle interval at pair " + std::to_string(i / 2)};

        if (i % 80 == 0) {
            // exact tie: the same root re-isolated from scratch
            RealAlg twin = x.is_rational() ? RealAlg(x.rat_value())
                                           : RealAlg(x.defpoly(), ix.lo, ix.hi);
            if (ra_cmp(x, twin) != Ord::EQ)
                return {false, "tie pair not equal at pair " + std::to_string(i / 2)};
            ++ties;
        }
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (ms >= 60000) return {false, "exceeded 60 s: " + std::to_string(ms) + " ms"};
    return {true, "1000 pairs, " + std::to_string(ties) + " symbolic ties, " +
                      std::to_string(ms) + " ms"};
}

// ---------------------------------------------------------------------------
// 2. root isolation vs dense grid sign scan on [-10, 10], step 1/1024

Line sturm_grid() {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> coeff(-30, 30), deg(1, 10);
    long total_roots = 0;

    for (int trial = 0; trial < 200; ++trial) {
        int d = deg(rng);
        std::vector<Rat> cs(static_cast<std::size_t>(d) + 1);
        for (auto& x : cs) x = Rat(coeff(rng));
        if (is_zero(cs.back())) cs.back() = Rat(1);
        Poly<Rat> p(cs);
        Poly<Rat> q = squarefree_part_rat(p);

        // integer-scaled coefficients of q for exact grid evaluation
        mpz_class lcm = 1;
        for (const Rat& x : q.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                                x.get_den().get_mpz_t());
        std::vector<mpz_class> ic;
        for (const Rat& x : q.coeffs()) ic.push_back(mpz_class(Rat(x * lcm).get_num()));
        long qd = q.degree();
        std::vector<mpz_class> p1024(static_cast<std::size_t>(qd) + 1);
        p1024[0] = 1;
        for (long i = 1; i <= qd; ++i) p1024[static_cast<std::size_t>(i)] =
            p1024[static_cast<std::size_t>(i - 1)] * 1024;

        auto sgn_at = [&](long k) {
            // sign of q(k/1024), scaled by 1024^deg
            mpz_class v = 0;
            for (long i = qd; i >= 0; --i)
                v = v * k + ic[static_cast<std::size_t>(i)] * p1024[static_cast<std::size_t>(qd - i)];
            return sgn(v);
        };

        // grid events: exact zero at a grid point, or a sign flip in a cell
        std::vector<std::pair<Rat, Rat>> events;
        int prev = sgn_at(-10240);
        if (prev == 0) events.emplace_back(Rat(-10), Rat(-10));
        for (long k = -10239; k <= 10240; ++k) {
            int s = sgn_at(k);
            Rat xk = Rat(k, 1024);
            if (s == 0) events.emplace_back(xk, xk);
            else if (prev != 0 && s != prev) events.emplace_back(Rat(k - 1, 1024), xk);
            prev = s;
        }

        std::vector<RealAlg> roots;
        for (const RealAlg& r : RealAlg::isolate_roots(q))
            if (r >= RealAlg(Rat(-10)) && r <= RealAlg(Rat(10))) roots.push_back(r);

        if (roots.size() != events.size())
            return {false, "count mismatch on trial " + std::to_string(trial) + ": " +
                               std::to_string(roots.size()) + " isolated vs " +
                               std::to_string(events.size()) + " grid events"};
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (roots[i] < RealAlg(events[i].first) || roots[i] > RealAlg(events[i].second))
                return {false, "containment mismatch on trial " + std::to_string(trial)};
        }
        total_roots += static_cast<long>(roots.size());
    }
    return {true, "200 polynomials, " + std::to_string(total_roots) + " roots matched"};
}

// ---------------------------------------------------------------------------
// 3. catalog classifications vs hand-derived vectors

Line catalog_golden() {
    auto cat = catalog::standard_catalog(N);
    if (cat.size() < 12) return {false, "catalog has fewer than 12 entries"};
    for (const CatalogEntry& e : cat) {
        Classification got = classify(e.cut);
        if (got != e.expected)
            return {false, e.name + ": expected [" + e.expected.str() + "], got [" + got.str() +
                               "]"};
    }
    // the named worked example: the partial-sum cut and its two kernels
    const CutSpec& psum = catalog::find(cat, "f1-psum").cut;
    if (!(cofinality(psum) == CofinalityTag{Cof::Omega, Cof::Omega} && is_dedekind(psum) &&
          is_positive(psum) && !is_scott(psum) && !is_additive(psum)))
        return {false, "partial-sum cut vector drifted"};
    CutSpec da = derive_add(psum), dm = derive_mlt(psum);
    if (!is_additive(da) || is_multiplicative(da))
        return {false, "additive kernel of the partial-sum cut drifted"};
    if (!is_multiplicative(dm) || !(cofinality(dm) == CofinalityTag{Cof::Omega, Cof::Omega}))
        return {false, "multiplicative kernel of the partial-sum cut drifted"};
    return {true, std::to_string(cat.size()) + " entries match their vectors"};
}

// ---------------------------------------------------------------------------
// 4. derivation chain: scott => symmetric, derive_add additive,
//    derive_mlt multiplicative; also after one canonical extension

Line derivation_chain() {
    long checked = 0;
    auto apply = [&checked](const CutSpec& C) -> std::string {
        Classification c = classify(C);
        if (c.scott && !c.tag.symmetric()) return "scott cut with asymmetric tag: " + C.str();
        if (c.positive && c.dedekind && !c.scott && !is_additive(derive_add(C)))
            return "derive_add not additive for " + C.str();
        if (c.additive && !c.multiplicative && !is_multiplicative(derive_mlt(C)))
            return "derive_mlt not multiplicative for " + C.str();
        ++checked;
        return "";
    };
    for (const CatalogEntry& e : catalog::standard_catalog(N)) {
        std::string err = apply(e.cut);
        if (!err.empty()) return {false, err};

        // canonical extension by the deepest ambient generator
        int g = static_cast<int>(N) - 1;
        if (e.cut.field()->has_gen(g)) continue;
        TowerFieldPtr L = e.cut.field()->extended_by_gen(g);
        CutSpec ext = [&]() -> CutSpec {
            switch (e.cut.kind()) {
                case CutSpec::Kind::PlusInfinity: return CutSpec::plus_infinity(L);
                case CutSpec::Kind::MinusInfinity: return CutSpec::minus_infinity(L);
                case CutSpec::Kind::AbovePoint: return CutSpec::above_point(L, e.cut.point());
                case CutSpec::Kind::BelowPoint: return CutSpec::below_point(L, e.cut.point());
                case CutSpec::Kind::SeqGenerated: return CutSpec::seq_generated(L, e.cut.seq());
                case CutSpec::Kind::ElementInduced: return CutSpec::element_induced(L, e.cut.witness());
            }
            throw std::logic_error("bad kind");
        }();
        // witnesses swallowed by the extension no longer define a cut
        if (ext.kind() == CutSpec::Kind::ElementInduced && ext.witness().is_frag() &&
            L->contains(ext.witness().frag()))
            continue;
        err = apply(ext);
        if (!err.empty()) return {false, err + " (extended)"};
    }
    return {true, std::to_string(checked) + " cuts checked, base and extended"};
}

// ---------------------------------------------------------------------------
// 5. least-power witnesses for realizations of the 1/t1 cut

Line multiplicative_bound() {
    auto Q = TowerField::rationals_rc(N);
    TowerElem x = te(Q, t(0, Rat(-1)));
    CutSpec C = CutSpec::element_induced(Q, x);
    struct Case {
        FragElem y;
        int n;
    };
    std::vector<Case> cases{{t(0, Rat(-2)), 3}, {c(Rat(5)) * t(0, Rat(-1)), 2}, {t(0, Rat(-3, 2)), 2}};
    for (const Case& cs : cases) {
        TowerElem y = te(Q, cs.y);
        LemmaReport rep = check_multiplicative_bound(C, x, y);
        if (rep.verdict != Verdict::Pass || rep.witness != "n = " + std::to_string(cs.n))
            return {false, "expected n = " + std::to_string(cs.n) + " for y = " + cs.y.str() +
                               ", got " + rep.str()};
        for (int k = 2; k < cs.n; ++k)
            if (cmp_with_power(y, x, Rat(1, k)) == Ord::GT && cmp_with_power(y, x, Rat(k)) == Ord::LT)
                return {false, "witness n = " + std::to_string(cs.n) + " not minimal"};
    }
    return {true, "witnesses n = 3, 2, 2 found and minimal"};
}

// ---------------------------------------------------------------------------
// 6. quotient/difference induction on the shipped straddling pairs,
//    30 sample points each, plus one inapplicable fixture

CutSpec inv_scale_cut(const TowerFieldPtr& L) {
    CutSeq s;
    s.lower = [](long i) { return t(0, Rat(-(i + 1), i + 2)); };
    s.upper = [](long i) { return t(0, Rat(-1)) / c(Rat(i + 1)); };
    s.lower_label = "t1^(-(1-1/m))";
    s.upper_label = "t1^(-1)/m";
    return CutSpec::seq_generated(L, std::move(s));
}

CutSpec offset_scale_cut(const TowerFieldPtr& L) {
    CutSeq s;
    s.lower = [](long i) { return t(1) + c(Rat(i + 1)) * t(0) * t(1); };
    s.upper = [](long i) { return t(1) + t(0, Rat(i + 1, i + 2)) * t(1); };
    s.lower_label = "t2 + m*t1*t2";
    s.upper_label = "t2 + t1^(1-1/m)*t2";
    return CutSpec::seq_generated(L, std::move(s));
}

Line sampled_induction() {
    auto K = TowerField::with_gens(N, {1});
    auto L = TowerField::with_gens(N, {0, 1});
    const std::vector<Rat> qs{Rat(-2),    Rat(-1), Rat(-1, 2), Rat(1, 2), Rat(1),
                              Rat(3, 2), Rat(2),  Rat(3),     Rat(4),    Rat(5)};
    const std::vector<Rat> cc{Rat(1), Rat(2), Rat(3)};

    auto sample = [&](const CutSpec& D, const FragElem& target) -> std::string {
        long agreed = 0;
        for (const Rat& cv : cc)
            for (const Rat& q : qs) {
                FragElem k = c(cv) * t(1, q);
                CutSide s = side(D, k);
                Ord o = cmp(te(L, k), te(L, target));
                if ((s == CutSide::Left) != (o == Ord::LT))
                    return "disagreement at probe " + k.str();
                ++agreed;
            }
        return agreed == 30 ? "" : "expected 30 probes, got " + std::to_string(agreed);
    };

    // quotient: straddlers of the boundary below the 1/t1 scale
    CutSpec C1 = inv_scale_cut(L);
    TowerElem x1 = te(L, t(0, Rat(-1, 2))), y1 = te(L, t(0, Rat(-2)));
    LemmaReport r1 = check_quotient_cut(K, C1, x1, y1);
    if (r1.verdict != Verdict::Pass) return {false, "quotient instance: " + r1.str()};
    std::string err = sample(derive_mlt(restrict_to(C1, K)), y1.frag() / x1.frag());
    if (!err.empty()) return {false, "quotient sampling: " + err};

    // difference: straddlers of the t2-offset cut
    CutSpec C2 = offset_scale_cut(L);
    TowerElem x2 = te(L, t(1) + c(Rat(1, 2)) * t(0) * t(1));
    TowerElem y2 = te(L, t(1) + c(Rat(2)) * t(0, Rat(1, 2)) * t(1));
    LemmaReport r2 = check_difference_cut(K, C2, x2, y2);
    if (r2.verdict != Verdict::Pass) return {false, "difference instance: " + r2.str()};
    err = sample(derive_add(restrict_to(C2, K)), y2.frag() - x2.frag());
    if (!err.empty()) return {false, "difference sampling: " + err};

    // hypothesis gate: lacunary gaps admit no monomial kernel over Q_rc
    CutSpec LC = catalog::lacunary_cut(TowerField::with_gens(N, {0}));
    LemmaReport r3 = check_difference_cut(TowerField::rationals_rc(N), LC,
                                          te(LC.field(), LC.seq().lower(4)),
                                          te(LC.field(), c(Rat(2)) * t(0, Rat(2))));
    if (r3.verdict != Verdict::Inapplicable)
        return {false, "degenerate-kernel fixture not inapplicable: " + r3.str()};
    return {true, "both instances pass on 30 sample points; gate fires on the degenerate fixture"};
}

// ---------------------------------------------------------------------------
// 7. Jacobian dependence vs monomial-matrix rank; Steinitz exchange

bool brute_dependent(const std::vector<FragElem>& f, long maxdeg = 4) {
    // all monomials f1^e1*...*fm^em with e1+...+em <= maxdeg
    std::vector<std::vector<long>> tuples;
    std::vector<long> cur(f.size(), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i == f.size()) {
            tuples.push_back(cur);
            return;
        }
        for (long e = 0; e <= left; ++e) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
        cur[i] = 0;
    };
    rec(0, maxdeg);

    using Terms = Puiseux::Terms;
    std::map<ExpVec, std::size_t, Terms::key_compare> col;
    std::vector<Terms> rows;
    for (const auto& tup : tuples) {
        FragElem m = FragElem(1).promoted(N);
        for (std::size_t i = 0; i < f.size(); ++i)
            if (tup[i] > 0) m = m * f[i].pow(tup[i]);
        if (!m.is_polynomial()) throw precondition_error("brute_dependent: fragment fixtures only");
        rows.push_back(m.num().terms());
        for (const auto& [e, coef] : rows.back()) col.emplace(e, col.size());
    }
    std::vector<std::vector<Rat>> mat(rows.size(), std::vector<Rat>(col.size(), Rat(0)));
    // columns indexed by first-seen order
    std::map<ExpVec, std::size_t, Terms::key_compare> idx;
    std::size_t nc = 0;
    for (const auto& r : rows)
        for (const auto& [e, coef] : r)
            if (idx.emplace(e, nc).second) ++nc;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [e, coef] : rows[r]) {
            if (!coef.is_rational()) throw precondition_error("brute_dependent: rational fixtures only");
            mat[r][idx[e]] = coef.rat_value();
        }
    // rank by Gaussian elimination over the rationals
    std::size_t rank = 0;
    for (std::size_t cidx = 0; cidx < nc && rank < mat.size(); ++cidx) {
        std::size_t piv = rank;
        while (piv < mat.size() && is_zero(mat[piv][cidx])) ++piv;
        if (piv == mat.size()) continue;
        std::swap(mat[piv], mat[rank]);
        for (std::size_t r = rank + 1; r < mat.size(); ++r) {
            if (is_zero(mat[r][cidx])) continue;
            Rat g = mat[r][cidx] / mat[rank][cidx];
            for (std::size_t cc2 = cidx; cc2 < nc; ++cc2) mat[r][cc2] -= g * mat[rank][cc2];
        }
        ++rank;
    }
    return rank < mat.size();
}

long trdeg(const TowerFieldPtr& K, const std::vector<FragElem>& fs) {
    std::vector<TowerElem> acc;
    long d = 0;
    for (const FragElem& f : fs) {
        acc.push_back(te(K, f));
        if (are_dependent(K, acc).dependent) acc.pop_back();
        else ++d;
    }
    return d;
}

bool depends_on(const TowerFieldPtr& K, std::vector<FragElem> base, const FragElem& x) {
    long before = trdeg(K, base);
    base.push_back(x);
    return trdeg(K, base) == before;
}

Line independence_oracle() {
    auto Q = TowerField::rationals_rc(N);
    std::vector<std::vector<FragElem>> fixtures{
        {t(0), t(1)},
        {t(0), c(Rat(3)) * t(0) * t(0)},
        {t(0, Rat(1, 2)), t(0)},
        {t(0) + t(1), t(0) * t(1)},
        {t(0), t(1), t(2)},
        {t(0), t(1), t(0) * t(1)},
        {t(0), t(1), t(0) + t(1)},
        {t(0), t(0) * t(0), t(0) * t(0) * t(0)},
    };
    long agreed = 0;
    for (const auto& f : fixtures) {
        std::vector<TowerElem> elems;
        for (const FragElem& x : f) elems.push_back(te(Q, x));
        bool jac = are_dependent(Q, elems).dependent;
        bool brute = brute_dependent(f);
        if (jac != brute)
            return {false, "fixture " + std::to_string(agreed) + ": jacobian says " +
                               (jac ? "dependent" : "independent") + ", brute force disagrees"};
        ++agreed;
    }

    // Steinitz exchange, exhaustively on subsets of size <= 2 plus (C, D)
    std::vector<FragElem> pool{t(0), t(1), t(0) * t(0), t(0) + t(1), t(0) * t(1), t(2)};
    std::vector<std::vector<std::size_t>> subsets{{}};
    for (std::size_t i = 0; i < pool.size(); ++i) {
        subsets.push_back({i});
        for (std::size_t j = i + 1; j < pool.size(); ++j) subsets.push_back({i, j});
    }
    long exchanges = 0;
    for (const auto& idx : subsets)
        for (std::size_t ci = 0; ci < pool.size(); ++ci) {
            if (std::find(idx.begin(), idx.end(), ci) != idx.end()) continue;
            for (std::size_t di = 0; di < pool.size(); ++di) {
                if (di == ci || std::find(idx.begin(), idx.end(), di) != idx.end()) continue;
                std::vector<FragElem> base;
                for (std::size_t i : idx) base.push_back(pool[i]);
                std::vector<FragElem> base_d = base;
                base_d.push_back(pool[di]);
                if (depends_on(Q, base_d, pool[ci]) && !depends_on(Q, base, pool[ci])) {
                    std::vector<FragElem> base_c = base;
                    base_c.push_back(pool[ci]);
                    if (!depends_on(Q, base_c, pool[di]))
                        return {false, "exchange fails for pool items " + std::to_string(ci) +
                                           ", " + std::to_string(di)};
                    ++exchanges;
                }
            }
        }
    return {true, std::to_string(agreed) + " verdicts agree; " + std::to_string(exchanges) +
                      " exchange triples verified"};
}

// ---------------------------------------------------------------------------
// 8. hulls: symmetric filter realizes only symmetric cuts; chains grow

Line hull_no_others() {
    auto K = TowerField::with_gens(N, {1});  // Q_rc(t2)
    CutFamily fam;
    fam.K = K;
    fam.add(CutSpec::element_induced(K, te(K, t(0))), te(K, t(0)));          // (w,w)
    fam.add(CutSpec::above_point(K, c(Rat(0))), te(K, t(2)));                // (1,w)
    fam.add(CutSpec::element_induced(K, te(K, t(2))), te(K, t(2)));          // (1,w)

    HullResult h = one_step_hull(K, fam, HullFilter::Symmetric);
    if (h.chosen != std::vector<std::size_t>{0})
        return {false, "symmetric filter chose the wrong subfamily"};
    for (std::size_t i : h.realized)
        if (!cofinality(fam.cuts[i]).symmetric())
            return {false, "a non-symmetric cut was realized in the hull"};
    if (h.realized != std::vector<std::size_t>{0})
        return {false, "the chosen symmetric cut was not reported realized"};
    if (h.candidates_examined <= 0 || h.bounds.degree != 6 || h.bounds.height != 12)
        return {false, "search certificate missing or bounds drifted"};

    // two-level chain from Q_rc(t3): t2 joins, then t1
    auto per_level = [](const TowerFieldPtr& F) {
        CutFamily f;
        f.K = F;
        std::vector<int> ext = F->external_gens();
        if (!ext.empty()) {
            int g = ext.back();
            f.add(CutSpec::element_induced(F, te(F, t(static_cast<std::size_t>(g)))),
                  te(F, t(static_cast<std::size_t>(g))));
        }
        return f;
    };
    auto chain = iterate_hull(TowerField::with_gens(N, {2}), per_level, HullFilter::Symmetric, {}, 2);
    if (chain.size() != 2 || chain[0].L->gens().size() != 2 || chain[1].L->gens().size() != 3)
        return {false, "two-step chain did not grow strictly"};
    return {true, std::to_string(h.candidates_examined) +
                      " candidates excluded non-symmetric realization; chain grew 1 -> 2 -> 3 gens"};
}

// ---------------------------------------------------------------------------
// 9. piecewise monotone decomposition of seeded rational functions

Line monotone_sampling() {
    auto Q = TowerField::rationals_rc(N);
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> coeff(-9, 9), ndeg(1, 6), ddeg(0, 3);
    std::uniform_int_distribution<long> pick(1, 100);
    long pieces_total = 0;

    for (int trial = 0; trial < 50; ++trial) {
        std::vector<FragElem> ncs(static_cast<std::size_t>(ndeg(rng)) + 1),
            dcs(static_cast<std::size_t>(ddeg(rng)) + 1);
        for (auto& x : ncs) x = c(Rat(coeff(rng)));
        for (auto& x : dcs) x = c(Rat(coeff(rng)));
        if (dcs.back().zero()) dcs.back() = c(Rat(1));
        if (ncs.back().zero()) ncs.back() = c(Rat(1));
        Poly<FragElem> num(ncs), den(dcs);

        // keep endpoints off the poles
        FragElem lo = c(Rat(-3)), hi = c(Rat(3));
        while (den.eval(lo).zero()) lo = lo - c(Rat(1, 7));
        while (den.eval(hi).zero()) hi = hi + c(Rat(1, 7));

        auto pieces = piecewise_monotone_decompose(Q, num, den, lo, hi);
        long poles = 0;
        {
            std::vector<FragElem> one{c(Rat(1))};
            for (const auto& r : root_isolate_over(Q, den))
                if (cmp(r, te(Q, lo)) == Ord::GT && cmp(r, te(Q, hi)) == Ord::LT) ++poles;
        }
        Poly<FragElem> Np = num.derivative() * den - num * den.derivative();
        if (static_cast<long>(pieces.size()) - 1 > std::max<long>(Np.degree(), 0) + poles)
            return {false, "breakpoint count exceeds derivative degree plus poles on trial " +
                               std::to_string(trial)};

        for (const MonoPiece& p : pieces) {
            FragElem plo = p.lo.frag(), step = (p.hi.frag() - p.lo.frag()) / c(Rat(101));
            for (int k = 0; k < 100; ++k) {
                long i = pick(rng), j = pick(rng);
                if (i == j) continue;
                if (i > j) std::swap(i, j);
                FragElem a = plo + c(Rat(i)) * step, b = plo + c(Rat(j)) * step;
                FragElem fa = num.eval(a) / den.eval(a), fb = num.eval(b) / den.eval(b);
                bool ok = p.mode == Mode::Increasing   ? fa < fb
                          : p.mode == Mode::Decreasing ? fa > fb
                                                       : fa == fb;
                if (!ok)
                    return {false, "mode violated inside a piece on trial " +
                                       std::to_string(trial)};
            }
            ++pieces_total;
        }
    }
    return {true, "50 functions, " + std::to_string(pieces_total) + " pieces mode-consistent"};
}

// ---------------------------------------------------------------------------
// 10. byte-identical JSON reports across two runs of the suite

#ifndef CUTFORGE_BIN
#define CUTFORGE_BIN "cutforge"
#endif
#ifndef CUTFORGE_SUITE
#define CUTFORGE_SUITE "verify_suite.cf"
#endif

Line determinism() {
    std::string bin = CUTFORGE_BIN, suite = CUTFORGE_SUITE;
    auto run_once = [&](const std::string& out) {
        std::string cmd = "'" + bin + "' verify '" + suite + "' --json '" + out + "' > /dev/null";
        return std::system(cmd.c_str());
    };
    int rc1 = run_once("acceptance_run1.json");
    int rc2 = run_once("acceptance_run2.json");
    if (rc1 != 0 || rc2 != 0)
        return {false, "suite run exited nonzero (" + std::to_string(rc1) + ", " +
                           std::to_string(rc2) + ")"};
    auto slurp = [](const std::string& p) {
        std::ifstream f(p, std::ios::binary);
        std::ostringstream s;
        s << f.rdbuf();
        return s.str();
    };
    std::string a = slurp("acceptance_run1.json"), b = slurp("acceptance_run2.json");
    if (a.empty()) return {false, "empty JSON report"};
    if (a != b) return {false, "reports differ between runs"};
    return {true, std::to_string(a.size()) + " bytes, byte-identical"};
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Line (*fn)();
    };
    const Entry entries[] = {
        {"realalg interval oracle", realalg_oracle},
        {"sturm vs grid scan", sturm_grid},
        {"catalog classification", catalog_golden},
        {"derivation chain", derivation_chain},
        {"multiplicative bound", multiplicative_bound},
        {"sampled induction", sampled_induction},
        {"independence oracle", independence_oracle},
        {"hull no-others", hull_no_others},
        {"piecewise monotonicity", monotone_sampling},
        {"report determinism", determinism},
    };
    int fails = 0;
    int i = 0;
    for (const Entry& e : entries) {
        ++i;
        Line r;
        try {
            r = e.fn();
        } catch (const std::exception& ex) {
            r = {false, std::string("exception: ") + ex.what()};
        }
        std::printf("criterion %2d %-26s %s  %s\n", i, e.name, r.pass ? "PASS" : "FAIL",
                    r.detail.c_str());
        if (!r.pass) ++fails;
    }
    return fails;
}
