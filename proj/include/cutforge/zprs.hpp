#ifndef CUTFORGE_ZPRS_HPP
#define CUTFORGE_ZPRS_HPP

// Integer primitive remainder sequences for polynomials over Q. The
// generic field Euclid in poly.hpp is fine for small degrees, but the
// resultant-built annihilators in realalg reach degree 60+, where naive
// rational arithmetic swells badly. Everything here returns results that
// are correct up to a positive rational factor, which is all that Sturm
// theory and gcd computations need.

#include <utility>
#include <vector>

#include "cutforge/poly.hpp"
#include "cutforge/rat.hpp"

namespace cutforge {

namespace zdetail {

using ZVec = std::vector<mpz_class>;

inline void ztrim(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline mpz_class zcontent(const ZVec& v) {
    mpz_class g = 0;
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline void zprim(ZVec& v) {
    mpz_class g = zcontent(v);
    if (g > 1)
        for (auto& c : v) c /= g;
}

// Clear denominators and content: positive-multiple integer image of p.
inline ZVec from_rat(const Poly<Rat>& p) {
    mpz_class den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZVec v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(mpz_class(c.get_num() * (den / c.get_den())));
    zprim(v);
    return v;
}

inline Poly<Rat> to_rat(const ZVec& v) {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (const auto& z : v) c.emplace_back(z);
    return Poly<Rat>(std::move(c));
}

// Pseudo-remainder: lc(b)^mults * a  mod  b, with the actual number of
// lc(b) multiplications reported so callers can reason about the sign.
inline ZVec zprem(ZVec a, const ZVec& b, long* mults = nullptr) {
    long db = static_cast<long>(b.size()) - 1;
    const mpz_class& lb = b.back();
    long done = 0;
    while (static_cast<long>(a.size()) - 1 >= db) {
        if (a.back() == 0) {
            a.pop_back();
            continue;
        }
        long da = static_cast<long>(a.size()) - 1;
        mpz_class top = a.back();
        for (long i = 0; i < da; ++i) a[i] *= lb;
        for (long i = 0; i < db; ++i) a[da - db + i] -= top * b[i];
        a.pop_back();
        ++done;
    }
    ztrim(a);
    if (mults) *mults = done;
    return a;
}

}  // namespace zdetail

// Sturm chain of a squarefree-or-not rational polynomial, with primitive
// integer entries. Signs agree with the classical chain at every point.
inline std::vector<Poly<Rat>> sturm_chain_prs(const Poly<Rat>& p) {
    using namespace zdetail;
    std::vector<Poly<Rat>> chain;
    if (p.zero()) return chain;
    ZVec a = from_rat(p);
    ZVec b = from_rat(p.derivative());
    chain.push_back(to_rat(a));
    if (b.empty()) return chain;
    chain.push_back(to_rat(b));
    while (true) {
        // remainder of a by b equals zprem(a,b) / lc(b)^k; Sturm wants the
        // negated remainder up to a positive factor.
        long k = 0;
        ZVec r = zprem(a, b, &k);
        if (r.empty()) break;
        bool mult_neg = (b.back() < 0) && (k % 2 == 1);
        for (auto& c : r)
            if (!mult_neg) c = -c;
        zprim(r);
        chain.push_back(to_rat(r));
        a = std::move(b);
        b = std::move(r);
    }
    return chain;
}

// Monic gcd over Q via the primitive PRS.
inline Poly<Rat> gcd_rat(const Poly<Rat>& pa, const Poly<Rat>& pb) {
    using namespace zdetail;
    if (pa.zero()) return pb.monic();
    if (pb.zero()) return pa.monic();
    ZVec a = from_rat(pa), b = from_rat(pb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZVec r = zprem(a, b);
        zprim(r);
        a = std::move(b);
        b = std::move(r);
    }
    return to_rat(a).monic();
}

inline Poly<Rat> squarefree_part_rat(const Poly<Rat>& p) {
    if (p.zero() || p.degree() <= 1) return p;
    Poly<Rat> g = gcd_rat(p, p.derivative());
    if (g.degree() == 0) return p;
    return divmod(p, g).first;
}

}  // namespace cutforge

#endif
