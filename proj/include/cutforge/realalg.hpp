#ifndef CUTFORGE_REALALG_HPP
#define CUTFORGE_REALALG_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cutforge/poly.hpp"
#include "cutforge/rat.hpp"
#include "cutforge/zprs.hpp"

namespace cutforge {

enum class Ord { LT = -1, EQ = 0, GT = 1 };

// Closed rational interval, the workhorse of all refinement loops.
struct QInterval {
    Rat lo, hi;
    QInterval() : lo(0), hi(0) {}
    QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    Rat width() const { return hi - lo; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool contains(const Rat& q) const { return lo <= q && q <= hi; }

    friend QInterval operator+(const QInterval& a, const QInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend QInterval operator-(const QInterval& a, const QInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend QInterval operator*(const QInterval& a, const QInterval& b) {
        Rat c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        Rat lo = c[0], hi = c[0];
        for (int i = 1; i < 4; ++i) {
            if (c[i] < lo) lo = c[i];
            if (c[i] > hi) hi = c[i];
        }
        return {lo, hi};
    }
    QInterval inverse() const {
        if (contains_zero()) throw std::domain_error("QInterval::inverse across zero");
        return {Rat(1) / hi, Rat(1) / lo};
    }
    friend QInterval operator/(const QInterval& a, const QInterval& b) { return a * b.inverse(); }
};

inline QInterval qi_eval(const Poly<Rat>& p, const QInterval& x) {
    QInterval acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * x;
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

// Exact real algebraic number: squarefree defining polynomial over Q plus
// an isolating interval. Rational values are stored with lo == hi and a
// linear defining polynomial. Interval refinement mutates shared state;
// values are otherwise immutable. Not internally synchronized: confine a
// given value to one thread of control.
class RealAlg {
    struct State {
        Poly<Rat> p;                            // squarefree, annihilates the value
        Rat lo, hi;                             // isolating interval (lo == hi: rational)
        mutable std::vector<Poly<Rat>> chain;   // Sturm chain, built on demand
        bool point = false;
        const std::vector<Poly<Rat>>& sturm() const {
            if (chain.empty()) chain = sturm_chain_prs(p);
            return chain;
        }
    };
    std::shared_ptr<State> s_;

    explicit RealAlg(std::shared_ptr<State> s) : s_(std::move(s)) {}

    static RealAlg make_point(const Rat& v) {
        auto s = std::make_shared<State>();
        s->p = Poly<Rat>(std::vector<Rat>{-v, Rat(1)});
        s->lo = s->hi = v;
        s->point = true;
        return RealAlg(std::move(s));
    }
    static RealAlg make_isolated(Poly<Rat> p, Rat lo, Rat hi) {
        if (lo == hi) return make_point(lo);
        auto s = std::make_shared<State>();
        s->p = std::move(p);
        s->lo = std::move(lo);
        s->hi = std::move(hi);
        s->point = false;
        return RealAlg(std::move(s));
    }

  public:
    RealAlg() : RealAlg(make_point(Rat(0))) {}
    RealAlg(int v) : RealAlg(make_point(Rat(v))) {}                  // NOLINT(google-explicit-constructor)
    RealAlg(const Rat& v) : RealAlg(make_point(v)) {}                // NOLINT(google-explicit-constructor)

    // Construct from a polynomial and an interval expected to isolate
    // exactly one real root. The polynomial is made squarefree; a root
    // sitting on a rational endpoint collapses to a point value.
    RealAlg(const Poly<Rat>& defpoly, const Rat& lo, const Rat& hi) {
        if (defpoly.zero()) throw std::invalid_argument("RealAlg: zero polynomial");
        if (lo > hi) throw std::invalid_argument("RealAlg: empty interval");
        Poly<Rat> q = squarefree_part_rat(defpoly);
        auto roots = isolate_in(q, lo, hi);
        if (roots.size() != 1)
            throw std::invalid_argument("RealAlg: interval isolates " +
                                        std::to_string(roots.size()) + " roots, need 1");
        *this = std::move(roots.front());
    }

    bool is_rational() const { return s_->point; }
    const Rat& rat_value() const {
        if (!s_->point) throw std::logic_error("RealAlg::rat_value on irrational");
        return s_->lo;
    }
    const Poly<Rat>& defpoly() const { return s_->p; }
    QInterval interval() const { return {s_->lo, s_->hi}; }

    // One bisection step; collapses to a point when the midpoint is the root.
    void refine() const {
        State& s = *s_;
        if (s.point) return;
        Rat mid = (s.lo + s.hi) / 2;
        if (is_zero(s.p.eval(mid))) {
            s.lo = s.hi = mid;
            s.point = true;
            s.p = Poly<Rat>(std::vector<Rat>{-mid, Rat(1)});
            s.chain.clear();
            return;
        }
        if (sturm_count(s.sturm(), s.lo, mid) == 1)
            s.hi = mid;
        else
            s.lo = mid;
    }

    void refine_below(const Rat& width) const {
        while (!s_->point && s_->hi - s_->lo >= width) refine();
    }

    // Number of roots of this->defpoly() in the current interval; equals 1
    // by construction (invariant check hook for tests).
    int isolating_count() const {
        if (s_->point) return is_zero(s_->p.eval(s_->lo)) ? 1 : 0;
        int n = sturm_count(s_->sturm(), s_->lo, s_->hi);
        if (!is_zero(s_->p.eval(s_->lo))) return n;
        return n;  // lo is never a root for non-point values
    }

    int sign() const {
        const State& s = *s_;
        if (s.point) return sgn(s.lo);
        while (true) {
            if (sgn(s.lo) > 0) return 1;
            if (sgn(s.hi) < 0) return -1;
            // 0 inside the open interval: equal to the root iff p(0) == 0
            if (is_zero(s.p[0])) return 0;
            refine();
            if (s.point) return sgn(s.lo);
        }
    }

    // Exact sign of p at this value.
    int sign_of(const Poly<Rat>& p) const {
        if (p.zero()) return 0;
        const State& s = *s_;
        if (s.point) return sgn(p.eval(s.lo));
        Poly<Rat> g = gcd_rat(p, s.p);
        if (g.degree() >= 1) {
            auto gch = sturm_chain_prs(g);
            if (count_closed(g, gch, s.lo, s.hi) >= 1) return 0;
        }
        while (true) {
            QInterval v = qi_eval(p, {s.lo, s.hi});
            if (sgn(v.lo) > 0) return 1;
            if (sgn(v.hi) < 0) return -1;
            refine();
            if (s.point) return sgn(p.eval(s.lo));
        }
    }

    friend Ord ra_cmp(const RealAlg& a, const RealAlg& b) {
        if (a.s_ == b.s_) return Ord::EQ;
        const State& x = *a.s_;
        const State& y = *b.s_;
        if (x.point && y.point) return x.lo < y.lo ? Ord::LT : x.lo > y.lo ? Ord::GT : Ord::EQ;
        // equality is decided once via gcd; afterwards refinement separates
        Poly<Rat> g = gcd_rat(x.p, y.p);
        bool maybe_equal = g.degree() >= 1;
        std::vector<Poly<Rat>> gch;
        if (maybe_equal) gch = sturm_chain_prs(g);
        while (true) {
            if (x.hi < y.lo) return Ord::LT;
            if (y.hi < x.lo) return Ord::GT;
            if (maybe_equal) {
                Rat lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
                if (lo <= hi && count_closed(g, gch, lo, hi) >= 1) return Ord::EQ;
                maybe_equal = false;  // shared root excluded; intervals must separate
            }
            // boundary touch without shared root: refine until strict
            a.refine();
            b.refine();
            if (x.point && y.point)
                return x.lo < y.lo ? Ord::LT : x.lo > y.lo ? Ord::GT : Ord::EQ;
            if (x.point && !g.zero() && y.lo < x.lo && x.lo < y.hi && is_zero(y.p.eval(x.lo)))
                return Ord::EQ;
            if (y.point && x.lo < y.lo && y.lo < x.hi && is_zero(x.p.eval(y.lo))) return Ord::EQ;
        }
    }

    friend bool operator==(const RealAlg& a, const RealAlg& b) { return ra_cmp(a, b) == Ord::EQ; }
    friend bool operator<(const RealAlg& a, const RealAlg& b) { return ra_cmp(a, b) == Ord::LT; }
    friend bool operator<=(const RealAlg& a, const RealAlg& b) { return ra_cmp(a, b) != Ord::GT; }
    friend bool operator>(const RealAlg& a, const RealAlg& b) { return ra_cmp(a, b) == Ord::GT; }
    friend bool operator>=(const RealAlg& a, const RealAlg& b) { return ra_cmp(a, b) != Ord::LT; }
    friend bool operator!=(const RealAlg& a, const RealAlg& b) { return ra_cmp(a, b) != Ord::EQ; }

    RealAlg operator-() const {
        const State& s = *s_;
        if (s.point) return make_point(-s.lo);
        Poly<Rat> q = s.p.scale_arg(Rat(-1));
        if (sgn(q.lead()) < 0) q = -q;
        return make_isolated(std::move(q), -s.hi, -s.lo);
    }

    friend RealAlg operator+(const RealAlg& a, const RealAlg& b) {
        if (a.s_->point && b.s_->point) return make_point(a.s_->lo + b.s_->lo);
        if (a.s_->point) return shift_by(b, a.s_->lo);
        if (b.s_->point) return shift_by(a, b.s_->lo);
        return combine(a, b, OpKind::Add);
    }
    friend RealAlg operator-(const RealAlg& a, const RealAlg& b) { return a + (-b); }
    friend RealAlg operator*(const RealAlg& a, const RealAlg& b) {
        if (a.s_->point && b.s_->point) return make_point(a.s_->lo * b.s_->lo);
        if (a.s_->point) return scale_by(b, a.s_->lo);
        if (b.s_->point) return scale_by(a, b.s_->lo);
        if (a.sign() == 0 || b.sign() == 0) return RealAlg(0);
        return combine(a, b, OpKind::Mul);
    }
    friend RealAlg operator/(const RealAlg& a, const RealAlg& b) {
        if (b.sign() == 0) throw std::domain_error("RealAlg: division by zero");
        if (b.s_->point) return scale_by(a, Rat(1) / b.s_->lo);
        return a * b.inverse();
    }

    RealAlg inverse() const {
        if (sign() == 0) throw std::domain_error("RealAlg: inverse of zero");
        const State& s = *s_;
        if (s.point) return make_point(Rat(1) / s.lo);
        Poly<Rat> p = s.p;
        // strip the root at 0, if any, so reversal keeps the degree honest
        while (is_zero(p[0])) p = divmod(p, Poly<Rat>::monomial(Rat(1), 1)).first;
        Poly<Rat> q = p.reversed();
        while (contains_zero_interval()) refine();
        if (s.point) return make_point(Rat(1) / s.lo);
        Rat lo = Rat(1) / s.hi, hi = Rat(1) / s.lo;
        RealAlg out(q, lo, hi);
        return out;
    }

    RealAlg pow(long n) const {
        if (n == 0) return RealAlg(1);
        if (n < 0) return inverse().pow(-n);
        RealAlg acc(1), base = *this;
        unsigned long k = static_cast<unsigned long>(n);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    // Exact n-th root; requires a > 0 or n odd.
    RealAlg root(long n) const {
        if (n <= 0) throw std::invalid_argument("RealAlg::root: n must be positive");
        if (n == 1) return *this;
        int sg = sign();
        if (sg < 0 && n % 2 == 0) throw std::domain_error("RealAlg::root: even root of negative");
        if (sg == 0) return RealAlg(0);
        if (sg < 0) return -((-*this).root(n));
        // value > 0: annihilator p(x^n); bracket the n-th root by bisection,
        // keeping u^n <= lo < value^n < hi <= v^n throughout
        const State& s = *s_;
        if (s.point) {
            // exact rational n-th root when numerator and denominator are
            // perfect n-th powers
            mpz_class rn, rd;
            int exact_n = mpz_root(rn.get_mpz_t(), s.lo.get_num_mpz_t(),
                                   static_cast<unsigned long>(n));
            int exact_d = mpz_root(rd.get_mpz_t(), s.lo.get_den_mpz_t(),
                                   static_cast<unsigned long>(n));
            if (exact_n && exact_d) {
                Rat r(rn, rd);
                r.canonicalize();
                return make_point(r);
            }
        }
        Poly<Rat> q = squarefree_part_rat(s.p.stretch(static_cast<std::size_t>(n)));
        while (!s.point && sgn(s.lo) <= 0) refine();
        auto chain = sturm_chain_prs(q);
        Rat u = nth_root_lower(s.lo, n), v = nth_root_upper(s.hi, n);
        while (true) {
            if (count_closed(q, chain, u, v) == 1 && !is_zero(q.eval(u)) && !is_zero(q.eval(v)))
                return make_isolated(std::move(q), u, v);
            Rat m = (u + v) / 2;
            Rat mn = rat_pow(m, n);
            if (s.point) {
                if (mn == s.lo) return make_point(m);
                (mn < s.lo ? u : v) = m;
            } else if (mn <= s.lo) {
                u = m;
            } else if (mn >= s.hi) {
                v = m;
            } else {
                refine();
                while (!s.point && sgn(s.lo) <= 0) refine();
            }
        }
    }

    std::string str() const {
        if (s_->point) return to_string(s_->lo);
        return "root(" + s_->p.str() + ", " + to_string(s_->lo) + ", " + to_string(s_->hi) + ")";
    }

    // All real roots of p, ascending. The zero polynomial is rejected;
    // nonzero constants have no roots.
    static std::vector<RealAlg> isolate_roots(const Poly<Rat>& p) {
        if (p.zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
        if (p.degree() == 0) return {};
        Poly<Rat> q = squarefree_part_rat(p);
        Rat b = cauchy_bound(q);
        return isolate_in(q, -b, b);
    }

  private:
    enum class OpKind { Add, Mul };

    bool contains_zero_interval() const { return sgn(s_->lo) <= 0 && sgn(s_->hi) >= 0; }

    static int count_closed(const Poly<Rat>& p, const std::vector<Poly<Rat>>& chain,
                            const Rat& lo, const Rat& hi) {
        if (lo > hi) return 0;
        int n = sturm_count(chain, lo, hi);  // roots in (lo, hi]
        if (is_zero(p.eval(lo))) ++n;
        return n;
    }

    static RealAlg shift_by(const RealAlg& a, const Rat& r) {
        const State& s = *a.s_;
        return make_isolated(s.p.shift(-r), s.lo + r, s.hi + r);
    }
    static RealAlg scale_by(const RealAlg& a, const Rat& r) {
        if (is_zero(r)) return RealAlg(0);
        const State& s = *a.s_;
        Poly<Rat> q = s.p.scale_arg(Rat(1) / r);
        Rat lo = s.lo * r, hi = s.hi * r;
        if (lo > hi) std::swap(lo, hi);
        if (sgn(q.lead()) < 0) q = -q;
        return make_isolated(std::move(q), lo, hi);
    }

    // Resultant-based binary operation on two non-rational operands.
    static RealAlg combine(const RealAlg& a, const RealAlg& b, OpKind op);

    static std::vector<RealAlg> isolate_in(const Poly<Rat>& q, Rat lo, Rat hi);

    // u with u^n <= r, for r >= 0.
    static Rat nth_root_lower(const Rat& r, long n) {
        if (sgn(r) <= 0) return Rat(0);
        if (r < 1) {
            Rat g(1, 2);
            while (rat_pow(g, n) > r) g /= 2;
            return g;
        }
        mpz_class z = rat_floor(r), u;
        mpz_root(u.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(n));
        return Rat(u);
    }
    static Rat nth_root_upper(const Rat& r, long n) {
        if (sgn(r) <= 0) return Rat(0);
        mpz_class z = rat_floor(r) + 1, v;
        mpz_root(v.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(n));
        return Rat(v + 1);
    }
};

inline int sgn(const RealAlg& a) { return a.sign(); }
inline bool is_zero(const RealAlg& a) { return a.sign() == 0; }

inline std::vector<RealAlg> RealAlg::isolate_in(const Poly<Rat>& q, Rat lo, Rat hi) {
    std::vector<RealAlg> out;
    if (q.degree() < 1 || lo > hi) return out;
    auto chain = sturm_chain_prs(q);
    if (lo == hi) {
        if (is_zero(q.eval(lo))) out.push_back(make_point(lo));
        return out;
    }
    // peel endpoint roots so the recursion can assume q(lo), q(hi) != 0
    bool root_lo = is_zero(q.eval(lo)), root_hi = is_zero(q.eval(hi));

    struct Frame {
        Rat a, b;
    };
    std::vector<RealAlg> inner;
    // recursive bisection over open intervals with non-root endpoints
    auto emit_point = [&](const Rat& v) { inner.push_back(make_point(v)); };
    std::vector<Frame> stack;
    auto push_range = [&](Rat a, Rat b) {
        if (a < b) stack.push_back({std::move(a), std::move(b)});
    };
    // nudge endpoints off roots
    Rat a = lo, b = hi;
    Rat step = (hi - lo) / 4;
    while (is_zero(q.eval(a))) {
        a += step;
        step /= 2;
    }
    step = (hi - lo) / 4;
    while (is_zero(q.eval(b))) {
        b -= step;
        step /= 2;
    }
    if (root_lo) emit_point(lo);
    if (root_hi && hi != lo) emit_point(hi);
    // roots strictly between lo and a (resp. b and hi) cannot exist once the
    // nudge interval contains no sign variation; ensure that:
    while (root_lo && sturm_count(chain, lo, a) > 0) {
        a = (lo + a) / 2;
        while (is_zero(q.eval(a))) a = (a + lo) / 2 + (a - lo) / 4;
    }
    while (root_hi && sign_variations_at(chain, b) - sign_variations_at(chain, hi) > 0) {
        b = (b + hi) / 2;
        while (is_zero(q.eval(b))) b = (b + hi) / 2 - (hi - b) / 4;
    }
    push_range(a, b);
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        int n = sturm_count(chain, f.a, f.b);  // q(f.b) != 0, so count in (a,b)
        if (n == 0) continue;
        if (n == 1) {
            inner.push_back(make_isolated(q, f.a, f.b));
            continue;
        }
        Rat mid = (f.a + f.b) / 2;
        if (is_zero(q.eval(mid))) {
            emit_point(mid);
            Rat w = (f.b - f.a) / 4;
            while (is_zero(q.eval(mid - w)) || is_zero(q.eval(mid + w)) ||
                   sturm_count(chain, Rat(mid - w), Rat(mid + w)) > 1)
                w /= 2;
            push_range(f.a, mid - w);
            push_range(mid + w, f.b);
        } else {
            push_range(f.a, mid);
            push_range(mid, f.b);
        }
    }
    std::sort(inner.begin(), inner.end(), [](const RealAlg& x, const RealAlg& y) {
        return ra_cmp(x, y) == Ord::LT;
    });
    return inner;
}

inline RealAlg RealAlg::combine(const RealAlg& a, const RealAlg& b, OpKind op) {
    const Poly<Rat>& pa = a.s_->p;
    Poly<Rat> pb = b.s_->p;
    if (op == OpKind::Mul) {
        // ensure pb(0) != 0 so the y-leading coefficient below is constant
        while (is_zero(pb[0])) pb = divmod(pb, Poly<Rat>::monomial(Rat(1), 1)).first;
    }
    long da = pa.degree(), db = pb.degree();
    long dmax = da * db;
    // interpolate R(x) = Res_y(pa(y), q_x(y)) from dmax+1 specializations
    std::vector<Rat> xs, ys;
    xs.reserve(dmax + 1);
    ys.reserve(dmax + 1);
    for (long k = 0; k <= dmax; ++k) {
        Rat x(k);
        Poly<Rat> qk;
        if (op == OpKind::Add) {
            // q_x(y) = pb(x - y)
            qk = pb.scale_arg(Rat(-1)).shift(-x);
        } else {
            // q_x(y) = y^db * pb(x/y): coefficient of y^(db-j) is pb_j x^j
            std::vector<Rat> c(static_cast<std::size_t>(db) + 1, Rat(0));
            Rat xp(1);
            for (long j = 0; j <= db; ++j) {
                c[static_cast<std::size_t>(db - j)] = pb[static_cast<std::size_t>(j)] * xp;
                xp *= x;
            }
            qk = Poly<Rat>(std::move(c));
        }
        xs.push_back(x);
        ys.push_back(resultant(pa, qk));
    }
    // Newton divided differences
    std::vector<Rat> dd = ys;
    for (long j = 1; j <= dmax; ++j)
        for (long i = dmax; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    Poly<Rat> res;
    for (long i = dmax; i >= 0; --i) {
        res = res * Poly<Rat>(std::vector<Rat>{-xs[i], Rat(1)});
        res = res + Poly<Rat>(dd[i]);
    }
    if (res.zero()) throw std::logic_error("RealAlg::combine: vanishing resultant");
    Poly<Rat> annih = squarefree_part_rat(res);
    auto chain = sturm_chain_prs(annih);
    // refine operands until the interval image isolates exactly one root
    for (int round = 0; round < 4096; ++round) {
        QInterval va = a.interval(), vb = b.interval();
        QInterval v = op == OpKind::Add ? va + vb : va * vb;
        int n = count_closed(annih, chain, v.lo, v.hi);
        bool lo_root = is_zero(annih.eval(v.lo)), hi_root = is_zero(annih.eval(v.hi));
        if (n == 1 && !lo_root && !hi_root) return make_isolated(annih, v.lo, v.hi);
        if (n >= 1 && (lo_root || hi_root)) {
            // the value itself may be the rational endpoint; verify cheaply
            for (const Rat& cand : {v.lo, v.hi}) {
                if (!is_zero(annih.eval(cand))) continue;
                bool equal = op == OpKind::Add
                                 ? (ra_cmp(a, shift_by(-b, cand)) == Ord::EQ)
                                 : (ra_cmp(a, scale_by(b.inverse(), cand)) == Ord::EQ);
                if (equal) return make_point(cand);
            }
        }
        a.refine();
        b.refine();
        if (a.s_->point && b.s_->point)
            return make_point(op == OpKind::Add ? Rat(a.s_->lo + b.s_->lo) : Rat(a.s_->lo * b.s_->lo));
        if (a.s_->point) return op == OpKind::Add ? shift_by(b, a.s_->lo) : scale_by(b, a.s_->lo);
        if (b.s_->point) return op == OpKind::Add ? shift_by(a, b.s_->lo) : scale_by(a, b.s_->lo);
    }
    throw std::logic_error("RealAlg::combine: refinement did not isolate");
}

inline RealAlg sqrt(const RealAlg& a) { return a.root(2); }

}  // namespace cutforge

#endif
