#ifndef CUTFORGE_POLY_HPP
#define CUTFORGE_POLY_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cutforge/rat.hpp"

namespace cutforge {

// Dense univariate polynomial over a field F. F must provide +,-,*,/,
// equality, construction from int, and free functions sgn(F)/is_zero(F).
// The coefficient list never has trailing zeros; the zero polynomial is
// the empty list.
template <class F>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(const F& constant) {
        if (!is_zero(constant)) c_.push_back(constant);
    }

    static Poly monomial(const F& coeff, std::size_t deg) {
        if (is_zero(coeff)) return Poly();
        std::vector<F> c(deg + 1, F(0));
        c[deg] = coeff;
        return Poly(std::move(c));
    }

    bool zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }

    const F& operator[](std::size_t i) const {
        static const F zero_val = F(0);
        return i < c_.size() ? c_[i] : zero_val;
    }

    const F& lead() const {
        if (zero()) throw std::domain_error("Poly::lead on zero polynomial");
        return c_.back();
    }

    F eval(const F& x) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Evaluate at a point of a larger field G (e.g. Rat coefficients at a
    // tower element).
    template <class G>
    G eval_in(const G& x) const {
        G acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + G(*it);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<int>(i));
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
        return Poly(std::move(c));
    }
    Poly operator-() const {
        std::vector<F> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = F(0) - c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return Poly();
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const F& s) {
        std::vector<F> c(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i] * s;
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return (a - b).zero(); }

    // Division with remainder over the field F.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.zero()) throw std::domain_error("Poly divmod by zero");
        std::vector<F> rem = a.c_;
        std::vector<F> quo;
        long db = b.degree();
        if (a.degree() >= db) quo.assign(a.degree() - db + 1, F(0));
        while (static_cast<long>(rem.size()) - 1 >= db) {
            if (is_zero(rem.back())) {
                rem.pop_back();
                continue;
            }
            long dr = static_cast<long>(rem.size()) - 1;
            F q = rem.back() / b.lead();
            quo[dr - db] = q;
            for (long i = 0; i <= db; ++i) rem[dr - db + i] = rem[dr - db + i] - q * b.c_[i];
            rem.pop_back();
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    Poly monic() const {
        if (zero()) return *this;
        return *this * (F(1) / lead());
    }

    // Substitute x -> x + s.
    Poly shift(const F& s) const {
        Poly acc;
        Poly xs(std::vector<F>{s, F(1)});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xs + Poly(*it);
        return acc;
    }
    // Substitute x -> s*x.
    Poly scale_arg(const F& s) const {
        std::vector<F> c = c_;
        F p(1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = c[i] * p;
            p = p * s;
        }
        return Poly(std::move(c));
    }
    // Substitute x -> x^n.
    Poly stretch(std::size_t n) const {
        if (zero()) return Poly();
        std::vector<F> c(c_.size() * n - n + 1, F(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i * n] = c_[i];
        return Poly(std::move(c));
    }
    // Coefficient reversal, x^deg * p(1/x).
    Poly reversed() const {
        std::vector<F> c(c_.rbegin(), c_.rend());
        return Poly(std::move(c));
    }

    std::string str(const std::string& var = "x") const {
        if (zero()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            if (is_zero(c_[i])) continue;
            if (!out.empty()) out += " + ";
            out += to_string(c_[i]);
            if (i > 0) out += "*" + var + "^" + std::to_string(i);
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
};

template <class F>
bool is_zero(const Poly<F>& p) {
    return p.zero();
}

// Monic gcd over a field.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
    if (p.zero() || p.degree() == 0) return p;
    Poly<F> g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return divmod(p, g).first;
}

template <class F>
bool is_squarefree(const Poly<F>& p) {
    return p.zero() || p.degree() <= 0 || poly_gcd(p, p.derivative()).degree() == 0;
}

// Resultant of two polynomials over a field, by the Euclidean recurrence.
template <class F>
F resultant(Poly<F> a, Poly<F> b) {
    if (a.zero() || b.zero()) return F(0);
    F acc(1);
    bool neg = false;
    while (b.degree() > 0) {
        auto [q, r] = divmod(a, b);
        (void)q;
        if (r.zero()) return F(0);
        // res(a,b) = (-1)^(da*db) lc(b)^(da - dr) res(b, r)
        if ((a.degree() % 2) && (b.degree() % 2)) neg = !neg;
        F lead_pow(1);
        for (long i = 0; i < a.degree() - r.degree(); ++i) lead_pow = lead_pow * b.lead();
        acc = acc * lead_pow;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant: res = b^deg(a)
    F tail(1);
    for (long i = 0; i < a.degree(); ++i) tail = tail * b.lead();
    acc = acc * tail;
    if (neg) acc = F(0) - acc;
    return acc;
}

// ---- Sturm sequences -------------------------------------------------

template <class F>
std::vector<Poly<F>> sturm_chain(const Poly<F>& p) {
    std::vector<Poly<F>> chain;
    if (p.zero()) return chain;
    chain.push_back(p);
    Poly<F> d = p.derivative();
    if (d.zero()) return chain;
    chain.push_back(d);
    while (true) {
        const Poly<F>& a = chain[chain.size() - 2];
        const Poly<F>& b = chain[chain.size() - 1];
        Poly<F> r = divmod(a, b).second;
        if (r.zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

template <class F>
int sign_variations_at(const std::vector<Poly<F>>& chain, const F& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

template <class F>
int sign_variations_at_inf(const std::vector<Poly<F>>& chain, int dir) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.zero()) continue;
        int s = sgn(p.lead());
        if (dir < 0 && (p.degree() % 2)) s = -s;
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

// Number of distinct roots in (a, b]; p must be squarefree for the count
// to be meaningful as a root count.
template <class F>
int sturm_count(const std::vector<Poly<F>>& chain, const F& a, const F& b) {
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

// Tarski query: sum of sgn(q(r)) over the roots r of p in (a, b), via the
// Sturm-like chain seeded with p'*q. With a single root in the interval
// this reads off the sign of q at that root without approximating it.
template <class F>
int tarski_query(const Poly<F>& p, const Poly<F>& q, const F& a, const F& b) {
    std::vector<Poly<F>> chain;
    chain.push_back(p);
    Poly<F> s1 = p.derivative() * q;
    if (!s1.zero()) {
        chain.push_back(s1);
        while (true) {
            const Poly<F>& f = chain[chain.size() - 2];
            const Poly<F>& g = chain[chain.size() - 1];
            Poly<F> r = divmod(f, g).second;
            if (r.zero()) break;
            chain.push_back(-r);
        }
    }
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

template <class F>
int sturm_count_all(const std::vector<Poly<F>>& chain) {
    return sign_variations_at_inf(chain, -1) - sign_variations_at_inf(chain, +1);
}

// Cauchy root bound: all real roots lie in (-B, B).
inline Rat cauchy_bound(const Poly<Rat>& p) {
    Rat m(0);
    for (const auto& c : p.coeffs()) {
        Rat a = abs(c / p.lead());
        if (a > m) m = a;
    }
    return m + 1;
}

}  // namespace cutforge

#endif
