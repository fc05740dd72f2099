#ifndef CUTFORGE_FRAGELEM_HPP
#define CUTFORGE_FRAGELEM_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cutforge/puiseux.hpp"

namespace cutforge {

// Rational Puiseux expression: quotient of two Puiseux polynomials in the
// infinitesimal generators, with RealAlg coefficients. The generator
// ordering 0 < t_{i+1} < t_i^q < r is enforced by the ExpVec value-group
// order; every sign and comparison query reduces to the sign of a leading
// coefficient, which is exact.
class FragElem {
  public:
    // Scalars are 0-generator values; Puiseux promotion widens them on use.
    FragElem(int v = 0) : num_(0, RealAlg(v)), den_(0, RealAlg(1)) {}  // NOLINT
    FragElem(const RealAlg& c) : num_(0, c), den_(0, RealAlg(1)) {}    // NOLINT
    FragElem(const Rat& q) : num_(0, RealAlg(q)), den_(0, RealAlg(1)) {}  // NOLINT
    FragElem(Puiseux num, Puiseux den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.zero()) throw std::domain_error("FragElem: zero denominator");
        normalize();
    }
    explicit FragElem(Puiseux num) : num_(std::move(num)), den_(num_.ngens(), RealAlg(1)) {}

    static FragElem generator(std::size_t ngens, std::size_t i, const Rat& power = Rat(1)) {
        if (sgn(power) >= 0) return FragElem(Puiseux::generator(ngens, i, power));
        return FragElem(Puiseux(ngens, RealAlg(1)), Puiseux::generator(ngens, i, -power));
    }
    static FragElem monomial(std::size_t ngens, const RealAlg& c, const ExpVec& e) {
        return FragElem(Puiseux::monomial(ngens, c, e), Puiseux(ngens, RealAlg(1)));
    }

    std::size_t ngens() const { return num_.ngens(); }
    FragElem promoted(std::size_t n) const {
        return ngens() >= n ? *this : FragElem(num_.promoted(n), den_.promoted(n));
    }
    const Puiseux& num() const { return num_; }
    const Puiseux& den() const { return den_; }
    bool zero() const { return num_.zero(); }
    bool is_polynomial() const { return den_.term_count() == 1 && den_.val().is_zero(); }

    int sign() const { return num_.sign() * den_.sign(); }

    ExpVec val() const {
        if (zero()) throw std::domain_error("FragElem::val of zero");
        return num_.val() - den_.val();
    }
    RealAlg leading_coeff() const {
        if (zero()) throw std::domain_error("FragElem::leading_coeff of zero");
        return num_.leading_coeff() / den_.leading_coeff();
    }

    friend FragElem operator+(const FragElem& a, const FragElem& b) {
        return FragElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend FragElem operator-(const FragElem& a, const FragElem& b) {
        return FragElem(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    FragElem operator-() const {
        FragElem r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend FragElem operator*(const FragElem& a, const FragElem& b) {
        return FragElem(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend FragElem operator/(const FragElem& a, const FragElem& b) {
        if (b.zero()) throw std::domain_error("FragElem: division by zero");
        return FragElem(a.num_ * b.den_, a.den_ * b.num_);
    }
    FragElem inverse() const {
        if (zero()) throw std::domain_error("FragElem: inverse of zero");
        return FragElem(den_, num_);
    }
    FragElem pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        FragElem acc(1);
        FragElem base = *this;
        unsigned long k = static_cast<unsigned long>(n);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }
    // monomial^q for rational q, exact
    FragElem monomial_pow(const Rat& q) const {
        if (num_.term_count() != 1 || den_.term_count() != 1)
            throw std::domain_error("FragElem::monomial_pow: not a monomial");
        RealAlg c = leading_coeff();
        if (c.sign() <= 0) throw std::domain_error("FragElem::monomial_pow: base not positive");
        long qn = static_cast<long>(q.get_num().get_si());
        long qd = static_cast<long>(q.get_den().get_si());
        RealAlg cq = c.pow(qn).root(qd);
        return monomial(ngens(), cq, q * val());
    }

    friend bool operator==(const FragElem& a, const FragElem& b) {
        return (a.num_ * b.den_ - b.num_ * a.den_).zero();
    }
    friend bool operator!=(const FragElem& a, const FragElem& b) { return !(a == b); }
    friend Ord frag_cmp(const FragElem& a, const FragElem& b) {
        int s = (a - b).sign();
        return s < 0 ? Ord::LT : s > 0 ? Ord::GT : Ord::EQ;
    }
    friend bool operator<(const FragElem& a, const FragElem& b) { return (a - b).sign() < 0; }
    friend bool operator>(const FragElem& a, const FragElem& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const FragElem& a, const FragElem& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const FragElem& a, const FragElem& b) { return (a - b).sign() >= 0; }

    bool supported_on(const std::vector<int>& gens) const {
        return num_.supported_on(gens) && den_.supported_on(gens);
    }
    bool involves(std::size_t i) const { return num_.involves(i) || den_.involves(i); }

    // formal partial derivative in generator i, quotient rule
    FragElem derivative(std::size_t i) const {
        return FragElem(num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_);
    }

    // Substitute t_i = 0. Well-defined whenever the denominator has a term
    // free of t_i; the normalized form guarantees this unless val()[i] < 0.
    FragElem at_zero(std::size_t i) const {
        return FragElem(num_.at_zero(i), den_.at_zero(i));
    }

    // Heuristic numeric witness at t_i = subst[i]; never a decision procedure.
    RealAlg eval_at(const std::vector<Rat>& subst) const {
        return num_.eval_at(subst) / den_.eval_at(subst);
    }

    // Lazy series expansion by long division of the numerator, terms in
    // strictly decreasing scale (increasing val). Finite iff the division
    // terminates.
    class Expansion {
      public:
        Expansion(Puiseux num, Puiseux den) : rem_(std::move(num)), den_(std::move(den)) {}
        std::optional<std::pair<ExpVec, RealAlg>> next() {
            if (rem_.zero()) return std::nullopt;
            ExpVec e = rem_.val() - den_.val();
            RealAlg c = rem_.leading_coeff() / den_.leading_coeff();
            rem_ = rem_ - den_.shifted(e).scaled(c);
            return std::make_pair(e, c);
        }

      private:
        Puiseux rem_, den_;
    };
    Expansion expand() const { return Expansion(num_, den_); }

    // Truncation: sum of expansion terms with val < k. Throws when the fuel
    // budget is exhausted before reaching k.
    Puiseux truncate(const ExpVec& k, int fuel) const;

    std::string str() const {
        if (zero()) return "0";
        if (is_polynomial()) return num_.scaled(RealAlg(1) / den_.leading_coeff()).str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

  private:
    // canonical-ish form: common monomial factor removed, denominator
    // leading coefficient 1
    void normalize() {
        if (num_.zero()) {
            den_ = Puiseux(den_.ngens(), RealAlg(1));
            return;
        }
        std::size_t n = num_.ngens();
        ExpVec shift(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rat mn = num_.min_exponent(i), md = den_.min_exponent(i);
            shift[i] = -(mn < md ? mn : md);
        }
        if (!shift.is_zero()) {
            num_ = num_.shifted(shift);
            den_ = den_.shifted(shift);
        }
        RealAlg lc = den_.leading_coeff();
        if (!(lc == RealAlg(1))) {
            RealAlg inv = RealAlg(1) / lc;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Puiseux num_, den_;
};

inline bool is_zero(const FragElem& a) { return a.zero(); }
inline int sgn(const FragElem& a) { return a.sign(); }
inline FragElem abs(const FragElem& a) { return a.sign() < 0 ? -a : a; }
inline std::string to_string(const FragElem& a) { return a.str(); }

inline Puiseux FragElem::truncate(const ExpVec& k, int fuel) const {
    Puiseux out(ngens());
    Expansion ex = expand();
    for (int i = 0; i <= fuel; ++i) {
        auto t = ex.next();
        if (!t) return out;
        if (t->first >= k) return out;
        out.add_term(t->first, t->second);
    }
    throw std::runtime_error("FragElem::truncate: fuel exhausted");
}

}  // namespace cutforge

#endif
