#ifndef CUTFORGE_PUISEUX_HPP
#define CUTFORGE_PUISEUX_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cutforge/expvec.hpp"
#include "cutforge/realalg.hpp"

namespace cutforge {

// Sparse Puiseux polynomial: finite sum of c * t^e with RealAlg
// coefficients and rational exponent vectors, stored in increasing
// value-group order, so begin() is the leading (largest) term.
class Puiseux {
  public:
    struct VGLess {
        bool operator()(const ExpVec& a, const ExpVec& b) const { return ev_cmp(a, b) < 0; }
    };
    using Terms = std::map<ExpVec, RealAlg, VGLess>;

    Puiseux() = default;
    explicit Puiseux(std::size_t ngens) : n_(ngens) {}
    Puiseux(std::size_t ngens, const RealAlg& constant) : n_(ngens) {
        if (!is_zero(constant)) terms_.emplace(ExpVec(ngens), constant);
    }

    static Puiseux monomial(std::size_t ngens, const RealAlg& c, const ExpVec& e) {
        Puiseux p(ngens);
        if (!is_zero(c)) p.terms_.emplace(e, c);
        return p;
    }
    static Puiseux generator(std::size_t ngens, std::size_t i, const Rat& power = Rat(1)) {
        return monomial(ngens, RealAlg(1), ExpVec::unit(ngens, i, power));
    }

    std::size_t ngens() const { return n_; }
    bool zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    // leading = minimal exponent in the value-group order = largest scale
    const ExpVec& val() const {
        if (zero()) throw std::domain_error("Puiseux::val of zero");
        return terms_.begin()->first;
    }
    const RealAlg& leading_coeff() const {
        if (zero()) throw std::domain_error("Puiseux::leading_coeff of zero");
        return terms_.begin()->second;
    }
    int sign() const { return zero() ? 0 : leading_coeff().sign(); }

    void add_term(const ExpVec& e, const RealAlg& c) {
        if (is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            RealAlg s = it->second + c;
            if (is_zero(s))
                terms_.erase(it);
            else
                it->second = s;
        }
    }

    // A 0-generator Puiseux value is a scalar; binary operations promote it
    // to the other operand's generator count.
    Puiseux promoted(std::size_t n) const {
        if (n_ == n) return *this;
        if (n_ != 0) throw std::invalid_argument("Puiseux: generator count mismatch");
        Puiseux r(n);
        for (const auto& [e, c] : terms_) {
            (void)e;
            r.terms_.emplace(ExpVec(n), c);
        }
        return r;
    }

    friend Puiseux operator+(const Puiseux& a, const Puiseux& b) {
        std::size_t n = a.n_ > b.n_ ? a.n_ : b.n_;
        Puiseux r = a.promoted(n);
        for (const auto& [e, c] : b.promoted(n).terms_) r.add_term(e, c);
        return r;
    }
    friend Puiseux operator-(const Puiseux& a, const Puiseux& b) {
        std::size_t n = a.n_ > b.n_ ? a.n_ : b.n_;
        Puiseux r = a.promoted(n);
        for (const auto& [e, c] : b.promoted(n).terms_) r.add_term(e, -c);
        return r;
    }
    Puiseux operator-() const {
        Puiseux r(n_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend Puiseux operator*(const Puiseux& a, const Puiseux& b) {
        std::size_t n = a.n_ > b.n_ ? a.n_ : b.n_;
        Puiseux r(n);
        for (const auto& [ea, ca] : a.promoted(n).terms_)
            for (const auto& [eb, cb] : b.promoted(n).terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Puiseux scaled(const RealAlg& c) const {
        Puiseux r(n_);
        if (is_zero(c)) return r;
        for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
        return r;
    }
    Puiseux shifted(const ExpVec& e) const {
        Puiseux r(n_);
        for (const auto& [e0, c] : terms_) r.terms_.emplace(e0 + e, c);
        return r;
    }
    friend bool operator==(const Puiseux& a, const Puiseux& b) { return (a - b).zero(); }

    // formal partial derivative with respect to generator i
    Puiseux derivative(std::size_t i) const {
        Puiseux r(n_);
        for (const auto& [e, c] : terms_) {
            if (is_zero(e[i])) continue;
            ExpVec e2 = e;
            e2[i] = e[i] - 1;
            r.add_term(e2, c * RealAlg(e[i]));
        }
        return r;
    }

    // substitute generator i -> 0; terms with positive exponent vanish,
    // negative exponents are a pole
    Puiseux at_zero(std::size_t i) const {
        Puiseux r(n_);
        for (const auto& [e, c] : terms_) {
            if (sgn(e[i]) > 0) continue;
            if (sgn(e[i]) < 0) throw std::domain_error("Puiseux::at_zero: pole at generator");
            r.terms_.emplace(e, c);
        }
        return r;
    }

    // minimal exponent of generator i over all terms (0 for the zero poly)
    Rat min_exponent(std::size_t i) const {
        Rat m(0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (first || e[i] < m) m = e[i];
            first = false;
        }
        return m;
    }

    bool involves(std::size_t i) const {
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (sgn(e[i]) != 0) return true;
        }
        return false;
    }

    bool supported_on(const std::vector<int>& gens) const {
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (!e.supported_on(gens)) return false;
        }
        return true;
    }

    // heuristic witness: evaluate at small rational generator values
    RealAlg eval_at(const std::vector<Rat>& subst) const {
        RealAlg acc(0);
        for (const auto& [e, c] : terms_) {
            RealAlg m(1);
            for (std::size_t i = 0; i < n_; ++i) {
                if (is_zero(e[i])) continue;
                // rational exponent a/b: subst^  (a/b) via pow + root
                long num = static_cast<long>(e[i].get_num().get_si());
                long den = static_cast<long>(e[i].get_den().get_si());
                m = m * RealAlg(subst[i]).pow(num).root(den);
            }
            acc = acc + c * m;
        }
        return acc;
    }

    // lcm of exponent denominators (the ramification index)
    mpz_class ramification() const {
        mpz_class d = 1;
        for (const auto& [e, c] : terms_) {
            (void)c;
            for (std::size_t i = 0; i < n_; ++i)
                mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e[i].get_den_mpz_t());
        }
        return d;
    }

    std::string str() const {
        if (zero()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str();
            for (std::size_t i = 0; i < n_; ++i) {
                if (is_zero(e[i])) continue;
                s += "*t" + std::to_string(i + 1);
                if (e[i] != Rat(1)) s += "^(" + to_string(e[i]) + ")";
            }
        }
        return s;
    }

  private:
    std::size_t n_ = 0;
    Terms terms_;
};

inline bool is_zero(const Puiseux& p) { return p.zero(); }
inline int sgn(const Puiseux& p) { return p.sign(); }

}  // namespace cutforge

#endif
