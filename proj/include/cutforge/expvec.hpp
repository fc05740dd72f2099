#ifndef CUTFORGE_EXPVEC_HPP
#define CUTFORGE_EXPVEC_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutforge/rat.hpp"

namespace cutforge {

// Exponent vector of a Puiseux monomial t1^e1 * ... * tn^en, one rational
// per infinitesimal generator. The value-group order makes the LAST
// generator most significant: t_{i+1} sits below every power of t_i, so
// v(t_{i+1}) must dominate every multiple of v(t_i). Comparisons therefore
// scan coordinates from index n-1 down to 0. A larger vector in this order
// is a smaller positive element. Tests pin this orientation.
class ExpVec {
  public:
    ExpVec() = default;
    explicit ExpVec(std::size_t n) : e_(n, Rat(0)) {}
    explicit ExpVec(std::vector<Rat> e) : e_(std::move(e)) {}
    ExpVec(std::initializer_list<Rat> e) : e_(e) {}

    std::size_t size() const { return e_.size(); }
    const Rat& operator[](std::size_t i) const { return e_[i]; }
    Rat& operator[](std::size_t i) { return e_[i]; }

    bool is_zero() const {
        for (const auto& q : e_)
            if (sgn(q) != 0) return false;
        return true;
    }

    // three-way comparison in the value-group order
    friend int ev_cmp(const ExpVec& a, const ExpVec& b) {
        if (a.size() != b.size()) throw std::invalid_argument("ExpVec: size mismatch");
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a.e_[i] < b.e_[i]) return -1;
            if (a.e_[i] > b.e_[i]) return 1;
        }
        return 0;
    }
    friend bool operator<(const ExpVec& a, const ExpVec& b) { return ev_cmp(a, b) < 0; }
    friend bool operator>(const ExpVec& a, const ExpVec& b) { return ev_cmp(a, b) > 0; }
    friend bool operator==(const ExpVec& a, const ExpVec& b) { return ev_cmp(a, b) == 0; }
    friend bool operator!=(const ExpVec& a, const ExpVec& b) { return ev_cmp(a, b) != 0; }
    friend bool operator<=(const ExpVec& a, const ExpVec& b) { return ev_cmp(a, b) <= 0; }
    friend bool operator>=(const ExpVec& a, const ExpVec& b) { return ev_cmp(a, b) >= 0; }

    friend ExpVec operator+(const ExpVec& a, const ExpVec& b) {
        if (a.size() != b.size()) throw std::invalid_argument("ExpVec: size mismatch");
        ExpVec r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend ExpVec operator-(const ExpVec& a, const ExpVec& b) {
        if (a.size() != b.size()) throw std::invalid_argument("ExpVec: size mismatch");
        ExpVec r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    ExpVec operator-() const {
        ExpVec r(size());
        for (std::size_t i = 0; i < size(); ++i) r.e_[i] = -e_[i];
        return r;
    }
    friend ExpVec operator*(const Rat& q, const ExpVec& a) {
        ExpVec r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = q * a.e_[i];
        return r;
    }

    static ExpVec unit(std::size_t n, std::size_t i, const Rat& q = Rat(1)) {
        ExpVec r(n);
        r.e_[i] = q;
        return r;
    }

    // true when every coordinate outside `gens` (a sorted index list) is 0
    bool supported_on(const std::vector<int>& gens) const {
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (sgn(e_[i]) == 0) continue;
            bool in = false;
            for (int g : gens) in = in || static_cast<std::size_t>(g) == i;
            if (!in) return false;
        }
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ",";
            s += to_string(e_[i]);
        }
        return s + ")";
    }

  private:
    std::vector<Rat> e_;
};

}  // namespace cutforge

#endif
