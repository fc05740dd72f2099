#ifndef CUTFORGE_RAT_HPP
#define CUTFORGE_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cutforge {

// Exact rational numbers. mpq_class keeps the canonical form we need
// (coprime, positive denominator) as long as canonicalize() runs after
// raw numerator/denominator surgery, which we never do outside this file.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline int sgn(const Rat& q) { return sgn(q.get_num()); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline Rat abs(const Rat& q) { return ::abs(q); }

// q^e for integer e (negative allowed, q nonzero then).
inline Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (is_zero(q)) {
        if (e < 0) throw std::domain_error("rat_pow: 0^negative");
        return Rat(0);
    }
    Rat base = e < 0 ? Rat(1) / q : q;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

// Height of a rational: max(|num|, den). Used by bounded searches.
inline mpz_class rat_height(const Rat& q) {
    mpz_class n = ::abs(q.get_num());
    return n > q.get_den() ? n : q.get_den();
}

// Floor of a rational as an integer.
inline mpz_class rat_floor(const Rat& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

}  // namespace cutforge

#endif
