#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sqchain {

using Int = mpz_class;
using Rat = mpq_class;

/// floor(sqrt(v)); v must be >= 0.
inline Int isqrt_floor(const Int& v) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

/// Exact perfect-square test; on success `root` holds the nonnegative root.
/// Integer-only (sqrtrem + zero remainder), no floating point.
inline bool is_perfect_square(const Int& v, Int& root) {
    if (sgn(v) < 0) return false;
    Int rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
    return sgn(rem) == 0;
}

inline bool is_perfect_square(const Int& v) {
    Int root;
    return is_perfect_square(v, root);
}

/// a/b in lowest terms (mpq_class's two-argument constructor does not canonicalize).
inline Rat make_ratio(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace sqchain
