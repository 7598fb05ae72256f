#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sqchain/bigint.hpp"

namespace sqchain {

/// All primes <= limit, ascending. Built once, shared read-only.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;

    static PrimeTable sieve(std::uint64_t limit);

    /// Membership for n <= limit (binary search).
    bool contains(std::uint64_t n) const;
};

inline constexpr std::uint64_t kDefaultSieveLimit = 1u << 20;

/// m# = product of all primes <= m (1 for m < 2). Requires m <= table.limit.
Int primorial(const PrimeTable& table, std::uint64_t m);

/// x#_{3:4} = product of primes p <= x with p = 3 (mod 4); 1 when none.
Int primorial_3mod4(const PrimeTable& table, std::uint64_t x);

/// nu_p(n): exponent of the prime p in |n|. Rejects n = 0.
unsigned long nu_p(const Int& p, const Int& n);

/// Smallest h with 2^h >= p, for p >= 2.
unsigned ceil_lg(const Int& p);

/// D_j = 2^{j-1}# * prod_{i=0}^{j-1} (2^{j-1-i}#_{3:4})^{2^i}.
/// Materialized value; only allowed for j <= 21 (the bit length grows like
/// j*2^j). Requires table.limit >= 2^{j-1}.
Int divisor_D(const PrimeTable& table, unsigned j);

inline constexpr unsigned kDivisorDMaterializeLimit = 21;

/// Factored form of D_j: ascending (prime, exponent) pairs. The exponent of
/// p is 2^{j - ceil_lg(p)} when p = 3 (mod 4) and 1 otherwise. Works for any
/// j with 2^{j-1} <= table.limit.
std::vector<std::pair<std::uint64_t, Int>> divisor_D_factored(
    const PrimeTable& table, unsigned j);

/// Some square root of a mod p (odd prime, 0 <= a < p), when one exists;
/// deterministic: Tonelli-Shanks with the smallest quadratic non-residue,
/// always returning the smaller of the two roots.
std::optional<Int> mod_sqrt(const Int& a, const Int& p);

/// b with a*b = 1 (mod n), 0 <= a < n, n >= 2; absent when gcd(a, n) != 1.
std::optional<Int> mod_inv(const Int& a, const Int& n);

/// Empirical growth constants, exact rationals on a 1/1024 grid:
///   lambda1 * x  < ln(x#)       for all integers 2 <= x <= test_limit
///   lambda34 * x < ln(x#_{3:4}) for all integers 3 <= x <= test_limit
///   lambda = min(lambda1, lambda34) / 4   (exactly, as rationals)
/// Verified with directed rounding, so the inequalities are rigorous over
/// the tested range; nothing is claimed beyond test_limit.
struct BoundConstants {
    Rat lambda1;
    Rat lambda34;
    Rat lambda;
    std::uint64_t test_limit = 0;
};

/// Largest grid constants verified over [2, test_limit] / [3, test_limit].
/// Rejects test_limit < 563. Requires table.limit >= test_limit.
BoundConstants estimate_lambda(std::uint64_t test_limit, const PrimeTable& table);

/// Rigorous check of x/2 < ln(x#) for every integer in [lo, hi]
/// (directed-rounding lower bounds on the log sums).
bool verify_half_log_primorial(const PrimeTable& table, std::uint64_t lo = 11,
                               std::uint64_t hi = 563);

/// Rigorous check of ln(x#) >= x*(1 - 1/(2 ln x)) for every integer in
/// [lo, hi].
bool verify_rosser_schoenfeld(const PrimeTable& table, std::uint64_t lo = 563,
                              std::uint64_t hi = 100000);

}  // namespace sqchain
