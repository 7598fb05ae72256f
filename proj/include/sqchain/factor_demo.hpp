#pragma once

#include <cstdint>
#include <optional>

#include "sqchain/chain.hpp"

namespace sqchain {

/// splitmix64: published-constant 64-bit generator, one word per step.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// m uniform-ish in [0, n): bitlen(n) + 64 generator bits (big-endian word
/// stream) reduced mod n. Bias is < n / 2^64, irrelevant at any usable n.
Int draw_uniform(SplitMix64& rng, const Int& n);

struct FactorAttempt {
    Int n;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::optional<Int> factor;     // engaged: 1 < factor < n, factor | n
    std::uint64_t trials_used = 0;
};

/// Draw m, compute gcd(P(m), n), stop at the first 1 < gcd < n.
/// The chain's modulus must equal n; rejects even or prime n.
FactorAttempt factor_with_chain(const Int& n, const SquareChain& chain,
                                std::uint64_t trials, std::uint64_t seed);

/// [0,...,0, inv(2), inv(4)] mod n (length k >= 2, n odd); satisfies
/// P(x) = (x^{2^{k-1}} - 1) * x^{2^{k-1}} (mod n).
SquareChain build_demo_chain(const Int& n, unsigned k);

/// Exact per-trial success probability of the demo chain on n = p*q:
/// P(m) = 0 mod p has gcd(2^{k-1}, p-1) + 1 solutions, and a trial succeeds
/// iff exactly one of the two primes divides P(m).
Rat demo_success_probability(const Int& p, const Int& q, unsigned k);

/// Number of successful draws (1 < gcd(P(m), n) < n) over `trials`
/// independent draws; does not stop at the first success.
std::uint64_t count_factor_successes(const Int& n, const SquareChain& chain,
                                     std::uint64_t trials, std::uint64_t seed);

}  // namespace sqchain
