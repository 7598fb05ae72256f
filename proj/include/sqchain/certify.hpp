#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqchain/chain.hpp"
#include "sqchain/numtheory.hpp"

namespace sqchain {

/// Constraint families a crumbling chain's coefficients must satisfy.
enum class CheckId {
    parity,           // 2 | c_j for j >= 2
    primorial,        // 2^{j-1}# | c_j
    divisor_d,        // D_j | c_j (materialized cross-check, j <= 21)
    valuation_3mod4,  // nu_p(c_j) >= 2^{j - ceil_lg p} for p = 3 (mod 4), p <= 2^{j-1}
    evenness_3mod4,   // nu_p(c_j) even for p = 3 (mod 4) (scanned range / full factorization)
    two_squares,      // 2*c_j is a sum of two squares
    ordering,         // c_j >= 0 and c_j^2 >= c_{j+1}
    positivity,       // c_j > 0 up to the last nonzero coefficient
};

const char* check_id_name(CheckId id);

struct CheckRecord {
    std::size_t j = 0;
    CheckId id = CheckId::parity;
    std::string required;       // short human-readable statement
    bool holds = false;
    std::vector<Int> witness;   // integers involved (filled on failure)
};

struct DivisibilityCertificate {
    std::vector<CheckRecord> checks;  // ascending j, fixed family order
    bool overall = false;             // AND of all holds flags
    bool known_crumbling = false;     // caller's claim, recorded only
    std::uint64_t evenness_scan_limit = 0;  // primes scanned for evenness
};

struct CertifyOptions {
    /// Evenness of nu_p is scanned for p = 3 (mod 4) up to this limit; on
    /// top of that, coefficients with |c_j| < 2^64 are factored completely.
    std::uint64_t evenness_scan_limit = 10000;
};

/// Evaluate every proved coefficient constraint on a chain over Z.
/// Failures are recorded, never thrown; c_j = 0 passes divisibility checks
/// vacuously. Usable both as a verifier (known_crumbling = true) and as a
/// search pruner.
DivisibilityCertificate certify_chain(const SquareChain& chain,
                                      bool known_crumbling,
                                      const PrimeTable& table,
                                      const CertifyOptions& options = {});

struct GrowthRow {
    unsigned j = 0;
    double ln_D_lower = 0.0;   // rigorous lower bound on ln D_j
    double lambda_j_2j = 0.0;  // lambda * j * 2^j (exact in binary)
    std::string min_bits;      // bit-length lower bound on c_j; empty for j < 5
};

/// Rows for j = 3..j_max (3 <= j_max <= 21); each row is checked to satisfy
/// ln D_j > lambda * j * 2^j with directed rounding.
std::vector<GrowthRow> growth_table(unsigned j_max,
                                    const BoundConstants& constants,
                                    const PrimeTable& table);

/// Lower bound on the bit length of c_j for a fundamental crumbling chain:
/// 2^{j-2} / ln 2, rendered to 3 significant figures ("11.5", "9.31e119").
/// Rejects j < 5.
std::string min_bits_estimate(unsigned j);

/// For a crumbling chain with k >= 3 and c_k > 0, check ln c_j > lambda*k*2^j
/// and c_j^{2^{k-j}} >= c_k for every j. A violated inequality returns false
/// (it already refutes crumbling); if all inequalities hold the chain is
/// required to crumble (throws otherwise) and the result is true.
bool corollary_bound_check(const SquareChain& chain,
                           const BoundConstants& constants);

}  // namespace sqchain
