#pragma once

#include <cstdint>
#include <vector>

#include "sqchain/chain.hpp"

namespace sqchain {

/// The prime field Z_p, p an odd prime (characteristic 2 is excluded).
struct FieldSpec {
    Int p;

    explicit FieldSpec(Int prime);
};

/// Which of the two square roots feeds the split; the resulting tail sets
/// are identical either way ({c+t, c-t} = {c-(p-t), c+(p-t)} mod p).
enum class RootBranch { smaller, larger };

/// Tail square sets over Z_p; a value splits iff it is 0 or a quadratic
/// residue. Values live in [0, p).
TailResult ff_tail_sets(const SquareChain& chain,
                        RootBranch branch = RootBranch::smaller);

/// Crumble decision over Z_p for a chain whose modulus is an odd prime.
/// Roots are reported in [0, p) with multiplicity.
CrumbleReport ff_crumble_check(const SquareChain& chain);

struct FfEnumEntry {
    SquareChain chain;
    CrumbleReport report;
};

inline constexpr std::uint64_t kFfEnumerationCap = 10'000'000;

/// All p^k coefficient vectors in lexicographic order, filtered to the
/// crumbling ones. Rejects p^k > 10^7. Every result is checked against the
/// short-field vanishing law (c_j = 0 whenever p <= 2^{j-1}); a violation
/// throws std::logic_error. OpenMP-parallel over the c_1 range
/// (workers = 0 uses all hardware threads); output is identical to the
/// serial reference.
std::vector<FfEnumEntry> ff_enumerate(const FieldSpec& field, unsigned k,
                                      unsigned workers = 0);

/// Single-threaded reference implementation with identical output.
std::vector<FfEnumEntry> ff_enumerate_serial(const FieldSpec& field, unsigned k);

/// The chain [0,...,0, inv(2), inv(4)] mod p of length k >= 2, defined when
/// 2^{k-1} | p - 1. It factors as (x^{2^{k-1}} - 1) * x^{2^{k-1}} and has
/// exactly 2^{k-1} + 1 distinct roots, the minimum possible.
SquareChain extremal_chain(const FieldSpec& field, unsigned k);

}  // namespace sqchain
