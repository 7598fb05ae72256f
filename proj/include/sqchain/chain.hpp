#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sqchain/bigint.hpp"

namespace sqchain {

/// Multiset of integers, value -> multiplicity (> 0). Iteration is in
/// ascending value order, which makes every consumer deterministic.
using Multiset = std::map<Int, Int>;

/// P(x) = ((...((x^2 - c_1)^2 - c_2)^2 ...)^2 - c_{k-1})^2 - c_k,
/// optionally with all arithmetic done mod n.
class SquareChain {
public:
    /// k = coeffs.size() >= 1. With a modulus (n >= 3) every coefficient is
    /// reduced into [0, n) at construction.
    explicit SquareChain(std::vector<Int> coeffs,
                         std::optional<Int> modulus = std::nullopt);

    std::size_t length() const { return coeffs_.size(); }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const std::optional<Int>& modulus() const { return modulus_; }

    /// 1-based accessor: coeff(j) = c_j, 1 <= j <= k.
    const Int& coeff(std::size_t j) const { return coeffs_.at(j - 1); }

    /// c_k != 0: the chain is not a padded shorter chain.
    bool fundamental() const { return sgn(coeffs_.back()) != 0; }

    bool operator==(const SquareChain& other) const {
        return coeffs_ == other.coeffs_ && modulus_ == other.modulus_;
    }

private:
    std::vector<Int> coeffs_;
    std::optional<Int> modulus_;
};

/// Evaluate P(x) with exactly k squarings (mod n if the chain has a modulus;
/// intermediates are reduced after every squaring and subtraction).
Int eval_chain(const SquareChain& chain, const Int& x);

enum class FailureReason { negative, non_square };

/// Why the tail recursion stopped: sets[index] contains `value`, which is
/// negative or not a perfect square (over Z_p: not a quadratic residue).
struct TailFailure {
    std::size_t index = 0;
    Int value;
    FailureReason reason = FailureReason::non_square;
};

/// The multiset sequence T_{k+1}, T_k, ..., T_0.
///
/// T_{k+1} = {0:1} by convention and T_k = {c_k:1}; from there each level
/// splits every value: T_j accumulates c_j + t and c_j - t (multiplicity
/// preserved per branch) over t^2 in T_{j+1}, with c_0 = 0. Total
/// multiplicity of T_j is 2^{k-j}, and T_0 is the root multiset.
struct TailSquareSets {
    std::vector<Multiset> sets;  // index j in [0, k+1]

    const Multiset& at(std::size_t j) const { return sets.at(j); }
};

/// Exactly one of `sets` / `failure` is engaged.
struct TailResult {
    std::optional<TailSquareSets> sets;
    std::optional<TailFailure> failure;

    bool ok() const { return sets.has_value(); }
};

/// Decompose a chain over Z into tail square sets, or report the first
/// offending tail value (ascending-value order within a level).
TailResult tail_sets(const SquareChain& chain);

struct CrumbleReport {
    bool crumbles = false;
    Multiset roots;  // engaged iff crumbles; total multiplicity 2^k
    std::optional<TailFailure> failure;  // engaged iff !crumbles
    std::size_t distinct_root_count = 0;
    bool fundamental = false;  // c_k != 0
};

/// Does P factor into 2^k (not necessarily distinct) linear factors over Z?
CrumbleReport crumble_check(const SquareChain& chain);

/// Minimum number of distinct roots of a fundamental crumbling chain of
/// length k: 2^{k-1} + 1.
Int distinct_root_lower_bound(unsigned k);

}  // namespace sqchain
