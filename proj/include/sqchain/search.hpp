#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sqchain/chain.hpp"
#include "sqchain/numtheory.hpp"

namespace sqchain {

struct SearchConfig {
    unsigned k = 2;
    Int c1_bound = 0;       // inclusive upper bound on c_1
    bool prune = true;      // discard candidates failing certificate checks
    unsigned workers = 0;   // 0 = all hardware threads
    std::size_t table_cap = 10'000'000;  // max stored intermediate chains
};

/// Crumbling chains of a given length, keyed by all-but-last coefficients;
/// each bucket lists the possible last coefficients, ascending.
using ChainTable = std::map<std::vector<Int>, std::vector<Int>>;

/// Complete table of length-`length` crumbling chains whose c_1 is at most
/// c1_bound (for length 1: last coefficients up to 2*c1_bound, so that every
/// later pairing stays reachable). Throws std::length_error past `cap`.
ChainTable build_chain_table(unsigned length, const Int& c1_bound,
                             std::size_t cap);

/// Every fundamental crumbling chain of length k with c_1 <= c1_bound,
/// sorted lexicographically by coefficients. A length-k chain is exactly a
/// pair of length-(k-1) crumbling chains sharing their first k-2
/// coefficients whose last coefficients a >= b have equal parity; the pair
/// combines to c_{k-1} = (a+b)/2, c_k = ((a-b)/2)^2, fundamental iff a != b.
/// OpenMP-parallel; output is independent of the worker count.
std::vector<SquareChain> search_chains(const SearchConfig& config,
                                       const PrimeTable& table);

/// Single-threaded reference implementation with identical output.
std::vector<SquareChain> search_chains_serial(const SearchConfig& config,
                                              const PrimeTable& table);

/// True iff every result crumbles, is fundamental, has at least
/// 2^{k-1} + 1 distinct roots, and passes every certificate check.
bool verify_search_results(const std::vector<SquareChain>& results,
                           const PrimeTable& table);

}  // namespace sqchain
