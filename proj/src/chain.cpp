#include "sqchain/chain.hpp"

#include <stdexcept>
#include <utility>

namespace sqchain {

SquareChain::SquareChain(std::vector<Int> coeffs, std::optional<Int> modulus)
    : coeffs_(std::move(coeffs)), modulus_(std::move(modulus)) {
    if (coeffs_.empty())
        throw std::invalid_argument("square chain needs at least one coefficient");
    if (modulus_) {
        if (*modulus_ < 3)
            throw std::invalid_argument("chain modulus must be >= 3");
        for (Int& c : coeffs_)
            mpz_mod(c.get_mpz_t(), c.get_mpz_t(), modulus_->get_mpz_t());
    }
}

Int eval_chain(const SquareChain& chain, const Int& x) {
    const auto& mod = chain.modulus();
    Int t = x;
    if (mod) mpz_mod(t.get_mpz_t(), t.get_mpz_t(), mod->get_mpz_t());
    for (const Int& c : chain.coeffs()) {
        t *= t;
        t -= c;
        if (mod) mpz_mod(t.get_mpz_t(), t.get_mpz_t(), mod->get_mpz_t());
    }
    return t;
}

TailResult tail_sets(const SquareChain& chain) {
    if (chain.modulus())
        throw std::invalid_argument("tail_sets expects a chain over Z (no modulus)");
    const std::size_t k = chain.length();

    TailSquareSets ts;
    ts.sets.resize(k + 2);
    ts.sets[k + 1][0] = 1;
    // T_k = {c_k}: the k+1 -> k step is pure convention and does not split.
    ts.sets[k][chain.coeff(k)] = 1;

    static const Int kZero = 0;
    Int root;
    for (std::size_t j = k; j-- > 0;) {  // j = k-1 down to 0, c_0 = 0
        const Int& c = (j == 0) ? kZero : chain.coeff(j);
        Multiset& dst = ts.sets[j];
        for (const auto& [v, m] : ts.sets[j + 1]) {
            if (sgn(v) < 0)
                return {std::nullopt, TailFailure{j + 1, v, FailureReason::negative}};
            if (!is_perfect_square(v, root))
                return {std::nullopt, TailFailure{j + 1, v, FailureReason::non_square}};
            dst[c + root] += m;
            dst[c - root] += m;
        }
    }
    return {std::move(ts), std::nullopt};
}

CrumbleReport crumble_check(const SquareChain& chain) {
    CrumbleReport report;
    report.fundamental = chain.fundamental();

    TailResult tr = tail_sets(chain);
    if (!tr.ok()) {
        report.crumbles = false;
        report.failure = std::move(tr.failure);
        return report;
    }
    report.crumbles = true;
    report.roots = std::move(tr.sets->sets[0]);
    report.distinct_root_count = report.roots.size();
    return report;
}

Int distinct_root_lower_bound(unsigned k) {
    if (k == 0) throw std::invalid_argument("chain length must be >= 1");
    return pow2(k - 1) + 1;
}

}  // namespace sqchain
