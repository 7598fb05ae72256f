#include "sqchain/ffield.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "sqchain/numtheory.hpp"

namespace sqchain {

FieldSpec::FieldSpec(Int prime) : p(std::move(prime)) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()) ||
        mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("field order must be an odd prime");
}

namespace {

const Int& validated_prime_modulus(const SquareChain& chain) {
    if (!chain.modulus())
        throw std::invalid_argument("expected a chain with a prime modulus");
    const Int& p = *chain.modulus();
    if (mpz_even_p(p.get_mpz_t()) || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("chain modulus must be an odd prime");
    return p;
}

}  // namespace

TailResult ff_tail_sets(const SquareChain& chain, RootBranch branch) {
    const Int& p = validated_prime_modulus(chain);
    const std::size_t k = chain.length();

    TailSquareSets ts;
    ts.sets.resize(k + 2);
    ts.sets[k + 1][0] = 1;
    ts.sets[k][chain.coeff(k)] = 1;

    static const Int kZero = 0;
    for (std::size_t j = k; j-- > 0;) {
        const Int& c = (j == 0) ? kZero : chain.coeff(j);
        Multiset& dst = ts.sets[j];
        for (const auto& [v, m] : ts.sets[j + 1]) {
            std::optional<Int> root = mod_sqrt(v, p);
            if (!root)
                return {std::nullopt,
                        TailFailure{j + 1, v, FailureReason::non_square}};
            Int t = (branch == RootBranch::smaller || *root == 0)
                        ? *root
                        : Int(p - *root);
            Int plus = (c + t) % p;
            Int minus = c - t;
            mpz_mod(minus.get_mpz_t(), minus.get_mpz_t(), p.get_mpz_t());
            dst[std::move(plus)] += m;
            dst[std::move(minus)] += m;
        }
    }
    return {std::move(ts), std::nullopt};
}

CrumbleReport ff_crumble_check(const SquareChain& chain) {
    validated_prime_modulus(chain);

    CrumbleReport report;
    report.fundamental = chain.fundamental();
    TailResult tr = ff_tail_sets(chain);
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

namespace {

// Short-field vanishing law: over Z_p a crumbling chain has c_j = 0 for
// every index with p <= 2^{j-1}.
void assert_vanishing(const SquareChain& chain, std::uint64_t p) {
    const std::size_t k = chain.length();
    for (std::size_t j = 1; j <= k; ++j) {
        if (j - 1 < 64 && p <= (1ull << (j - 1)) &&
            sgn(chain.coeff(j)) != 0)
            throw std::logic_error(
                "crumbling chain violates the short-field vanishing law");
    }
}

std::vector<Int> decode_lex(std::uint64_t index, std::uint64_t p, unsigned k) {
    std::vector<Int> coeffs(k);
    for (unsigned j = k; j-- > 0;) {
        coeffs[j] = static_cast<unsigned long>(index % p);
        index /= p;
    }
    return coeffs;
}

std::uint64_t checked_total(const Int& p, unsigned k) {
    if (k == 0) throw std::invalid_argument("enumeration needs k >= 1");
    Int total;
    mpz_pow_ui(total.get_mpz_t(), p.get_mpz_t(), k);
    if (total > kFfEnumerationCap)
        throw std::invalid_argument("enumeration larger than 10^7 chains");
    return mpz_get_ui(total.get_mpz_t());
}

}  // namespace

std::vector<FfEnumEntry> ff_enumerate_serial(const FieldSpec& field, unsigned k) {
    const std::uint64_t total = checked_total(field.p, k);
    const std::uint64_t p = mpz_get_ui(field.p.get_mpz_t());

    std::vector<FfEnumEntry> out;
    for (std::uint64_t i = 0; i < total; ++i) {
        SquareChain chain(decode_lex(i, p, k), field.p);
        CrumbleReport report = ff_crumble_check(chain);
        if (!report.crumbles) continue;
        assert_vanishing(chain, p);
        out.push_back({std::move(chain), std::move(report)});
    }
    return out;
}

std::vector<FfEnumEntry> ff_enumerate(const FieldSpec& field, unsigned k,
                                      unsigned workers) {
    const std::uint64_t total = checked_total(field.p, k);
    const std::uint64_t p = mpz_get_ui(field.p.get_mpz_t());
    const int threads = workers == 0 ? omp_get_max_threads()
                                     : static_cast<int>(workers);

    // Contiguous blocks of the flat (lexicographic) index space; one output
    // slot per block keeps the merge deterministic for any worker count.
    const std::uint64_t nblocks = std::min<std::uint64_t>(total, 1024);
    std::vector<std::vector<FfEnumEntry>> blocks(nblocks);

#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::uint64_t b = 0; b < nblocks; ++b) {
        std::vector<FfEnumEntry>& local = blocks[b];
        const std::uint64_t begin = total / nblocks * b + std::min(b, total % nblocks);
        const std::uint64_t count = total / nblocks + (b < total % nblocks ? 1 : 0);
        for (std::uint64_t i = begin; i < begin + count; ++i) {
            SquareChain chain(decode_lex(i, p, k), field.p);
            CrumbleReport report = ff_crumble_check(chain);
            if (!report.crumbles) continue;
            assert_vanishing(chain, p);
            local.push_back({std::move(chain), std::move(report)});
        }
    }

    std::vector<FfEnumEntry> out;
    for (auto& block : blocks)
        for (auto& entry : block) out.push_back(std::move(entry));
    return out;
}

SquareChain extremal_chain(const FieldSpec& field, unsigned k) {
    if (k < 2)
        throw std::invalid_argument("extremal_chain needs k >= 2");
    if (k - 1 >= 64)
        throw std::invalid_argument("extremal_chain limited to k <= 64");
    const Int order = pow2(k - 1);
    const Int pm1 = field.p - 1;
    if (!mpz_divisible_p(pm1.get_mpz_t(), order.get_mpz_t()))
        throw std::invalid_argument(
            "extremal_chain needs 2^{k-1} to divide p - 1");

    std::vector<Int> coeffs(k, 0);
    coeffs[k - 2] = *mod_inv(2, field.p);
    coeffs[k - 1] = *mod_inv(4 % field.p, field.p);
    return SquareChain(std::move(coeffs), field.p);
}

}  // namespace sqchain
