#include "sqchain/certify.hpp"

#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>

#include <mpfr.h>

#include "sqchain/lnbounds.hpp"

namespace sqchain {

const char* check_id_name(CheckId id) {
    switch (id) {
        case CheckId::parity: return "parity";
        case CheckId::primorial: return "primorial";
        case CheckId::divisor_d: return "divisor-d";
        case CheckId::valuation_3mod4: return "valuation-3mod4";
        case CheckId::evenness_3mod4: return "evenness-3mod4";
        case CheckId::two_squares: return "two-squares";
        case CheckId::ordering: return "ordering";
        case CheckId::positivity: return "positivity";
    }
    return "?";
}

namespace {

unsigned long valuation_u64(const Int& n, std::uint64_t p) {
    Int reduced, pz(static_cast<unsigned long>(p));
    return mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
}

// ---- deterministic 64-bit factorization (trial + Brent's rho) ----

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic witness set for all 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { std::uint64_t t = a % b; a = b; b = t; }
    return a;
}

std::uint64_t brent_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) { x = y; power <<= 1; lam = 0; }
            y = (mulmod_u64(y, y, n) + c) % n;
            ++lam;
            d = gcd_u64(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_u64(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
    if (n <= 1) return;
    if (is_prime_u64(n)) { ++out[n]; return; }
    for (std::uint64_t p = 2; p < 100 && p * p <= n; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) { ++out[p]; n /= p; }
    }
    if (n == 1) return;
    if (is_prime_u64(n)) { ++out[n]; return; }
    std::uint64_t d = brent_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

bool fits_u64(const Int& v) { return mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

}  // namespace

DivisibilityCertificate certify_chain(const SquareChain& chain,
                                      bool known_crumbling,
                                      const PrimeTable& table,
                                      const CertifyOptions& options) {
    if (chain.modulus())
        throw std::invalid_argument("certify_chain expects a chain over Z");

    const std::size_t k = chain.length();
    DivisibilityCertificate cert;
    cert.known_crumbling = known_crumbling;
    cert.evenness_scan_limit = options.evenness_scan_limit;
    cert.overall = true;

    std::size_t last_nonzero = 0;
    for (std::size_t j = 1; j <= k; ++j)
        if (sgn(chain.coeff(j)) != 0) last_nonzero = j;

    auto add = [&](std::size_t j, CheckId id, std::string required, bool holds,
                   std::vector<Int> witness) {
        cert.overall = cert.overall && holds;
        cert.checks.push_back(
            {j, id, std::move(required), holds, std::move(witness)});
    };

    for (std::size_t j = 1; j <= k; ++j) {
        const Int& c = chain.coeff(j);
        const bool zero = sgn(c) == 0;
        const std::string cj = "c_" + std::to_string(j);

        if (j >= 2) {
            const bool holds = zero || mpz_even_p(c.get_mpz_t());
            add(j, CheckId::parity, "2 | " + cj, holds, holds ? std::vector<Int>{} : std::vector<Int>{c});
        }

        {
            bool holds = true;
            std::vector<Int> witness;
            if (!zero) {
                const std::uint64_t bound = 1ull << (j - 1);
                Int prim = primorial(table, bound);
                holds = mpz_divisible_p(c.get_mpz_t(), prim.get_mpz_t()) != 0;
                if (!holds) witness = {prim, c};
            }
            add(j, CheckId::primorial,
                "2^" + std::to_string(j - 1) + "# | " + cj, holds, std::move(witness));
        }

        if (j <= kDivisorDMaterializeLimit) {
            bool holds = true;
            std::vector<Int> witness;
            if (!zero) {
                Int d = divisor_D(table, static_cast<unsigned>(j));
                holds = mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()) != 0;
                if (!holds) witness = {d, c};
            }
            add(j, CheckId::divisor_d, "D_" + std::to_string(j) + " | " + cj,
                holds, std::move(witness));
        }

        if (!zero) {
            bool holds = true;
            std::vector<Int> witness;
            const std::uint64_t bound = 1ull << (j - 1);
            for (std::uint64_t p : table.primes) {
                if (p > bound) break;
                if (p % 4 != 3) continue;
                const unsigned long need = 1ul << (j - ceil_lg(Int(static_cast<unsigned long>(p))));
                const unsigned long got = valuation_u64(c, p);
                if (got < need) {
                    holds = false;
                    witness = {Int(static_cast<unsigned long>(p)), Int(got), Int(need)};
                    break;
                }
            }
            add(j, CheckId::valuation_3mod4,
                "nu_p(" + cj + ") >= 2^(" + std::to_string(j) +
                    "-ceil_lg p) for p = 3 (mod 4), p <= 2^" + std::to_string(j - 1),
                holds, std::move(witness));
        }

        bool evenness_holds = true;       // outcome of the scan, reused by (e)
        std::vector<Int> evenness_witness;
        if (!zero) {
            const Int acopy = abs(c);
            if (fits_u64(acopy)) {
                std::map<std::uint64_t, unsigned> factors;
                factor_u64(mpz_get_ui(acopy.get_mpz_t()), factors);
                for (const auto& [p, e] : factors) {
                    if (p % 4 == 3 && e % 2 != 0) {
                        evenness_holds = false;
                        evenness_witness = {Int(static_cast<unsigned long>(p)), Int(e)};
                        break;
                    }
                }
            } else {
                for (std::uint64_t p : table.primes) {
                    if (p > options.evenness_scan_limit) break;
                    if (p % 4 != 3) continue;
                    const unsigned long e = valuation_u64(acopy, p);
                    if (e % 2 != 0) {
                        evenness_holds = false;
                        evenness_witness = {Int(static_cast<unsigned long>(p)), Int(e)};
                        break;
                    }
                }
            }
            add(j, CheckId::evenness_3mod4,
                "nu_p(" + cj + ") even for every p = 3 (mod 4)", evenness_holds,
                std::vector<Int>(evenness_witness));
        }

        {
            // 2*c_j = r^2 + s^2 is decidable from the p = 3 (mod 4)
            // valuations of c_j (the factor 2 never obstructs).
            bool holds;
            std::vector<Int> witness;
            if (zero) {
                holds = true;
            } else if (sgn(c) < 0) {
                holds = false;
                witness = {c};
            } else {
                holds = evenness_holds;
                witness = evenness_witness;
            }
            add(j, CheckId::two_squares, "2*" + cj + " = r^2 + s^2", holds,
                std::move(witness));
        }

        {
            bool holds = sgn(c) >= 0;
            std::vector<Int> witness;
            std::string required = cj + " >= 0";
            if (j < k) {
                const Int& next = chain.coeff(j + 1);
                required += " and " + cj + "^2 >= c_" + std::to_string(j + 1);
                if (c * c < next) holds = false;
                if (!holds) witness = {c, next};
            } else if (!holds) {
                witness = {c};
            }
            add(j, CheckId::ordering, std::move(required), holds, std::move(witness));
        }

        if (j <= last_nonzero) {
            const bool holds = sgn(c) > 0;
            add(j, CheckId::positivity, cj + " > 0", holds,
                holds ? std::vector<Int>{} : std::vector<Int>{c});
        }
    }

    return cert;
}

namespace {

// value must be checked strictly above target; escalate precision rather
// than let the enclosure straddle it.
bool rigorously_greater(const Int& value, const Rat& target) {
    for (mpfr_prec_t prec = 128; prec <= 2048; prec *= 2) {
        LogBounds b = ln_bounds_of(value, prec);
        if (b.definitely_greater(target)) return true;
        if (b.definitely_at_most(target)) return false;
    }
    throw std::logic_error("log enclosure straddles the comparison target");
}

}  // namespace

std::vector<GrowthRow> growth_table(unsigned j_max,
                                    const BoundConstants& constants,
                                    const PrimeTable& table) {
    if (j_max < 3 || j_max > kDivisorDMaterializeLimit)
        throw std::invalid_argument("growth_table needs 3 <= j_max <= 21");

    std::vector<GrowthRow> rows;
    for (unsigned j = 3; j <= j_max; ++j) {
        LogBounds ln_d;
        for (const auto& [p, e] : divisor_D_factored(table, j))
            ln_d.add_ln_ui_scaled(p, e);

        Rat target = constants.lambda * Rat(Int(static_cast<unsigned long>(j)) * pow2(j));
        if (!ln_d.definitely_greater(target))
            throw std::logic_error("growth_table: ln D_j bound failed at j = " +
                                   std::to_string(j));

        GrowthRow row;
        row.j = j;
        row.ln_D_lower = ln_d.lower_as_double();
        row.lambda_j_2j = mpq_get_d(target.get_mpq_t());
        if (j >= 5) row.min_bits = min_bits_estimate(j);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string min_bits_estimate(unsigned j) {
    if (j < 5)
        throw std::invalid_argument("min_bits_estimate is proved only for j >= 5");

    // 2^{j-2} / ln 2, to 3 significant figures.
    mpfr_t num, den;
    mpfr_init2(num, 128);
    mpfr_init2(den, 128);
    mpfr_ui_pow_ui(num, 2, j - 2, MPFR_RNDN);
    mpfr_set_ui(den, 2, MPFR_RNDN);
    mpfr_log(den, den, MPFR_RNDN);
    mpfr_div(num, num, den, MPFR_RNDN);

    mpfr_exp_t exp10 = 0;
    char* digits = mpfr_get_str(nullptr, &exp10, 10, 3, num, MPFR_RNDN);
    std::string mant(digits);
    mpfr_free_str(digits);
    mpfr_clear(num);
    mpfr_clear(den);

    auto trim = [](std::string s) {
        while (s.size() > 1 && s.back() == '0') s.pop_back();
        return s;
    };

    // value = 0.mant * 10^exp10
    if (exp10 >= 1 && exp10 <= 3) {
        std::string head = mant.substr(0, static_cast<std::size_t>(exp10));
        std::string tail = trim(mant.substr(static_cast<std::size_t>(exp10)));
        return tail.empty() || tail == "0" ? head : head + "." + tail;
    }
    std::string head = mant.substr(0, 1);
    std::string tail = trim(mant.substr(1));
    std::string m = (tail.empty() || tail == "0") ? head : head + "." + tail;
    return m + "e" + std::to_string(static_cast<long>(exp10) - 1);
}

bool corollary_bound_check(const SquareChain& chain,
                           const BoundConstants& constants) {
    if (chain.modulus())
        throw std::invalid_argument("corollary_bound_check expects a chain over Z");
    const std::size_t k = chain.length();
    if (k < 3)
        throw std::invalid_argument("corollary_bound_check needs k >= 3");
    if (k > 62)
        throw std::invalid_argument("corollary_bound_check limited to k <= 62");
    const Int& ck = chain.coeff(k);
    if (sgn(ck) <= 0)
        throw std::invalid_argument("corollary_bound_check needs c_k > 0");

    bool all_hold = true;
    for (std::size_t j = 1; j <= k && all_hold; ++j) {
        const Int& c = chain.coeff(j);
        if (sgn(c) <= 0) { all_hold = false; break; }

        // c_j^{2^{k-j}} >= c_k, decided through the exact integer root.
        const unsigned long e = 1ul << (k - j);
        Int root;
        const int exact = mpz_root(root.get_mpz_t(), ck.get_mpz_t(), e);
        const bool chaining = (c > root) || (c == root && exact != 0);

        Rat target = constants.lambda * Rat(Int(static_cast<unsigned long>(k)) * pow2(j));
        const bool growth = rigorously_greater(c, target);

        all_hold = chaining && growth;
    }
    if (!all_hold) return false;

    if (!crumble_check(chain).crumbles)
        throw std::invalid_argument(
            "corollary_bound_check: chain does not crumble");
    return true;
}

}  // namespace sqchain
