#include "sqchain/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

#include "sqchain/lnbounds.hpp"

namespace sqchain {

PrimeTable PrimeTable::sieve(std::uint64_t limit) {
    PrimeTable table;
    table.limit = limit;
    if (limit < 2) return table;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) table.primes.push_back(i);
    return table;
}

bool PrimeTable::contains(std::uint64_t n) const {
    if (n > limit)
        throw std::invalid_argument("prime table limit exceeded");
    return std::binary_search(primes.begin(), primes.end(), n);
}

namespace {

void require_limit(const PrimeTable& table, std::uint64_t needed) {
    if (table.limit < needed)
        throw std::invalid_argument("prime table too small (limit " +
                                    std::to_string(table.limit) + ", need " +
                                    std::to_string(needed) + ")");
}

}  // namespace

Int primorial(const PrimeTable& table, std::uint64_t m) {
    if (m >= 2) require_limit(table, m);
    Int r = 1;
    for (std::uint64_t p : table.primes) {
        if (p > m) break;
        r *= p;
    }
    return r;
}

Int primorial_3mod4(const PrimeTable& table, std::uint64_t x) {
    if (x >= 3) require_limit(table, x);
    Int r = 1;
    for (std::uint64_t p : table.primes) {
        if (p > x) break;
        if (p % 4 == 3) r *= p;
    }
    return r;
}

unsigned long nu_p(const Int& p, const Int& n) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("nu_p needs a prime p");
    if (sgn(n) == 0)
        throw std::invalid_argument("nu_p(p, 0) is infinite");
    Int reduced;
    return mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

unsigned ceil_lg(const Int& p) {
    if (p < 2) throw std::invalid_argument("ceil_lg needs p >= 2");
    const std::size_t bits = mpz_sizeinbase(p.get_mpz_t(), 2);  // 2^{bits-1} <= p < 2^bits
    const bool power_of_two = mpz_popcount(p.get_mpz_t()) == 1;
    return static_cast<unsigned>(power_of_two ? bits - 1 : bits);
}

std::vector<std::pair<std::uint64_t, Int>> divisor_D_factored(
    const PrimeTable& table, unsigned j) {
    if (j < 1) throw std::invalid_argument("divisor_D needs j >= 1");
    if (j - 1 >= 64) throw std::invalid_argument("divisor_D limited to j < 65");
    const std::uint64_t bound = 1ull << (j - 1);
    if (bound >= 2) require_limit(table, bound);

    std::vector<std::pair<std::uint64_t, Int>> factors;
    for (std::uint64_t p : table.primes) {
        if (p > bound) break;
        if (p % 4 == 3) {
            // contributes once to 2^{j-1}# and 2^i times for each level
            // 0 <= i <= j-1-ceil_lg(p): total 2^{j-ceil_lg(p)}.
            factors.emplace_back(p, pow2(j - ceil_lg(Int(p))));
        } else {
            factors.emplace_back(p, 1);
        }
    }
    return factors;
}

Int divisor_D(const PrimeTable& table, unsigned j) {
    if (j < 1) throw std::invalid_argument("divisor_D needs j >= 1");
    if (j > kDivisorDMaterializeLimit)
        throw std::invalid_argument(
            "divisor_D materialized only up to j = 21; use the factored form");
    Int r = 1, pe;
    for (const auto& [p, e] : divisor_D_factored(table, j)) {
        mpz_ui_pow_ui(pe.get_mpz_t(), p, e.get_ui());
        r *= pe;
    }
    return r;
}

std::optional<Int> mod_sqrt(const Int& a, const Int& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()) ||
        mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("mod_sqrt needs an odd prime modulus");
    if (sgn(a) < 0 || a >= p)
        throw std::invalid_argument("mod_sqrt needs 0 <= a < p");
    if (sgn(a) == 0) return Int(0);

    const Int legendre_exp = (p - 1) / 2;
    Int t;
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), legendre_exp.get_mpz_t(), p.get_mpz_t());
    if (t != 1) return std::nullopt;  // non-residue (t == p-1)

    // Tonelli-Shanks. p - 1 = q * 2^s with q odd.
    Int q = p - 1;
    unsigned long s = mpz_remove(q.get_mpz_t(), q.get_mpz_t(), Int(2).get_mpz_t());

    Int r, c;
    Int exp = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());

    if (t != 1) {
        // Smallest quadratic non-residue as the auxiliary element.
        Int z = 2, euler;
        while (true) {
            mpz_powm(euler.get_mpz_t(), z.get_mpz_t(), legendre_exp.get_mpz_t(),
                     p.get_mpz_t());
            if (euler == p - 1) break;
            ++z;
        }
        mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());

        unsigned long m = s;
        while (t != 1) {
            Int tt = t;
            unsigned long i = 0;
            while (tt != 1) {
                tt = tt * tt % p;
                if (++i == m) throw std::logic_error("mod_sqrt: not a residue");
            }
            Int b = c;
            for (unsigned long l = 0; l + i + 1 < m; ++l) b = b * b % p;
            m = i;
            c = b * b % p;
            t = t * c % p;
            r = r * b % p;
        }
    }

    // Canonical branch: the smaller of r and p - r.
    Int other = p - r;
    return r <= other ? r : other;
}

std::optional<Int> mod_inv(const Int& a, const Int& n) {
    if (n < 2) throw std::invalid_argument("mod_inv needs n >= 2");
    if (sgn(a) < 0 || a >= n)
        throw std::invalid_argument("mod_inv needs 0 <= a < n");
    Int b;
    if (mpz_invert(b.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0)
        return std::nullopt;
    return b;
}

namespace {

// Largest a >= 0 with a*x/1024 strictly below `bound`, or -1 if none.
long max_feasible_grid(mpfr_srcptr bound, std::uint64_t x) {
    long a = static_cast<long>(mpfr_get_d(bound, MPFR_RNDD) * 1024.0 /
                               static_cast<double>(x));
    auto strictly_below = [&](long cand) {
        if (cand < 0) return true;
        Rat q(static_cast<long>(cand) * static_cast<long>(x), 1024);
        q.canonicalize();
        return mpfr_cmp_q(bound, q.get_mpq_t()) > 0;
    };
    while (strictly_below(a + 1)) ++a;
    while (a >= 0 && !strictly_below(a)) --a;
    return a;
}

}  // namespace

BoundConstants estimate_lambda(std::uint64_t test_limit, const PrimeTable& table) {
    if (test_limit < 563)
        throw std::invalid_argument("estimate_lambda needs test_limit >= 563");
    require_limit(table, test_limit);

    LogBounds full, restricted;
    long a1_lo = -1, a1_hi = -1;      // verified / refutation-side grids, ln(x#)
    long a34_lo = -1, a34_hi = -1;    // same for ln(x#_{3:4})
    bool a1_set = false, a34_set = false;

    for (std::uint64_t x = 2; x <= test_limit; ++x) {
        if (table.contains(x)) {
            full.add_ln_ui(x);
            if (x % 4 == 3) restricted.add_ln_ui(x);
        }
        {
            const long lo = max_feasible_grid(full.lower(), x);
            const long hi = max_feasible_grid(full.upper(), x);
            if (!a1_set || lo < a1_lo) a1_lo = lo;
            if (!a1_set || hi < a1_hi) a1_hi = hi;
            a1_set = true;
        }
        if (x >= 3) {
            const long lo = max_feasible_grid(restricted.lower(), x);
            const long hi = max_feasible_grid(restricted.upper(), x);
            if (!a34_set || lo < a34_lo) a34_lo = lo;
            if (!a34_set || hi < a34_hi) a34_hi = hi;
            a34_set = true;
        }
    }

    // The enclosure must not straddle a grid point, otherwise the "largest"
    // verified constant would depend on rounding and not on the data.
    if (a1_lo != a1_hi || a34_lo != a34_hi)
        throw std::logic_error("estimate_lambda: enclosure straddles the 1/1024 grid");
    if (a1_lo <= 0 || a34_lo <= 0)
        throw std::logic_error("estimate_lambda: constants should be positive");

    BoundConstants constants;
    constants.lambda1 = make_ratio(a1_lo, 1024);
    constants.lambda34 = make_ratio(a34_lo, 1024);
    constants.lambda = std::min(constants.lambda1, constants.lambda34) / 4;
    constants.test_limit = test_limit;
    return constants;
}

bool verify_half_log_primorial(const PrimeTable& table, std::uint64_t lo,
                               std::uint64_t hi) {
    require_limit(table, hi);
    LogBounds sum;
    for (std::uint64_t x = 2; x <= hi; ++x) {
        if (table.contains(x)) sum.add_ln_ui(x);
        if (x < lo) continue;
        Rat half(x, 2);
        half.canonicalize();
        if (!sum.definitely_greater(half)) return false;
    }
    return true;
}

bool verify_rosser_schoenfeld(const PrimeTable& table, std::uint64_t lo,
                              std::uint64_t hi) {
    require_limit(table, hi);
    LogBounds sum;
    for (std::uint64_t x = 2; x <= hi; ++x) {
        if (table.contains(x)) sum.add_ln_ui(x);
        if (x < lo) continue;
        if (!sum.definitely_at_least_rs_bound(x)) return false;
    }
    return true;
}

}  // namespace sqchain
