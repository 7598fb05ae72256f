#pragma once

#include <mpfr.h>

#include <cstdint>

#include "sqchain/bigint.hpp"

namespace sqchain {

/// A real quantity tracked as a rigorous [lower, upper] enclosure.
/// Every accumulation rounds the lower bound down and the upper bound up,
/// so comparisons through `definitely_*` are proofs, not float luck.
class LogBounds {
public:
    explicit LogBounds(mpfr_prec_t prec = 128);
    LogBounds(const LogBounds& other);
    LogBounds& operator=(const LogBounds& other);
    ~LogBounds();

    void set_zero();

    /// Accumulate ln(n), n >= 1.
    void add_ln_ui(std::uint64_t n);

    /// Accumulate e * ln(n).
    void add_ln_ui_scaled(std::uint64_t n, const Int& e);

    /// Accumulate ln(v) for an exact big integer v >= 1.
    void add_ln_z(const Int& v);

    /// lower > q (hence the true value > q).
    bool definitely_greater(const Rat& q) const;

    /// upper <= q (hence the true value <= q).
    bool definitely_at_most(const Rat& q) const;

    /// lower >= x*(1 - 1/(2 ln x)) computed with outward rounding.
    bool definitely_at_least_rs_bound(std::uint64_t x) const;

    /// The lower bound as a double, rounded down (still a true lower bound).
    double lower_as_double() const;
    double upper_as_double() const;

    mpfr_srcptr lower() const { return lo_; }
    mpfr_srcptr upper() const { return hi_; }

private:
    mpfr_t lo_;
    mpfr_t hi_;
    mpfr_prec_t prec_;
};

/// Rigorous enclosure of ln(v), v >= 1.
LogBounds ln_bounds_of(const Int& v, mpfr_prec_t prec = 128);

}  // namespace sqchain
