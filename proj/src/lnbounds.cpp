#include "sqchain/lnbounds.hpp"

namespace sqchain {

LogBounds::LogBounds(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    set_zero();
}

LogBounds::LogBounds(const LogBounds& other) : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

LogBounds& LogBounds::operator=(const LogBounds& other) {
    if (this != &other) {
        mpfr_set_prec(lo_, other.prec_);
        mpfr_set_prec(hi_, other.prec_);
        prec_ = other.prec_;
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

LogBounds::~LogBounds() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void LogBounds::set_zero() {
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

void LogBounds::add_ln_ui(std::uint64_t n) {
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_set_ui(t, n, MPFR_RNDD);  // exact for n < 2^prec
    mpfr_log(t, t, MPFR_RNDD);
    mpfr_add(lo_, lo_, t, MPFR_RNDD);
    mpfr_set_ui(t, n, MPFR_RNDU);
    mpfr_log(t, t, MPFR_RNDU);
    mpfr_add(hi_, hi_, t, MPFR_RNDU);
    mpfr_clear(t);
}

void LogBounds::add_ln_ui_scaled(std::uint64_t n, const Int& e) {
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_set_ui(t, n, MPFR_RNDD);
    mpfr_log(t, t, MPFR_RNDD);
    mpfr_mul_z(t, t, e.get_mpz_t(), MPFR_RNDD);  // ln n > 0, direction kept
    mpfr_add(lo_, lo_, t, MPFR_RNDD);
    mpfr_set_ui(t, n, MPFR_RNDU);
    mpfr_log(t, t, MPFR_RNDU);
    mpfr_mul_z(t, t, e.get_mpz_t(), MPFR_RNDU);
    mpfr_add(hi_, hi_, t, MPFR_RNDU);
    mpfr_clear(t);
}

void LogBounds::add_ln_z(const Int& v) {
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_set_z(t, v.get_mpz_t(), MPFR_RNDD);
    mpfr_log(t, t, MPFR_RNDD);
    mpfr_add(lo_, lo_, t, MPFR_RNDD);
    mpfr_set_z(t, v.get_mpz_t(), MPFR_RNDU);
    mpfr_log(t, t, MPFR_RNDU);
    mpfr_add(hi_, hi_, t, MPFR_RNDU);
    mpfr_clear(t);
}

bool LogBounds::definitely_greater(const Rat& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0;
}

bool LogBounds::definitely_at_most(const Rat& q) const {
    return mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0;
}

bool LogBounds::definitely_at_least_rs_bound(std::uint64_t x) const {
    // Upper bound of x - x/(2 ln x): subtract a lower bound of the fraction.
    mpfr_t lnx, frac, rhs;
    mpfr_init2(lnx, prec_);
    mpfr_init2(frac, prec_);
    mpfr_init2(rhs, prec_);

    mpfr_set_ui(lnx, x, MPFR_RNDU);
    mpfr_log(lnx, lnx, MPFR_RNDU);
    mpfr_mul_ui(lnx, lnx, 2, MPFR_RNDU);
    mpfr_ui_div(frac, x, lnx, MPFR_RNDD);
    mpfr_ui_sub(rhs, x, frac, MPFR_RNDU);

    const bool holds = mpfr_cmp(lo_, rhs) >= 0;
    mpfr_clear(lnx);
    mpfr_clear(frac);
    mpfr_clear(rhs);
    return holds;
}

double LogBounds::lower_as_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }

double LogBounds::upper_as_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

LogBounds ln_bounds_of(const Int& v, mpfr_prec_t prec) {
    LogBounds b(prec);
    b.add_ln_z(v);
    return b;
}

}  // namespace sqchain
