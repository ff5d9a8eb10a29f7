#pragma once

#include "beurling/numeric.hpp"

#include <mpfr.h>

#include <cstdint>
#include <string>

namespace beurling {

// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds the
// lower endpoint down and the upper endpoint up, so the true value of any
// expression built from exact inputs stays enclosed.
class CertifiedInterval {
public:
    explicit CertifiedInterval(mpfr_prec_t precision = 64);
    CertifiedInterval(const CertifiedInterval &other);
    CertifiedInterval(CertifiedInterval &&other) noexcept;
    CertifiedInterval &operator=(CertifiedInterval other) noexcept;
    ~CertifiedInterval();

    static CertifiedInterval point(const Rational &value, mpfr_prec_t precision);
    static CertifiedInterval hull(const CertifiedInterval &a, const CertifiedInterval &b);
    // Encloses e^exponent.
    static CertifiedInterval exp_of(std::int64_t exponent, mpfr_prec_t precision);
    // Encloses e^value for an exact rational.
    static CertifiedInterval exp_of(const Rational &value, mpfr_prec_t precision);

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

    friend CertifiedInterval operator+(const CertifiedInterval &a, const CertifiedInterval &b);
    friend CertifiedInterval operator-(const CertifiedInterval &a, const CertifiedInterval &b);
    friend CertifiedInterval operator*(const CertifiedInterval &a, const CertifiedInterval &b);
    friend CertifiedInterval operator/(const CertifiedInterval &a, const CertifiedInterval &b);

    // Enclosure of x^(1/n) for an interval with lo >= 0.
    CertifiedInterval root(unsigned long n) const;
    CertifiedInterval min_with(const CertifiedInterval &other) const;
    CertifiedInterval max_with(const CertifiedInterval &other) const;

    bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
    bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
    bool contains_zero() const { return !certainly_positive() && !certainly_negative(); }
    bool certainly_less(const CertifiedInterval &other) const { return mpfr_less_p(hi_, other.lo_) != 0; }
    bool certainly_leq(const CertifiedInterval &other) const { return mpfr_lessequal_p(hi_, other.lo_) != 0; }
    bool contains(const Rational &value) const;

    double lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    // Exact rational value of an endpoint.
    Rational lower_exact() const;
    Rational upper_exact() const;

    std::string to_string(int digits = 12) const;

    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo() { return lo_; }
    mpfr_ptr hi() { return hi_; }

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

} // namespace beurling
