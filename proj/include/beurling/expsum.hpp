#pragma once

#include "beurling/interval.hpp"
#include "beurling/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace beurling {

// q * e^m with q rational and m an integer. Weight values e^{eta(n)},
// e^{|n|} and their rescalings all have this shape.
struct ExactExpValue {
    Rational mantissa{1};
    std::int64_t exponent{0};

    static ExactExpValue one() { return {Rational(1), 0}; }
    static ExactExpValue e_power(std::int64_t m) { return {Rational(1), m}; }

    ExactExpValue pow(std::int64_t n) const;
    ExactExpValue inverse() const;

    friend ExactExpValue operator*(const ExactExpValue &a, const ExactExpValue &b)
    {
        return {a.mantissa * b.mantissa, a.exponent + b.exponent};
    }
    friend ExactExpValue operator/(const ExactExpValue &a, const ExactExpValue &b)
    {
        return {a.mantissa / b.mantissa, a.exponent - b.exponent};
    }
    friend bool operator==(const ExactExpValue &a, const ExactExpValue &b)
    {
        return (a.mantissa == 0 && b.mantissa == 0) ||
               (a.mantissa == b.mantissa && a.exponent == b.exponent);
    }

    CertifiedInterval enclose(mpfr_prec_t precision) const;
    std::string to_string() const;
};

// Finite sum  sum_m c_m e^m  with rational c_m.  Zero iff every coefficient is zero;
// only signs of nonzero sums go through intervals.
class ExpSum {
public:
    ExpSum() = default;
    ExpSum(const Rational &constant);
    ExpSum(const ExactExpValue &value);
    static ExpSum term(const Rational &coefficient, std::int64_t exponent);

    const std::map<std::int64_t, Rational> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    Rational rational_value() const; // requires is_rational()
    Rational coefficient(std::int64_t exponent) const;

    void add_term(const Rational &coefficient, std::int64_t exponent);

    ExpSum &operator+=(const ExpSum &other);
    ExpSum &operator-=(const ExpSum &other);
    ExpSum &operator*=(const Rational &scale);
    friend ExpSum operator+(ExpSum a, const ExpSum &b) { return a += b; }
    friend ExpSum operator-(ExpSum a, const ExpSum &b) { return a -= b; }
    friend ExpSum operator-(ExpSum a)
    {
        a *= Rational(-1);
        return a;
    }
    friend ExpSum operator*(const ExpSum &a, const ExpSum &b);
    friend ExpSum operator*(ExpSum a, const Rational &q) { return a *= q; }
    friend ExpSum operator*(const Rational &q, ExpSum a) { return a *= q; }
    friend bool operator==(const ExpSum &a, const ExpSum &b) { return a.terms_ == b.terms_; }

    ExpSum shifted(std::int64_t exponent_shift) const;

    CertifiedInterval enclose(mpfr_prec_t precision) const;

    // "3*e^2 + e - 1/2*e^-1 + 4"; zero prints as "0".
    std::string to_string() const;
    static ExpSum parse(const std::string &text);

private:
    std::map<std::int64_t, Rational> terms_;
};

enum class Sign { negative, zero, positive, inconclusive };

const char *to_string(Sign sign);

// Precision escalation for deciding signs of nonzero ExpSums.
struct CertifyPolicy {
    mpfr_prec_t start_bits = 64;
    mpfr_prec_t ceiling_bits = 1 << 14;
};

Sign certified_sign(const ExpSum &value, const CertifyPolicy &policy = {});

// sign(a - b)
inline Sign certified_compare(const ExpSum &a, const ExpSum &b, const CertifyPolicy &policy = {})
{
    return certified_sign(a - b, policy);
}

// Exact quotient num/den of two ExpSums with den > 0.
struct ExpRatio {
    ExpSum num;
    ExpSum den{Rational(1)};

    bool is_zero() const { return num.is_zero(); }
    std::string to_string() const;
};

// sign(ratio - q), den assumed positive.
Sign certified_compare(const ExpRatio &ratio, const Rational &q, const CertifyPolicy &policy = {});
// sign(|ratio| - q)
Sign certified_compare_abs(const ExpRatio &ratio, const Rational &q, const CertifyPolicy &policy = {});

} // namespace beurling
