#include "beurling/expsum.hpp"

#include "beurling/errors.hpp"

#include <limits>
#include <utility>

namespace beurling {

// ---------------------------------------------------------------------------
// numeric helpers

std::int64_t to_int64(const BigInt &value)
{
    if (!mpz_fits_slong_p(value.get_mpz_t())) {
        throw ResourceLimit("integer " + value.get_str() + " exceeds the 64-bit range");
    }
    return static_cast<std::int64_t>(mpz_get_si(value.get_mpz_t()));
}

BigInt parse_bigint(const std::string &text)
{
    BigInt out;
    const std::string trimmed = text.empty() || text[0] != '+' ? text : text.substr(1);
    if (trimmed.empty() || out.set_str(trimmed, 10) != 0) {
        throw InvalidArgument("not an integer: '" + text + "'");
    }
    return out;
}

Rational parse_rational(const std::string &text)
{
    Rational out;
    const std::string trimmed = text.empty() || text[0] != '+' ? text : text.substr(1);
    if (trimmed.empty() || out.set_str(trimmed, 10) != 0) {
        throw InvalidArgument("not a rational: '" + text + "'");
    }
    if (out.get_den() == 0) {
        throw InvalidArgument("zero denominator: '" + text + "'");
    }
    out.canonicalize();
    return out;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw ResourceLimit("exponent overflow");
    }
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw ResourceLimit("exponent overflow");
    }
    return out;
}

BigInt pow_signed_base(const BigInt &base, unsigned long n)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), n);
    return out;
}

// e^m enclosures are reused heavily (norms, Cesaro sums); one table per thread.
const CertifiedInterval &cached_exp(std::int64_t exponent, mpfr_prec_t precision)
{
    thread_local std::map<std::pair<mpfr_prec_t, std::int64_t>, CertifiedInterval> table;
    auto key = std::make_pair(precision, exponent);
    auto it = table.find(key);
    if (it == table.end()) {
        if (table.size() > 100000) {
            table.clear();
        }
        it = table.emplace(key, CertifiedInterval::exp_of(exponent, precision)).first;
    }
    return it->second;
}

std::string exponent_token(std::int64_t exponent) { return "e^" + std::to_string(exponent); }

} // namespace

// ---------------------------------------------------------------------------
// ExactExpValue

ExactExpValue ExactExpValue::pow(std::int64_t n) const
{
    if (mantissa == 0) {
        if (n <= 0) {
            throw InvalidArgument("zero raised to a non-positive power");
        }
        return {Rational(0), 0};
    }
    const unsigned long magnitude = static_cast<unsigned long>(n < 0 ? -n : n);
    Rational q(pow_signed_base(mantissa.get_num(), magnitude), pow_signed_base(mantissa.get_den(), magnitude));
    q.canonicalize();
    if (n < 0) {
        q = 1 / q;
    }
    return {q, checked_mul(exponent, n)};
}

ExactExpValue ExactExpValue::inverse() const
{
    if (mantissa == 0) {
        throw InvalidArgument("inverse of zero");
    }
    return {1 / mantissa, -exponent};
}

CertifiedInterval ExactExpValue::enclose(mpfr_prec_t precision) const
{
    if (exponent == 0) {
        return CertifiedInterval::point(mantissa, precision);
    }
    return CertifiedInterval::point(mantissa, precision) * cached_exp(exponent, precision);
}

std::string ExactExpValue::to_string() const { return ExpSum(*this).to_string(); }

// ---------------------------------------------------------------------------
// ExpSum

ExpSum::ExpSum(const Rational &constant)
{
    add_term(constant, 0);
}

ExpSum::ExpSum(const ExactExpValue &value)
{
    add_term(value.mantissa, value.exponent);
}

ExpSum ExpSum::term(const Rational &coefficient, std::int64_t exponent)
{
    ExpSum out;
    out.add_term(coefficient, exponent);
    return out;
}

Rational ExpSum::rational_value() const
{
    if (!is_rational()) {
        throw InvalidArgument("ExpSum " + to_string() + " is not rational");
    }
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational ExpSum::coefficient(std::int64_t exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ExpSum::add_term(const Rational &coefficient, std::int64_t exponent)
{
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

ExpSum &ExpSum::operator+=(const ExpSum &other)
{
    for (const auto &[m, c] : other.terms_) {
        add_term(c, m);
    }
    return *this;
}

ExpSum &ExpSum::operator-=(const ExpSum &other)
{
    for (const auto &[m, c] : other.terms_) {
        add_term(-c, m);
    }
    return *this;
}

ExpSum &ExpSum::operator*=(const Rational &scale)
{
    if (scale == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, c] : terms_) {
        c *= scale;
    }
    return *this;
}

ExpSum operator*(const ExpSum &a, const ExpSum &b)
{
    ExpSum out;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            out.add_term(ca * cb, checked_add(ma, mb));
        }
    }
    return out;
}

ExpSum ExpSum::shifted(std::int64_t exponent_shift) const
{
    ExpSum out;
    for (const auto &[m, c] : terms_) {
        out.terms_.emplace(checked_add(m, exponent_shift), c);
    }
    return out;
}

CertifiedInterval ExpSum::enclose(mpfr_prec_t precision) const
{
    CertifiedInterval total(precision);
    for (const auto &[m, c] : terms_) {
        if (m == 0) {
            total = total + CertifiedInterval::point(c, precision);
        } else {
            total = total + CertifiedInterval::point(c, precision) * cached_exp(m, precision);
        }
    }
    return total;
}

std::string ExpSum::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[m, c] = *it;
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (m == 0) {
            out += beurling::to_string(magnitude);
        } else if (magnitude == 1) {
            out += exponent_token(m);
        } else {
            out += beurling::to_string(magnitude) + "*" + exponent_token(m);
        }
    }
    return out;
}

ExpSum ExpSum::parse(const std::string &text)
{
    std::string compact;
    for (char ch : text) {
        if (ch != ' ') {
            compact += ch;
        }
    }
    if (compact.empty()) {
        throw InvalidArgument("empty ExpSum");
    }
    if (compact == "0") {
        return {};
    }
    ExpSum out;
    std::size_t pos = 0;
    while (pos < compact.size()) {
        int sign = 1;
        if (compact[pos] == '+' || compact[pos] == '-') {
            sign = compact[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::size_t end = pos;
        while (end < compact.size() &&
               !((compact[end] == '+' || compact[end] == '-') && end > pos && compact[end - 1] != '^')) {
            ++end;
        }
        const std::string token = compact.substr(pos, end - pos);
        pos = end;
        if (token.empty()) {
            throw InvalidArgument("malformed ExpSum '" + text + "'");
        }
        Rational coefficient(1);
        std::int64_t exponent = 0;
        const auto epos = token.find("e^");
        if (epos == std::string::npos) {
            coefficient = parse_rational(token);
        } else {
            if (epos > 0) {
                if (epos < 2 || token[epos - 1] != '*') {
                    throw InvalidArgument("malformed ExpSum term '" + token + "'");
                }
                coefficient = parse_rational(token.substr(0, epos - 1));
            }
            exponent = to_int64(parse_bigint(token.substr(epos + 2)));
        }
        out.add_term(sign < 0 ? Rational(-coefficient) : coefficient, exponent);
    }
    return out;
}

// ---------------------------------------------------------------------------
// signs

const char *to_string(Sign sign)
{
    switch (sign) {
    case Sign::negative:
        return "negative";
    case Sign::zero:
        return "zero";
    case Sign::positive:
        return "positive";
    case Sign::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

Sign certified_sign(const ExpSum &value, const CertifyPolicy &policy)
{
    if (value.is_zero()) {
        return Sign::zero;
    }
    bool all_positive = true;
    bool all_negative = true;
    for (const auto &[m, c] : value.terms()) {
        all_positive = all_positive && c > 0;
        all_negative = all_negative && c < 0;
    }
    if (all_positive) {
        return Sign::positive;
    }
    if (all_negative) {
        return Sign::negative;
    }
    for (mpfr_prec_t precision = policy.start_bits; precision <= policy.ceiling_bits; precision *= 2) {
        const CertifiedInterval enclosure = value.enclose(precision);
        if (enclosure.certainly_positive()) {
            return Sign::positive;
        }
        if (enclosure.certainly_negative()) {
            return Sign::negative;
        }
    }
    return Sign::inconclusive;
}

std::string ExpRatio::to_string() const
{
    if (num.is_rational() && den.is_rational()) {
        return beurling::to_string(Rational(num.rational_value() / den.rational_value()));
    }
    if (den == ExpSum(Rational(1))) {
        return num.to_string();
    }
    return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

Sign certified_compare(const ExpRatio &ratio, const Rational &q, const CertifyPolicy &policy)
{
    return certified_sign(ratio.num - ratio.den * q, policy);
}

Sign certified_compare_abs(const ExpRatio &ratio, const Rational &q, const CertifyPolicy &policy)
{
    const Sign numerator_sign = certified_sign(ratio.num, policy);
    switch (numerator_sign) {
    case Sign::zero:
        return q > 0 ? Sign::negative : (q == 0 ? Sign::zero : Sign::positive);
    case Sign::positive:
        return certified_sign(ratio.num - ratio.den * q, policy);
    case Sign::negative:
        return certified_sign(-ratio.num - ratio.den * q, policy);
    case Sign::inconclusive:
        break;
    }
    return Sign::inconclusive;
}

} // namespace beurling
