#include "beurling/interval.hpp"

#include "beurling/errors.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace beurling {

namespace {

mpfr_prec_t joint_precision(const CertifiedInterval &a, const CertifiedInterval &b)
{
    return std::max(a.precision(), b.precision());
}

} // namespace

CertifiedInterval::CertifiedInterval(mpfr_prec_t precision)
{
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

CertifiedInterval::CertifiedInterval(const CertifiedInterval &other)
{
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

CertifiedInterval::CertifiedInterval(CertifiedInterval &&other) noexcept
{
    mpfr_init2(lo_, MPFR_PREC_MIN);
    mpfr_init2(hi_, MPFR_PREC_MIN);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

CertifiedInterval &CertifiedInterval::operator=(CertifiedInterval other) noexcept
{
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

CertifiedInterval::~CertifiedInterval()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

CertifiedInterval CertifiedInterval::point(const Rational &value, mpfr_prec_t precision)
{
    CertifiedInterval out(precision);
    mpfr_set_q(out.lo_, value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_, value.get_mpq_t(), MPFR_RNDU);
    return out;
}

CertifiedInterval CertifiedInterval::hull(const CertifiedInterval &a, const CertifiedInterval &b)
{
    CertifiedInterval out(joint_precision(a, b));
    mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
}

CertifiedInterval CertifiedInterval::exp_of(std::int64_t exponent, mpfr_prec_t precision)
{
    CertifiedInterval out(precision);
    mpfr_t x;
    mpfr_init2(x, 80);
    mpfr_set_si(x, static_cast<long>(exponent), MPFR_RNDN); // exact for |exponent| < 2^63
    mpfr_exp(out.lo_, x, MPFR_RNDD);
    mpfr_exp(out.hi_, x, MPFR_RNDU);
    mpfr_clear(x);
    return out;
}

CertifiedInterval CertifiedInterval::exp_of(const Rational &value, mpfr_prec_t precision)
{
    CertifiedInterval arg = point(value, precision + 16);
    CertifiedInterval out(precision);
    mpfr_exp(out.lo_, arg.lo_, MPFR_RNDD);
    mpfr_exp(out.hi_, arg.hi_, MPFR_RNDU);
    return out;
}

CertifiedInterval operator+(const CertifiedInterval &a, const CertifiedInterval &b)
{
    CertifiedInterval out(joint_precision(a, b));
    mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
}

CertifiedInterval operator-(const CertifiedInterval &a, const CertifiedInterval &b)
{
    CertifiedInterval out(joint_precision(a, b));
    mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return out;
}

CertifiedInterval operator*(const CertifiedInterval &a, const CertifiedInterval &b)
{
    const mpfr_prec_t precision = joint_precision(a, b);
    CertifiedInterval out(precision);
    mpfr_t down, up;
    mpfr_init2(down, precision);
    mpfr_init2(up, precision);
    bool first = true;
    for (mpfr_srcptr x : {a.lo_, a.hi_}) {
        for (mpfr_srcptr y : {b.lo_, b.hi_}) {
            mpfr_mul(down, x, y, MPFR_RNDD);
            mpfr_mul(up, x, y, MPFR_RNDU);
            if (first) {
                mpfr_set(out.lo_, down, MPFR_RNDD);
                mpfr_set(out.hi_, up, MPFR_RNDU);
                first = false;
            } else {
                mpfr_min(out.lo_, out.lo_, down, MPFR_RNDD);
                mpfr_max(out.hi_, out.hi_, up, MPFR_RNDU);
            }
        }
    }
    mpfr_clear(down);
    mpfr_clear(up);
    return out;
}

CertifiedInterval operator/(const CertifiedInterval &a, const CertifiedInterval &b)
{
    if (b.contains_zero()) {
        throw Inconclusive("interval division by an enclosure containing zero");
    }
    const mpfr_prec_t precision = joint_precision(a, b);
    CertifiedInterval out(precision);
    mpfr_t down, up;
    mpfr_init2(down, precision);
    mpfr_init2(up, precision);
    bool first = true;
    for (mpfr_srcptr x : {a.lo_, a.hi_}) {
        for (mpfr_srcptr y : {b.lo_, b.hi_}) {
            mpfr_div(down, x, y, MPFR_RNDD);
            mpfr_div(up, x, y, MPFR_RNDU);
            if (first) {
                mpfr_set(out.lo_, down, MPFR_RNDD);
                mpfr_set(out.hi_, up, MPFR_RNDU);
                first = false;
            } else {
                mpfr_min(out.lo_, out.lo_, down, MPFR_RNDD);
                mpfr_max(out.hi_, out.hi_, up, MPFR_RNDU);
            }
        }
    }
    mpfr_clear(down);
    mpfr_clear(up);
    return out;
}

CertifiedInterval CertifiedInterval::root(unsigned long n) const
{
    if (n == 0) {
        throw InvalidArgument("root of order zero");
    }
    if (mpfr_sgn(hi_) < 0) {
        throw InvalidArgument("root of a negative enclosure");
    }
    CertifiedInterval out(precision());
    if (mpfr_sgn(lo_) <= 0) {
        mpfr_set_zero(out.lo_, 1);
    } else {
        mpfr_rootn_ui(out.lo_, lo_, n, MPFR_RNDD);
    }
    mpfr_rootn_ui(out.hi_, hi_, n, MPFR_RNDU);
    return out;
}

CertifiedInterval CertifiedInterval::min_with(const CertifiedInterval &other) const
{
    CertifiedInterval out(joint_precision(*this, other));
    mpfr_min(out.lo_, lo_, other.lo_, MPFR_RNDD);
    mpfr_min(out.hi_, hi_, other.hi_, MPFR_RNDU);
    return out;
}

CertifiedInterval CertifiedInterval::max_with(const CertifiedInterval &other) const
{
    CertifiedInterval out(joint_precision(*this, other));
    mpfr_max(out.lo_, lo_, other.lo_, MPFR_RNDD);
    mpfr_max(out.hi_, hi_, other.hi_, MPFR_RNDU);
    return out;
}

bool CertifiedInterval::contains(const Rational &value) const
{
    return mpfr_cmp_q(lo_, value.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, value.get_mpq_t()) >= 0;
}

Rational CertifiedInterval::lower_exact() const
{
    Rational q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return q;
}

Rational CertifiedInterval::upper_exact() const
{
    Rational q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return q;
}

std::string CertifiedInterval::to_string(int digits) const
{
    std::vector<char> buffer(static_cast<std::size_t>(digits) + 64);
    std::string out = "[";
    mpfr_snprintf(buffer.data(), buffer.size(), "%.*RDg", digits, lo_);
    out += buffer.data();
    out += ", ";
    mpfr_snprintf(buffer.data(), buffer.size(), "%.*RUg", digits, hi_);
    out += buffer.data();
    out += "]";
    return out;
}

} // namespace beurling
