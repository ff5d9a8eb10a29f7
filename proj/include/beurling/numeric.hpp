#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace beurling {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt pow2(unsigned long exponent)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
    return out;
}

inline BigInt abs_value(const BigInt &value) { return abs(value); }

inline bool fits_int64(const BigInt &value)
{
    return mpz_sizeinbase(value.get_mpz_t(), 2) <= 62;
}

std::int64_t to_int64(const BigInt &value);

inline std::size_t bit_length(const BigInt &value)
{
    return value == 0 ? 0 : mpz_sizeinbase(value.get_mpz_t(), 2);
}

inline bool test_bit(const BigInt &value, std::size_t position)
{
    return mpz_tstbit(value.get_mpz_t(), position) != 0;
}

inline Rational make_rational(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const BigInt &num, const BigInt &den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational &q) { return q.get_str(); }
inline std::string to_string(const BigInt &z) { return z.get_str(); }

Rational parse_rational(const std::string &text);
BigInt parse_bigint(const std::string &text);

} // namespace beurling
