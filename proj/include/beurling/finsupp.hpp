#pragma once

#include "beurling/errors.hpp"
#include "beurling/expsum.hpp"
#include "beurling/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace beurling {

inline constexpr std::size_t default_support_cap = 1'000'000;

inline bool coefficient_is_zero(const Rational &c) { return c == 0; }
inline bool coefficient_is_zero(const ExpSum &c) { return c.is_zero(); }

inline std::int64_t key_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw ResourceLimit("support point overflows 64 bits");
    }
    return out;
}

// Finitely supported function Key -> Coeff with no stored zeros.
template <class Key, class Coeff>
class FinSupp {
public:
    using map_type = std::map<Key, Coeff>;

    FinSupp() = default;

    static FinSupp delta(const Key &point, const Coeff &coefficient = Coeff(Rational(1)))
    {
        FinSupp out;
        out.add(point, coefficient);
        return out;
    }

    const map_type &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Coeff at(const Key &point) const
    {
        auto it = terms_.find(point);
        return it == terms_.end() ? Coeff() : it->second;
    }

    void add(const Key &point, const Coeff &coefficient)
    {
        if (coefficient_is_zero(coefficient)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(point, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (coefficient_is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    FinSupp &operator+=(const FinSupp &other)
    {
        for (const auto &[k, c] : other.terms_) {
            add(k, c);
        }
        return *this;
    }

    FinSupp &operator-=(const FinSupp &other)
    {
        for (const auto &[k, c] : other.terms_) {
            add(k, Coeff() - c);
        }
        return *this;
    }

    FinSupp &operator*=(const Rational &scale)
    {
        if (scale == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &[k, c] : terms_) {
            c *= scale;
        }
        return *this;
    }

    friend FinSupp operator+(FinSupp a, const FinSupp &b) { return a += b; }
    friend FinSupp operator-(FinSupp a, const FinSupp &b) { return a -= b; }
    friend FinSupp operator*(FinSupp a, const Rational &q) { return a *= q; }
    friend FinSupp operator*(const Rational &q, FinSupp a) { return a *= q; }
    friend bool operator==(const FinSupp &a, const FinSupp &b) { return a.terms_ == b.terms_; }

private:
    map_type terms_;
};

// (f*g)(n) = sum_m f(m) g(n-m).  Throws ResourceLimit past support_cap points.
template <class Key, class Coeff>
FinSupp<Key, Coeff> convolve(const FinSupp<Key, Coeff> &f, const FinSupp<Key, Coeff> &g,
                             std::size_t support_cap = default_support_cap)
{
    FinSupp<Key, Coeff> out;
    for (const auto &[a, ca] : f.terms()) {
        for (const auto &[b, cb] : g.terms()) {
            out.add(key_add(a, b), ca * cb);
            if (out.size() > support_cap) {
                throw ResourceLimit("convolution support exceeds " + std::to_string(support_cap) + " points");
            }
        }
    }
    return out;
}

// sum |f(s)|
template <class Key>
Rational l1_norm(const FinSupp<Key, Rational> &f)
{
    Rational total = 0;
    for (const auto &[k, c] : f.terms()) {
        total += abs(c);
    }
    return total;
}

} // namespace beurling
