#pragma once

#include "beurling/expsum.hpp"
#include "beurling/interval.hpp"
#include "beurling/wordlen.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace beurling {

// A weight on Z: omega(0) = 1, omega >= 1, omega(m+n) <= omega(m) omega(n).
// Every built-in evaluates exactly to q * e^m.  Copies share state.
class WeightFn {
public:
    enum class Kind { trivial, exp_wordlength, exponential_absolute, normalized };

    static WeightFn trivial();
    // omega(n) = e^{|n|_S}.
    static WeightFn exp_wordlength(const GeneratorSchedule &schedule, std::size_t cache_size = 1 << 16);
    // omega(n) = e^{|n|}.
    static WeightFn exponential_absolute();

    Kind kind() const;
    std::string name() const;

    ExactExpValue eval(const BigInt &n) const;
    // Sum of omega(i) over a <= i <= b (zero when a > b).
    ExpSum range_sum(const BigInt &a, const BigInt &b) const;

    // Closed-form rho_omega when one is known.
    std::optional<ExactExpValue> known_radius() const;

    // Only for exp_wordlength.
    const GeneratorSchedule &schedule() const;
    // Only for normalized.
    const WeightFn &base() const;
    const ExactExpValue &rho() const;

    struct Impl;

private:
    explicit WeightFn(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    friend WeightFn radius_normalize(const WeightFn &weight, const ExactExpValue &rho);

    std::shared_ptr<const Impl> impl_;
};

// Certified enclosure of min_{1 <= n <= N} omega(n)^{1/n}, an upper bound for rho_omega.
CertifiedInterval rho_upper(const WeightFn &weight, const BigInt &bound, mpfr_prec_t precision = 128);

// gamma_n = omega_n / rho^n.  rho == 1 returns the weight itself.
WeightFn radius_normalize(const WeightFn &weight, const ExactExpValue &rho);

struct SubmultiplicativityReport {
    std::vector<std::pair<BigInt, BigInt>> violations;
    std::vector<std::pair<BigInt, BigInt>> inconclusive;
    std::size_t checked = 0;

    bool ok() const { return violations.empty() && inconclusive.empty(); }
};

SubmultiplicativityReport check_submultiplicative(const WeightFn &weight,
                                                  const std::vector<std::pair<BigInt, BigInt>> &pairs,
                                                  const CertifyPolicy &policy = {});

// sign(omega(n) - 1); positive or zero for a weight.
Sign compare_with_one(const WeightFn &weight, const BigInt &n, const CertifyPolicy &policy = {});

} // namespace beurling
