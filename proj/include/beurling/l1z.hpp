#pragma once

#include "beurling/expsum.hpp"
#include "beurling/finsupp.hpp"
#include "beurling/interval.hpp"
#include "beurling/weights.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace beurling {

// Finite-support element of l1(Z, omega) with rational coefficients.
using FinSuppZ = FinSupp<std::int64_t, Rational>;
// Same with coefficients q * e^m sums; the image of a rescaling by rho = q e^m.
using FinSuppZE = FinSupp<std::int64_t, ExpSum>;

inline FinSuppZ delta_z(std::int64_t n, const Rational &coefficient = Rational(1))
{
    return FinSuppZ::delta(n, coefficient);
}

// sum |f(s)| omega(s), exact.
ExpSum weighted_norm(const FinSuppZ &f, const WeightFn &weight);
// Coefficient signs are certified; throws Inconclusive if one cannot be decided.
ExpSum weighted_norm(const FinSuppZE &f, const WeightFn &weight, const CertifyPolicy &policy = {});

// omega(n_1 + ... + n_r) / (omega(n_1) ... omega(n_r)).
ExactExpValue omega_ratio(const WeightFn &weight, const std::vector<BigInt> &tuple);

// (T f)(n) = rho^n f(n).  T maps l1(omega) isometrically onto l1(omega / rho^n).
FinSuppZE rescale(const FinSuppZ &f, const ExactExpValue &rho);
FinSuppZE rescale(const FinSuppZE &f, const ExactExpValue &rho);
FinSuppZE lift(const FinSuppZ &f);

struct PowerNorm {
    std::int64_t r = 0;
    ExpSum norm;               // ||f^{*r}||_omega exactly
    CertifiedInterval root;    // ||f^{*r}||^{1/r}
};

std::vector<PowerNorm> power_norm_sequence(const FinSuppZ &f, const WeightFn &weight, std::int64_t r_max,
                                           std::size_t support_cap = default_support_cap,
                                           mpfr_prec_t precision = 128);

// One row of the decay table: sup over sampled k-tuples of [Omega^(r)(n_{k_1}, ..., n_{k_r})]^{1/r},
// stored as the integer m with bound e^{m/r}.
struct DecayQuery {
    std::int64_t j = 0; // label only
    std::int64_t r = 1;
    std::int64_t kmin = 1;
    std::int64_t kmax = 1;
};

struct DecayRow {
    DecayQuery query;
    std::int64_t bound_numerator_exponent = 0;
    std::vector<std::int64_t> argmax; // tuple attaining the bound, non-increasing
    std::size_t sample_count = 0;
    bool exact = true; // false when eta of the sum was only bounded from above
};

struct DecayOptions {
    enum class Mode { exact, upper };
    Mode mode = Mode::exact;
    // Full grid when it has at most this many tuples, otherwise this many seeded samples.
    std::size_t samples = 200;
    std::uint64_t seed = 7;
};

// Requires a weight whose values are pure e-powers (trivial or exp word length);
// upper mode additionally requires an exp word-length weight.
std::vector<DecayRow> decay_profile(const WeightFn &weight, const std::function<BigInt(std::int64_t)> &sequence,
                                    const std::vector<DecayQuery> &queries, const DecayOptions &options = {});

// Seeded k-tuples with entries in [kmin, kmax], sorted non-increasing.  Portable across
// standard libraries (mt19937_64 with plain modulo mapping).
std::vector<std::vector<std::int64_t>> sample_tuples(std::int64_t r, std::int64_t kmin, std::int64_t kmax,
                                                     std::size_t count, std::uint64_t seed);

// Every non-increasing r-tuple over [kmin, kmax] when there are at most `samples` of them,
// otherwise sample_tuples(r, kmin, kmax, samples, seed).
std::vector<std::vector<std::int64_t>> tuple_grid(std::int64_t r, std::int64_t kmin, std::int64_t kmax,
                                                  std::size_t samples, std::uint64_t seed);

std::string to_string(const FinSuppZ &f);

} // namespace beurling
