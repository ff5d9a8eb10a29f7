#include "beurling/l1z.hpp"

#include "beurling/errors.hpp"

#include <algorithm>
#include <random>

namespace beurling {

namespace {

Rational abs_rational(const Rational &q) { return q < 0 ? Rational(-q) : q; }

BigInt multiset_count(std::int64_t r, std::int64_t values)
{
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(r + values - 1), static_cast<unsigned long>(values - 1));
    return out;
}

// All non-increasing r-tuples over [kmin, kmax].
void enumerate_multisets(std::int64_t r, std::int64_t kmin, std::int64_t kmax,
                         std::vector<std::int64_t> &current, std::vector<std::vector<std::int64_t>> &out)
{
    if (static_cast<std::int64_t>(current.size()) == r) {
        out.push_back(current);
        return;
    }
    const std::int64_t top = current.empty() ? kmax : current.back();
    for (std::int64_t k = top; k >= kmin; --k) {
        current.push_back(k);
        enumerate_multisets(r, kmin, kmax, current, out);
        current.pop_back();
    }
}

} // namespace

ExpSum weighted_norm(const FinSuppZ &f, const WeightFn &weight)
{
    ExpSum total;
    for (const auto &[n, c] : f.terms()) {
        const ExactExpValue w = weight.eval(BigInt(static_cast<long>(n)));
        total.add_term(abs_rational(c) * w.mantissa, w.exponent);
    }
    return total;
}

ExpSum weighted_norm(const FinSuppZE &f, const WeightFn &weight, const CertifyPolicy &policy)
{
    ExpSum total;
    for (const auto &[n, c] : f.terms()) {
        const Sign sign = certified_sign(c, policy);
        if (sign == Sign::inconclusive) {
            throw Inconclusive("sign of coefficient " + c.to_string() + " at " + std::to_string(n));
        }
        const ExpSum w(weight.eval(BigInt(static_cast<long>(n))));
        total += sign == Sign::negative ? ExpSum(-(c * w)) : c * w;
    }
    return total;
}

ExactExpValue omega_ratio(const WeightFn &weight, const std::vector<BigInt> &tuple)
{
    if (tuple.empty()) {
        throw InvalidArgument("omega_ratio needs r >= 1");
    }
    BigInt sum = 0;
    ExactExpValue denominator = ExactExpValue::one();
    for (const BigInt &n : tuple) {
        sum += n;
        denominator = denominator * weight.eval(n);
    }
    return weight.eval(sum) / denominator;
}

FinSuppZE lift(const FinSuppZ &f)
{
    FinSuppZE out;
    for (const auto &[n, c] : f.terms()) {
        out.add(n, ExpSum(c));
    }
    return out;
}

FinSuppZE rescale(const FinSuppZE &f, const ExactExpValue &rho)
{
    if (rho.mantissa <= 0) {
        throw InvalidArgument("rho must be positive");
    }
    FinSuppZE out;
    for (const auto &[n, c] : f.terms()) {
        const ExactExpValue factor = rho.pow(n);
        out.add(n, c.shifted(factor.exponent) * factor.mantissa);
    }
    return out;
}

FinSuppZE rescale(const FinSuppZ &f, const ExactExpValue &rho) { return rescale(lift(f), rho); }

std::vector<PowerNorm> power_norm_sequence(const FinSuppZ &f, const WeightFn &weight, std::int64_t r_max,
                                           std::size_t support_cap, mpfr_prec_t precision)
{
    if (r_max < 1) {
        throw InvalidArgument("r_max must be at least 1");
    }
    std::vector<PowerNorm> out;
    FinSuppZ power = f;
    for (std::int64_t r = 1; r <= r_max; ++r) {
        if (r > 1) {
            power = convolve(power, f, support_cap);
        }
        PowerNorm entry;
        entry.r = r;
        entry.norm = weighted_norm(power, weight);
        entry.root = entry.norm.is_zero() ? CertifiedInterval::point(Rational(0), precision)
                                          : entry.norm.enclose(precision).root(static_cast<unsigned long>(r));
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<std::vector<std::int64_t>> sample_tuples(std::int64_t r, std::int64_t kmin, std::int64_t kmax,
                                                     std::size_t count, std::uint64_t seed)
{
    if (r < 1 || kmin > kmax) {
        throw InvalidArgument("empty tuple grid");
    }
    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(kmax - kmin + 1);
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<std::int64_t> tuple(static_cast<std::size_t>(r));
        for (auto &k : tuple) {
            k = kmin + static_cast<std::int64_t>(rng() % span);
        }
        std::sort(tuple.begin(), tuple.end(), std::greater<>());
        out.push_back(std::move(tuple));
    }
    return out;
}

std::vector<std::vector<std::int64_t>> tuple_grid(std::int64_t r, std::int64_t kmin, std::int64_t kmax,
                                                  std::size_t samples, std::uint64_t seed)
{
    if (r < 1 || kmin > kmax) {
        throw InvalidArgument("bad tuple range");
    }
    std::vector<std::vector<std::int64_t>> tuples;
    if (multiset_count(r, kmax - kmin + 1) <= samples) {
        std::vector<std::int64_t> current;
        enumerate_multisets(r, kmin, kmax, current, tuples);
    } else {
        tuples = sample_tuples(r, kmin, kmax, samples, seed);
    }
    return tuples;
}

std::vector<DecayRow> decay_profile(const WeightFn &weight, const std::function<BigInt(std::int64_t)> &sequence,
                                    const std::vector<DecayQuery> &queries, const DecayOptions &options)
{
    const bool upper = options.mode == DecayOptions::Mode::upper;
    if (upper && weight.kind() != WeightFn::Kind::exp_wordlength) {
        throw InvalidArgument("upper-bound decay profile needs an exp word-length weight");
    }
    std::vector<DecayRow> rows;
    for (const DecayQuery &query : queries) {
        if (query.r < 1 || query.kmin > query.kmax) {
            throw InvalidArgument("bad decay query");
        }
        const auto tuples = tuple_grid(query.r, query.kmin, query.kmax, options.samples, options.seed);

        DecayRow row;
        row.query = query;
        row.exact = !upper;
        row.sample_count = tuples.size();
        bool first = true;
        for (const auto &tuple : tuples) {
            BigInt sum = 0;
            std::int64_t denominator = 0;
            for (std::int64_t k : tuple) {
                const BigInt n = sequence(k);
                const ExactExpValue w = weight.eval(n);
                if (w.mantissa != 1) {
                    throw InvalidArgument("decay profile needs e-power weight values");
                }
                sum += n;
                denominator += w.exponent;
            }
            std::int64_t numerator = 0;
            if (upper) {
                numerator = word_length_upper(sum, weight.schedule()).length;
            } else {
                const ExactExpValue w = weight.eval(sum);
                if (w.mantissa != 1) {
                    throw InvalidArgument("decay profile needs e-power weight values");
                }
                numerator = w.exponent;
            }
            const std::int64_t exponent = numerator - denominator;
            if (first || exponent > row.bound_numerator_exponent) {
                row.bound_numerator_exponent = exponent;
                row.argmax = tuple;
                first = false;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string to_string(const FinSuppZ &f)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &[n, c] : f.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += beurling::to_string(c) + "*d[" + std::to_string(n) + "]";
    }
    return out;
}

} // namespace beurling
