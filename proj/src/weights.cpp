#include "beurling/weights.hpp"

#include "beurling/errors.hpp"

#include <map>
#include <mutex>

namespace beurling {

namespace {

constexpr std::int64_t max_range_terms = 100'000'000;

// Bounded eta memo shared by copies of one weight.
class EtaCache {
public:
    explicit EtaCache(std::size_t capacity) : capacity_(capacity) {}

    std::optional<std::int64_t> find(const BigInt &n) const
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = values_.find(n);
        if (it == values_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    void store(const BigInt &n, std::int64_t eta) const
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (values_.size() >= capacity_) {
            values_.clear();
        }
        values_.emplace(n, eta);
    }

private:
    std::size_t capacity_;
    mutable std::mutex mutex_;
    mutable std::map<BigInt, std::int64_t> values_;
};

} // namespace

struct WeightFn::Impl {
    Kind kind = Kind::trivial;
    std::optional<GeneratorSchedule> schedule;
    std::unique_ptr<EtaCache> cache;
    std::optional<WeightFn> base;
    ExactExpValue rho;

    std::int64_t eta(const BigInt &n) const
    {
        const BigInt m = abs(n);
        if (m == 0) {
            return 0;
        }
        if (auto hit = cache->find(m)) {
            return *hit;
        }
        const std::int64_t value = word_length(m, *schedule).length;
        cache->store(m, value);
        return value;
    }
};

WeightFn WeightFn::trivial()
{
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::trivial;
    return WeightFn(std::move(impl));
}

WeightFn WeightFn::exp_wordlength(const GeneratorSchedule &schedule, std::size_t cache_size)
{
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::exp_wordlength;
    impl->schedule = schedule;
    impl->cache = std::make_unique<EtaCache>(cache_size == 0 ? 1 : cache_size);
    return WeightFn(std::move(impl));
}

WeightFn WeightFn::exponential_absolute()
{
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::exponential_absolute;
    return WeightFn(std::move(impl));
}

WeightFn::Kind WeightFn::kind() const { return impl_->kind; }

std::string WeightFn::name() const
{
    switch (impl_->kind) {
    case Kind::trivial:
        return "trivial";
    case Kind::exp_wordlength:
        return "exp-" + impl_->schedule->name();
    case Kind::exponential_absolute:
        return "exp-abs";
    case Kind::normalized:
        break;
    }
    return "normalized(" + impl_->base->name() + ", " + impl_->rho.to_string() + ")";
}

const GeneratorSchedule &WeightFn::schedule() const
{
    if (impl_->kind != Kind::exp_wordlength) {
        throw InvalidArgument("weight " + name() + " has no generator schedule");
    }
    return *impl_->schedule;
}

const WeightFn &WeightFn::base() const
{
    if (impl_->kind != Kind::normalized) {
        throw InvalidArgument("weight " + name() + " is not normalized");
    }
    return *impl_->base;
}

const ExactExpValue &WeightFn::rho() const
{
    if (impl_->kind != Kind::normalized) {
        throw InvalidArgument("weight " + name() + " is not normalized");
    }
    return impl_->rho;
}

ExactExpValue WeightFn::eval(const BigInt &n) const
{
    switch (impl_->kind) {
    case Kind::trivial:
        return ExactExpValue::one();
    case Kind::exp_wordlength:
        return ExactExpValue::e_power(impl_->eta(n));
    case Kind::exponential_absolute:
        return ExactExpValue::e_power(to_int64(abs(n)));
    case Kind::normalized:
        break;
    }
    return impl_->base->eval(n) / impl_->rho.pow(to_int64(n));
}

ExpSum WeightFn::range_sum(const BigInt &a, const BigInt &b) const
{
    if (a > b) {
        return {};
    }
    if (impl_->kind == Kind::trivial) {
        return ExpSum(Rational(b - a + 1));
    }
    const BigInt count = b - a + 1;
    if (count > max_range_terms) {
        throw ResourceLimit("range sum over " + count.get_str() + " points");
    }
    ExpSum total;
    for (BigInt i = a; i <= b; ++i) {
        const ExactExpValue value = eval(i);
        total.add_term(value.mantissa, value.exponent);
    }
    return total;
}

std::optional<ExactExpValue> WeightFn::known_radius() const
{
    switch (impl_->kind) {
    case Kind::trivial:
        return ExactExpValue::one();
    case Kind::exp_wordlength:
        switch (impl_->schedule->kind()) {
        case GeneratorSchedule::Kind::squares_of_two:
            return ExactExpValue::one();
        case GeneratorSchedule::Kind::unit_only:
            return ExactExpValue::e_power(1);
        case GeneratorSchedule::Kind::explicit_list:
            return std::nullopt;
        }
        return std::nullopt;
    case Kind::exponential_absolute:
        return ExactExpValue::e_power(1);
    case Kind::normalized:
        break;
    }
    if (auto base = impl_->base->known_radius()) {
        return *base / impl_->rho;
    }
    return std::nullopt;
}

WeightFn radius_normalize(const WeightFn &weight, const ExactExpValue &rho)
{
    if (rho.mantissa <= 0) {
        throw InvalidArgument("rho must be positive, got " + rho.to_string());
    }
    if (rho == ExactExpValue::one()) {
        return weight;
    }
    auto impl = std::make_shared<WeightFn::Impl>();
    impl->kind = WeightFn::Kind::normalized;
    impl->base = weight;
    impl->rho = rho;
    return WeightFn(std::move(impl));
}

CertifiedInterval rho_upper(const WeightFn &weight, const BigInt &bound, mpfr_prec_t precision)
{
    if (bound < 1) {
        throw InvalidArgument("rho_upper needs N >= 1");
    }
    const std::int64_t last = to_int64(bound);
    // Pure e-powers: minimize the exponent ratio m/n exactly, enclose once at the end.
    std::optional<Rational> best_ratio;
    std::optional<CertifiedInterval> best;
    for (std::int64_t n = 1; n <= last; ++n) {
        const ExactExpValue value = weight.eval(BigInt(static_cast<long>(n)));
        if (value.mantissa == 1) {
            const Rational ratio = make_rational(BigInt(static_cast<long>(value.exponent)), BigInt(static_cast<long>(n)));
            if (!best_ratio || ratio < *best_ratio) {
                best_ratio = ratio;
            }
            continue;
        }
        CertifiedInterval root = value.enclose(precision).root(static_cast<unsigned long>(n));
        best = best ? best->min_with(root) : root;
    }
    if (best_ratio) {
        CertifiedInterval exact = CertifiedInterval::exp_of(*best_ratio, precision);
        return best ? best->min_with(exact) : exact;
    }
    return *best;
}

SubmultiplicativityReport check_submultiplicative(const WeightFn &weight,
                                                  const std::vector<std::pair<BigInt, BigInt>> &pairs,
                                                  const CertifyPolicy &policy)
{
    SubmultiplicativityReport report;
    for (const auto &[m, n] : pairs) {
        ++report.checked;
        const ExactExpValue product = weight.eval(m) * weight.eval(n);
        const ExactExpValue sum = weight.eval(m + n);
        if (product.mantissa == sum.mantissa) {
            if (sum.exponent > product.exponent) {
                report.violations.emplace_back(m, n);
            }
            continue;
        }
        switch (certified_sign(ExpSum(product) - ExpSum(sum), policy)) {
        case Sign::negative:
            report.violations.emplace_back(m, n);
            break;
        case Sign::inconclusive:
            report.inconclusive.emplace_back(m, n);
            break;
        case Sign::zero:
        case Sign::positive:
            break;
        }
    }
    return report;
}

Sign compare_with_one(const WeightFn &weight, const BigInt &n, const CertifyPolicy &policy)
{
    return certified_sign(ExpSum(weight.eval(n)) - ExpSum(Rational(1)), policy);
}

} // namespace beurling
