#include <doctest.h>

#include "beurling/errors.hpp"
#include "beurling/weights.hpp"

#include <random>
#include <thread>

using namespace beurling;

namespace {

const GeneratorSchedule s0 = GeneratorSchedule::squares_of_two();

} // namespace

TEST_CASE("exp word-length weight values")
{
    const WeightFn w = WeightFn::exp_wordlength(s0);
    CHECK(w.eval(0) == ExactExpValue::one());
    CHECK(w.eval(3) == ExactExpValue::e_power(2));
    CHECK(w.eval(19) == ExactExpValue::e_power(3));
    // oracle first
    REQUIRE(brute_force_oracle(24, s0, 8) == 5);
    CHECK(w.eval(24) == ExactExpValue::e_power(5));
    CHECK(w.eval(-24) == w.eval(24));
    CHECK(w.eval(24) == w.eval(24));
    CHECK(w.name() == "exp-squares2");
    CHECK(w.known_radius() == ExactExpValue::one());
    for (long n = -50; n <= 50; ++n) {
        CHECK(compare_with_one(w, n) != Sign::negative);
    }
}

TEST_CASE("trivial and exponential weights")
{
    const WeightFn t = WeightFn::trivial();
    CHECK(t.eval(12345) == ExactExpValue::one());
    CHECK(t.range_sum(0, BigInt(1) << 40) == ExpSum(Rational(pow2(40) + 1)));
    CHECK(t.range_sum(5, 4).is_zero());
    const WeightFn a = WeightFn::exponential_absolute();
    CHECK(a.eval(-7) == ExactExpValue::e_power(7));
    CHECK(a.range_sum(-1, 1) == ExpSum::parse("2*e^1 + 1"));
    CHECK(a.known_radius() == ExactExpValue::e_power(1));
    CHECK(WeightFn::exp_wordlength(GeneratorSchedule::unit_only()).eval(-9) == ExactExpValue::e_power(9));
}

TEST_CASE("rho upper bounds")
{
    const auto trivial = rho_upper(WeightFn::trivial(), 10);
    CHECK(trivial.contains(Rational(1)));
    CHECK(trivial.lower_exact() == 1);

    const auto absolute = rho_upper(WeightFn::exponential_absolute(), 10);
    CHECK(absolute.certainly_less(CertifiedInterval::point(Rational(2719, 1000), 64)));
    CHECK(CertifiedInterval::point(Rational(2718, 1000), 64).certainly_less(absolute));

    const auto s0_rho = rho_upper(WeightFn::exp_wordlength(s0), pow2(16));
    const auto bound = CertifiedInterval::exp_of(Rational(BigInt(1), pow2(16)), 128);
    CHECK(mpfr_lessequal_p(s0_rho.hi(), bound.hi()));
    CHECK(s0_rho.contains(bound.lower_exact()));
    CHECK_THROWS_AS(rho_upper(WeightFn::trivial(), 0), InvalidArgument);
}

TEST_CASE("radius normalization")
{
    const WeightFn a = WeightFn::exponential_absolute();
    const WeightFn g = radius_normalize(a, ExactExpValue::e_power(1));
    CHECK(g.kind() == WeightFn::Kind::normalized);
    for (long n = 0; n <= 20; ++n) {
        CHECK(g.eval(n) == ExactExpValue::one());
        CHECK(g.eval(-n) == ExactExpValue::e_power(2 * n));
    }
    CHECK(g.known_radius() == ExactExpValue::one());

    const WeightFn w = WeightFn::exp_wordlength(s0);
    CHECK(radius_normalize(w, ExactExpValue::one()).kind() == WeightFn::Kind::exp_wordlength);
    CHECK(radius_normalize(WeightFn::trivial(), ExactExpValue::one()).kind() == WeightFn::Kind::trivial);
    CHECK_THROWS_AS(radius_normalize(w, ExactExpValue{Rational(0), 0}), InvalidArgument);
    CHECK_THROWS_AS(radius_normalize(w, ExactExpValue{Rational(-1), 2}), InvalidArgument);

    // Rational rho: gamma_n = e^{eta(n)} 2^{-n}.
    const WeightFn h = radius_normalize(w, ExactExpValue{Rational(2), 0});
    CHECK(h.eval(3) == ExactExpValue{Rational(1, 8), 2});
    CHECK(h.eval(-3) == ExactExpValue{Rational(8), 2});
    CHECK(h.eval(0) == ExactExpValue::one());
}

TEST_CASE("submultiplicativity")
{
    const WeightFn w = WeightFn::exp_wordlength(s0);
    CHECK(check_submultiplicative(w, {{3, 16}}).ok());
    CHECK(check_submultiplicative(WeightFn::trivial(), {{3, 16}, {-5, 9}}).ok());

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> dist(-10000, 10000);
    std::vector<std::pair<BigInt, BigInt>> pairs;
    for (int i = 0; i < 1000; ++i) {
        pairs.emplace_back(dist(rng), dist(rng));
    }
    const auto report = check_submultiplicative(w, pairs);
    CHECK(report.checked == 1000);
    CHECK(report.ok());

    const WeightFn g = radius_normalize(WeightFn::exponential_absolute(), ExactExpValue::e_power(1));
    const WeightFn h = radius_normalize(w, ExactExpValue{Rational(3, 2), 0});
    std::vector<std::pair<BigInt, BigInt>> small;
    std::uniform_int_distribution<long> near(-40, 40);
    for (int i = 0; i < 200; ++i) {
        small.emplace_back(near(rng), near(rng));
    }
    CHECK(check_submultiplicative(g, small).ok());
    CHECK(check_submultiplicative(h, small).ok());
    CHECK(g.eval(0) == ExactExpValue::one());
    CHECK(h.eval(0) == ExactExpValue::one());
}

TEST_CASE("concurrent evaluation matches serial evaluation")
{
    const WeightFn w = WeightFn::exp_wordlength(s0, 64);
    std::vector<std::int64_t> serial;
    for (long n = 0; n < 400; ++n) {
        serial.push_back(WeightFn::exp_wordlength(s0).eval(n).exponent);
    }
    std::vector<std::vector<std::int64_t>> results(4);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            for (long n = 0; n < 400; ++n) {
                results[t].push_back(w.eval(n).exponent);
            }
        });
    }
    for (auto &thread : threads) {
        thread.join();
    }
    for (const auto &r : results) {
        CHECK(r == serial);
    }
}
