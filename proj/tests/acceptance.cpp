// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any line fails.

#include "beurling/dsum.hpp"
#include "beurling/errors.hpp"
#include "beurling/l1z.hpp"
#include "beurling/meanslab.hpp"
#include "beurling/report.hpp"
#include "beurling/witness5.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace beurling;

namespace {

using Clock = std::chrono::steady_clock;

const GeneratorSchedule s0 = GeneratorSchedule::squares_of_two();

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    std::string first_failure;

    void require(bool condition, const std::string &what)
    {
        if (!condition && ok) {
            first_failure = what;
        }
        ok = ok && condition;
    }
};

int failures = 0;

void criterion(int id, const std::string &title, const std::function<void(Outcome &)> &body)
{
    Outcome outcome;
    const auto start = Clock::now();
    try {
        body(outcome);
    } catch (const std::exception &e) {
        outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (outcome.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << seconds << " s";
    if (!outcome.detail.str().empty()) {
        line << "; " << outcome.detail.str();
    }
    if (!outcome.ok) {
        line << "; first failure: " << outcome.first_failure;
    }
    line << ")";
    std::cout << line.str() << std::endl;
    failures += outcome.ok ? 0 : 1;
}

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::vector<std::int64_t> repeat(std::int64_t k, std::size_t n) { return std::vector<std::int64_t>(n, k); }

std::vector<std::int64_t> with_head(std::vector<std::int64_t> head, std::int64_t k, std::size_t total)
{
    head.resize(total, k);
    return head;
}

std::vector<BigInt> parts_of(const std::vector<std::int64_t> &tuple)
{
    std::vector<BigInt> parts;
    for (std::int64_t k : tuple) {
        parts.push_back(nk5(k));
    }
    return parts;
}

// Omega^(r) is a pure e-power e^m; in (0, 1] means m <= 0.
bool omega_in_unit_interval(const WeightFn &w, const std::vector<std::int64_t> &tuple)
{
    const ExactExpValue v = omega_ratio(w, parts_of(tuple));
    return v.mantissa > 0 && v.mantissa <= 1 && v.exponent <= 0;
}

FinSuppZ random_z(std::mt19937_64 &rng, int terms, long range)
{
    std::uniform_int_distribution<long> point(-range, range);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    FinSuppZ f;
    for (int i = 0; i < terms; ++i) {
        f.add(point(rng), make_rational(num(rng), den(rng)));
    }
    return f;
}

FinSuppG random_g(std::mt19937_64 &rng, int coords, int points, int range)
{
    std::uniform_int_distribution<int> value(-range, range);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    FinSuppG out;
    for (int p = 0; p < points; ++p) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(coords));
        for (auto &x : v) {
            x = value(rng);
        }
        out.add(GElem::from_vector(v), make_rational(num(rng), den(rng)));
    }
    return out;
}

std::string psi_bytes(const WeightFn &w)
{
    CesaroState state(w, default_tolerance(w), w.kind() == WeightFn::Kind::trivial ? pow2(512) : BigInt(1'000'000),
                      default_tolerance_name(w));
    return psi_to_json(build_psi_extending(state, 6, 10000)).dump();
}

} // namespace

int main()
{
    criterion(1, "eta(n_k) = k+1 for k = 1..5, exact, brute-force agreement for k <= 3, within 60 s", [](Outcome &o) {
        const auto start = Clock::now();
        const auto report = verify_lemma42(5, 3);
        o.require(report.entries.size() == 5, "five entries");
        for (const auto &e : report.entries) {
            o.require(e.status == CheckStatus::verified, "k = " + std::to_string(e.k) + " verified");
            o.require(e.eta == e.k + 1, "eta value");
            o.require(e.oracle.has_value() == (e.k <= 3), "oracle coverage");
            o.require(!e.oracle || *e.oracle == e.k + 1, "oracle value");
        }
        o.require(elapsed(start) <= 60.0, "runtime <= 60 s");
        o.detail << "eta = ";
        for (const auto &e : report.entries) {
            o.detail << e.eta << (e.k < 5 ? "," : "");
        }
    });

    criterion(2, "upper certificates [Omega^(r)]^{1/r} <= e^{-j}: j=1 full grid over {1..4}, j=2 200 tuples over {2..6}, within 120 s",
              [](Outcome &o) {
                  const auto start = Clock::now();
                  const WeightFn w = WeightFn::exp_wordlength(s0);
                  const auto grid = tuple_grid(8, 1, 4, 500, 7);
                  const auto sampled = tuple_grid(32, 2, 6, 200, 7);
                  o.require(grid.size() == 165, "165 multisets of size 8 over {1..4}");
                  o.require(sampled.size() == 200, "200 sampled tuples");
                  std::size_t failed = 0;
                  std::int64_t worst1 = -1000;
                  std::int64_t worst2 = -1000;
                  for (const auto &[j, tuples] :
                       std::vector<std::pair<std::int64_t, std::vector<std::vector<std::int64_t>>>>{{1, grid},
                                                                                                   {2, sampled}}) {
                      const auto cert = verify_lemma43(j, tuples);
                      o.require(cert.representation.sums_to_target && cert.representation.within_r,
                                "r n_j representation");
                      for (const auto &rec : cert.records) {
                          failed += rec.pass ? 0 : 1;
                          o.require(rec.exponent() <= -j * cert.r, "exponent <= -j r");
                          (j == 1 ? worst1 : worst2) = std::max(j == 1 ? worst1 : worst2, rec.exponent());
                      }
                      for (const auto &t : tuples) {
                          o.require(omega_in_unit_interval(w, t), "Omega in (0, 1]");
                      }
                  }
                  o.require(failed == 0, "zero failures");
                  o.require(elapsed(start) <= 120.0, "runtime <= 120 s");
                  o.detail << "165 + 200 tuples, " << failed << " failures, worst exponents e^{" << worst1
                           << "/8}, e^{" << worst2 << "/32}";
              });

    criterion(3, "exact lower bounds eta(sum) >= sum k_i - rJ for j=1, J=4 on three instances", [](Outcome &o) {
        const auto report = verify_lemma44(1, 4, {repeat(4, 8), with_head({5}, 4, 8), with_head({6, 5}, 4, 8)});
        o.require(report.cond2, "threshold inequality");
        o.require(report.jmin == 4, "least J is 4");
        const std::vector<std::int64_t> bounds{0, 1, 3};
        for (std::size_t i = 0; i < report.entries.size(); ++i) {
            const auto &e = report.entries[i];
            o.require(e.status == CheckStatus::verified, "instance verified (no budget exhaustion)");
            o.require(e.bound == bounds[i], "bound value");
            o.require(e.eta.has_value(), "exact eta");
            o.detail << (i ? ", " : "eta = ") << (e.eta ? std::to_string(*e.eta) : "?") << " >= " << e.bound;
        }
        o.require(report.entries.size() == 3, "three instances");
    });

    criterion(4, "exponent lower bound -r(J+1) = -40 on two tuples; decay rows r=8 <= e^{-1}, r=32 <= e^{-2}",
              [](Outcome &o) {
                  const auto cor = cor45_lower(1, {repeat(4, 8), repeat(5, 8)});
                  o.require(cor.entries.size() == 2, "two tuples");
                  for (const auto &e : cor.entries) {
                      o.require(e.exact, "exact eta");
                      o.require(e.bound == -40, "bound -40");
                      o.require(e.exponent >= -40, "exponent >= -40");
                      o.require(e.status == CheckStatus::verified, "verified");
                  }
                  const WeightFn w = WeightFn::exp_wordlength(s0);
                  const auto rows = decay_profile(w, nk5, {{1, 8, 1, 5}, {2, 32, 2, 6}});
                  o.require(rows[0].bound_numerator_exponent <= -8, "r = 8 row <= e^{-8/8}");
                  o.require(rows[1].bound_numerator_exponent <= -64, "r = 32 row <= e^{-64/32}");
                  o.require(rows[0].exact && rows[1].exact, "exact eta in the table");
                  o.detail << "exponents " << cor.entries[0].exponent << ", " << cor.entries[1].exponent
                           << "; decay e^{" << rows[0].bound_numerator_exponent << "/8}, e^{"
                           << rows[1].bound_numerator_exponent << "/32}";
              });

    criterion(5, "psi certificates with J = 6 for trivial and exp-squares2 verify; invariance defect at the final index < 1/1000; deterministic",
              [](Outcome &o) {
                  for (const WeightFn &w : {WeightFn::trivial(), WeightFn::exp_wordlength(s0)}) {
                      CesaroState state(w, default_tolerance(w),
                                        w.kind() == WeightFn::Kind::trivial ? pow2(512) : BigInt(1'000'000),
                                        default_tolerance_name(w));
                      const auto cert = build_psi_extending(state, 6, 10000);
                      o.require(cert.levels() == 6, w.name() + ": six levels");
                      const auto verification = verify_psi(cert, w);
                      for (const auto &c : verification.checks) {
                          o.require(c.status == CheckStatus::verified, w.name() + ": " + c.name);
                      }
                      const auto defect = invariance_defect(state, cert.tj.back());
                      const Sign below = certified_compare(defect.exact, Rational(1, 1000));
                      o.require(below == Sign::negative, w.name() + ": defect < 1/1000");
                      o.require(psi_bytes(w) == psi_bytes(w), w.name() + ": deterministic");
                      o.detail << (w.kind() == WeightFn::Kind::trivial ? "" : "; ") << w.name() << " t_J = "
                               << cert.tj.back() << ", n = " << cert.nk.back() << ", "
                               << verification.checks.size() << " checks";
                  }
              });

    criterion(6, "direct-sum identities: sigma chains, sigma squares, ladder projections, product rule", [](Outcome &o) {
        const StaircaseSchedule sched{3, 4, 4};
        for (std::int64_t j = 1; j <= 3; ++j) {
            o.require(h_pair(sigma_chain(j, sched)) == 1, "chain j = " + std::to_string(j));
        }
        int pairs = 0;
        for (std::int64_t k = 1; k <= 20; ++k) {
            const std::int64_t kp = k + (3 * k) % 7;
            o.require(h_pair(convolve(make_sigma(1, k), make_sigma(1, kp))) == make_rational(-1, kp),
                      "sigma square " + std::to_string(k) + "," + std::to_string(kp));
            ++pairs;
        }
        o.require(pi_i(build_ladder(1, 4, 4), 1).is_zero(), "pi_1 of level 1");
        for (std::int64_t j = 2; j <= 3; ++j) {
            o.require(pi_i(build_ladder(j, 4, 4), j) == build_ladder(j - 1, 16, 4),
                      "ladder projection j = " + std::to_string(j));
        }
        std::mt19937_64 rng(11);
        int rules = 0;
        for (int trial = 0; trial < 100; ++trial) {
            o.require(check_product_rule(random_g(rng, 3, 6, 4), FinSuppZ(random_z(rng, 5, 4)), 1 + trial % 3).holds(),
                      "product rule");
            ++rules;
        }
        o.detail << "3 chains, " << pairs << " sigma pairs, 3 projections, " << rules << " product-rule instances";
    });

    criterion(7, "ladder trend for j = 2: |<L^3,h>| and |<L^2,h> - 1| shrink from B = 4 to B = 16; anchors match",
              [](Outcome &o) {
                  const std::vector<std::pair<std::int64_t, std::pair<Rational, Rational>>> anchors{
                      {4, {Rational(247, 256), Rational(-4950051, 134217728)}},
                      {8, {Rational(503, 512), Rational(-34181067, 1073741824)}},
                      {16, {Rational(1015, 1024), Rational(-251731371, 8589934592)}},
                  };
                  std::vector<Rational> p2;
                  std::vector<Rational> p3;
                  for (const auto &[base, values] : anchors) {
                      p2.push_back(ladder_powers(2, base, 4, 2));
                      p3.push_back(ladder_powers(2, base, 4, 3));
                      o.require(p2.back() == values.first, "p = 2 anchor at B = " + std::to_string(base));
                      o.require(p3.back() == values.second, "p = 3 anchor at B = " + std::to_string(base));
                  }
                  o.require(abs(p3[2]) < abs(p3[0]), "p = 3 shrinks");
                  o.require(abs(p2[2] - 1) < abs(p2[0] - 1), "p = 2 approaches 1");
                  o.detail << "p=2: " << p2[0] << ", " << p2[1] << ", " << p2[2] << "; p=3: " << p3[0] << ", "
                           << p3[1] << ", " << p3[2];
              });

    criterion(8, "property suites: word length laws, solver vs oracle on |n| <= 5000, convolution laws, Omega range, rescaling",
              [](Outcome &o) {
                  std::mt19937_64 rng(2026);
                  std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
                  int violations = 0;
                  const auto count = [&](bool ok, const std::string &what) {
                      o.require(ok, what);
                      violations += ok ? 0 : 1;
                  };
                  count(word_length(0, s0).length == 0, "eta(0) = 0");
                  for (int trial = 0; trial < 1000; ++trial) {
                      const long m = dist(rng);
                      const long n = dist(rng);
                      const auto wm = word_length(m, s0).length;
                      const auto wn = word_length(n, s0).length;
                      count(word_length(-m, s0).length == wm, "symmetry");
                      count((wm == 0) == (m == 0), "zero law");
                      count(word_length(m + n, s0).length <= wm + wn, "subadditivity");
                  }

                  const auto table = brute_force_table(5000, s0, 32);
                  for (long n = 0; n <= 5000; ++n) {
                      const auto &expected = table[static_cast<std::size_t>(n)];
                      count(expected.has_value(), "oracle coverage");
                      if (expected) {
                          count(word_length_exact(n, s0).length == *expected, "solver = oracle");
                          count(word_length_exact(-n, s0).length == *expected, "solver = oracle (negative)");
                      }
                  }

                  for (int trial = 0; trial < 1000; ++trial) {
                      const FinSuppZ f = random_z(rng, 4, 30);
                      const FinSuppZ g = random_z(rng, 4, 30);
                      const FinSuppZ h = random_z(rng, 3, 30);
                      count(convolve(f, g) == convolve(g, f), "commutativity");
                      count(convolve(convolve(f, g), h) == convolve(f, convolve(g, h)), "associativity");
                  }

                  const WeightFn w = WeightFn::exp_wordlength(s0);
                  std::size_t omega_tuples = 0;
                  for (const auto &[r, range] : std::vector<std::pair<std::int64_t, std::pair<int, int>>>{
                           {8, {1, 4}}, {8, {1, 5}}, {32, {2, 6}}}) {
                      for (const auto &t : tuple_grid(r, range.first, range.second, 200, 7)) {
                          count(omega_in_unit_interval(w, t), "Omega in (0, 1]");
                          ++omega_tuples;
                      }
                  }

                  const ExactExpValue e = ExactExpValue::e_power(1);
                  const WeightFn omega = WeightFn::exponential_absolute();
                  const WeightFn gamma = radius_normalize(omega, e);
                  for (int trial = 0; trial < 100; ++trial) {
                      const FinSuppZ f = random_z(rng, 4, 25);
                      const FinSuppZ g = random_z(rng, 4, 25);
                      count(rescale(convolve(f, g), e) == convolve(rescale(f, e), rescale(g, e)), "homomorphism");
                      count(weighted_norm(rescale(f, e), gamma) == weighted_norm(f, omega), "isometry");
                      count(rescale(rescale(f, e), e.inverse()) == lift(f), "inverse");
                  }
                  o.detail << "3000 word-length checks, 10001 oracle values, 2000 convolution laws, " << omega_tuples
                           << " Omega tuples, 300 rescaling identities, " << violations << " violations";
              });

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
