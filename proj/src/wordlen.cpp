#include "beurling/wordlen.hpp"

#include "beurling/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>
#include <utility>

namespace beurling {

// ---------------------------------------------------------------------------
// schedules

GeneratorSchedule::GeneratorSchedule(Kind kind, std::vector<BigInt> generators)
    : kind_(kind), generators_(std::move(generators))
{
    if (kind_ == Kind::squares_of_two) {
        powers_of_two_ = true;
        return;
    }
    powers_of_two_ = true;
    for (const BigInt &g : generators_) {
        if (mpz_popcount(g.get_mpz_t()) != 1) {
            powers_of_two_ = false;
            exponents_.clear();
            break;
        }
        exponents_.push_back(mpz_scan1(g.get_mpz_t(), 0));
    }
}

GeneratorSchedule GeneratorSchedule::squares_of_two() { return {Kind::squares_of_two, {}}; }

GeneratorSchedule GeneratorSchedule::unit_only() { return {Kind::unit_only, {BigInt(1)}}; }

GeneratorSchedule GeneratorSchedule::explicit_list(std::vector<BigInt> generators)
{
    if (generators.empty()) {
        throw InvalidArgument("generator list is empty");
    }
    if (generators.front() < 1) {
        throw InvalidArgument("generators must be positive");
    }
    for (std::size_t i = 1; i < generators.size(); ++i) {
        if (generators[i] <= generators[i - 1]) {
            throw InvalidArgument("generators must be strictly increasing");
        }
    }
    return {Kind::explicit_list, std::move(generators)};
}

std::size_t GeneratorSchedule::size() const
{
    if (!is_finite()) {
        throw InvalidArgument("schedule " + name() + " is infinite");
    }
    return generators_.size();
}

BigInt GeneratorSchedule::generator(std::size_t index) const
{
    if (kind_ == Kind::squares_of_two) {
        return pow2(static_cast<unsigned long>(index * index));
    }
    if (index >= generators_.size()) {
        throw InvalidArgument("generator index out of range");
    }
    return generators_[index];
}

std::vector<BigInt> GeneratorSchedule::generators_upto(const BigInt &bound) const
{
    std::vector<BigInt> out;
    for (std::size_t i = 0; is_finite() ? i < generators_.size() : true; ++i) {
        BigInt g = generator(i);
        if (g > bound) {
            break;
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::size_t GeneratorSchedule::exponent_of(std::size_t index) const
{
    if (!powers_of_two_) {
        throw InvalidArgument("schedule " + name() + " is not a power-of-two schedule");
    }
    if (kind_ == Kind::squares_of_two) {
        return index * index;
    }
    return exponents_.at(index);
}

std::optional<std::size_t> GeneratorSchedule::index_of_exponent(std::size_t exponent) const
{
    if (kind_ == Kind::squares_of_two) {
        auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(exponent)));
        while (root * root > exponent) {
            --root;
        }
        while ((root + 1) * (root + 1) <= exponent) {
            ++root;
        }
        if (root * root == exponent) {
            return root;
        }
        return std::nullopt;
    }
    auto it = std::lower_bound(exponents_.begin(), exponents_.end(), exponent);
    if (it != exponents_.end() && *it == exponent) {
        return static_cast<std::size_t>(it - exponents_.begin());
    }
    return std::nullopt;
}

std::string GeneratorSchedule::name() const
{
    switch (kind_) {
    case Kind::squares_of_two:
        return "squares2";
    case Kind::unit_only:
        return "unit";
    case Kind::explicit_list:
        break;
    }
    std::string out = "explicit:";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        out += (i ? "," : "") + generators_[i].get_str();
    }
    return out;
}

std::vector<BigInt> generators_upto(const GeneratorSchedule &schedule, const BigInt &bound)
{
    if (bound < 1) {
        throw InvalidArgument("bound must be at least 1");
    }
    return schedule.generators_upto(bound);
}

const char *to_string(WordLengthResult::Certificate certificate)
{
    return certificate == WordLengthResult::Certificate::exact ? "exact" : "upper-bound";
}

BigInt evaluate_witness(const std::vector<WitnessTerm> &witness, const GeneratorSchedule &schedule)
{
    BigInt total = 0;
    for (const WitnessTerm &term : witness) {
        total += BigInt(static_cast<long>(term.coefficient)) * schedule.generator(term.index);
    }
    return total;
}

std::int64_t witness_length(const std::vector<WitnessTerm> &witness)
{
    std::int64_t total = 0;
    for (const WitnessTerm &term : witness) {
        total += term.coefficient < 0 ? -term.coefficient : term.coefficient;
    }
    return total;
}

namespace {

void negate(std::vector<WitnessTerm> &witness)
{
    for (WitnessTerm &term : witness) {
        term.coefficient = -term.coefficient;
    }
}

void sort_witness(std::vector<WitnessTerm> &witness)
{
    std::sort(witness.begin(), witness.end(),
              [](const WitnessTerm &a, const WitnessTerm &b) { return a.index < b.index; });
}

// Lazily materialized generator prefix.
class GeneratorCache {
public:
    explicit GeneratorCache(const GeneratorSchedule &schedule) : schedule_(schedule) {}

    bool has(std::size_t index) const { return !schedule_.is_finite() || index < schedule_.size(); }

    const BigInt &at(std::size_t index)
    {
        while (values_.size() <= index) {
            values_.push_back(schedule_.generator(values_.size()));
        }
        return values_[index];
    }

    const GeneratorSchedule &schedule() const { return schedule_; }

private:
    const GeneratorSchedule &schedule_;
    std::vector<BigInt> values_;
};

// Largest index whose generator can be the top term of a representation of m
// with at most budget terms: g <= |m| + (budget-1) g^-.  For 2^{k^2} the slack
// g - (budget-1) g^- is increasing once positive, so on that (only infinite)
// schedule the scan may stop at the first failure past |m|.
std::optional<std::size_t> top_admissible_index(GeneratorCache &gens, const BigInt &m, std::int64_t budget)
{
    std::optional<std::size_t> top;
    for (std::size_t i = 0; gens.has(i); ++i) {
        const BigInt &g = gens.at(i);
        const BigInt below = i == 0 ? BigInt(0) : gens.at(i - 1);
        const bool admissible = g <= m + BigInt(static_cast<long>(budget - 1)) * below;
        if (admissible) {
            top = i;
        } else if (!gens.schedule().is_finite() && i > 0 && g > m) {
            break;
        }
    }
    return top;
}

// ---------------------------------------------------------------------------
// engine (b): shortest path over (bit position, carry)

WordLengthResult carry_dp(const BigInt &n, const GeneratorSchedule &schedule, std::int64_t cap)
{
    const BigInt m = abs(n);
    WordLengthResult result;
    if (m == 0) {
        return result;
    }
    // |carry| <= cap/2 + 1 along any path of cost <= cap.
    const std::int64_t carry_bound = cap / 2 + 2;
    const std::size_t width = static_cast<std::size_t>(2 * carry_bound + 1);
    const std::size_t bits = bit_length(m);
    const std::size_t horizon =
        bits + static_cast<std::size_t>(cap + 2) * (bit_length(BigInt(static_cast<long>(cap + 2))) + 1) + 2;
    const std::int64_t unreachable = cap + 1;

    struct Step {
        std::int32_t prev = -1;
        std::int64_t coefficient = 0;
    };

    std::vector<std::int64_t> dist(width, unreachable);
    dist[static_cast<std::size_t>(carry_bound)] = 0;
    std::vector<std::vector<Step>> parents;
    std::int64_t best = unreachable;
    std::size_t best_position = 0;

    for (std::size_t p = 0; p < horizon; ++p) {
        const std::int64_t bit = test_bit(m, p) ? 1 : 0;
        const std::optional<std::size_t> generator_index = schedule.index_of_exponent(p);
        std::vector<std::int64_t> next(width, unreachable);
        std::vector<Step> step(width);

        auto relax = [&](std::int64_t carry, std::int64_t cost, std::size_t from, std::int64_t coefficient) {
            if (carry < -carry_bound || carry > carry_bound) {
                return;
            }
            const auto slot = static_cast<std::size_t>(carry + carry_bound);
            if (cost < next[slot]) {
                next[slot] = cost;
                step[slot] = {static_cast<std::int32_t>(from), coefficient};
            }
        };

        for (std::size_t slot = 0; slot < width; ++slot) {
            const std::int64_t d = dist[slot];
            if (d > cap) {
                continue;
            }
            const std::int64_t carry = static_cast<std::int64_t>(slot) - carry_bound;
            if (!generator_index) {
                if (((carry - bit) & 1) == 0) {
                    relax((carry - bit) / 2, d, slot, 0);
                }
                continue;
            }
            const std::int64_t budget = cap - d;
            for (std::int64_t t = 0; t <= budget; ++t) {
                for (std::int64_t x : {t, -t}) {
                    if (t == 0 && x < 0) {
                        continue;
                    }
                    if (((carry + x - bit) & 1) != 0) {
                        continue;
                    }
                    relax((carry + x - bit) / 2, d + t, slot, x);
                }
            }
        }
        parents.push_back(std::move(step));
        dist = std::move(next);

        const std::size_t position = p + 1;
        if (position >= bits) {
            const std::int64_t at_zero = dist[static_cast<std::size_t>(carry_bound)];
            if (at_zero < best) {
                best = at_zero;
                best_position = position;
            }
            std::int64_t other = unreachable;
            for (std::size_t slot = 0; slot < width; ++slot) {
                if (slot != static_cast<std::size_t>(carry_bound)) {
                    other = std::min(other, dist[slot]);
                }
            }
            if (other >= best) {
                break;
            }
        }
    }

    if (best > cap) {
        throw BudgetExceeded("word length of " + n.get_str() + " exceeds cap " + std::to_string(cap));
    }

    auto slot = static_cast<std::size_t>(carry_bound);
    for (std::size_t position = best_position; position > 0; --position) {
        const Step &s = parents[position - 1][slot];
        if (s.coefficient != 0) {
            result.witness.push_back({*schedule.index_of_exponent(position - 1), s.coefficient});
        }
        slot = static_cast<std::size_t>(s.prev);
    }
    sort_witness(result.witness);
    result.length = best;
    if (n < 0) {
        negate(result.witness);
    }
    return result;
}

// ---------------------------------------------------------------------------
// engine (a): iterative deepening over (residual, budget) with top-generator pruning

class Searcher {
public:
    Searcher(const GeneratorSchedule &schedule, std::size_t cache_size) : gens_(schedule), cache_size_(cache_size) {}

    std::optional<std::vector<WitnessTerm>> solve(const BigInt &m, std::int64_t budget)
    {
        const std::optional<std::size_t> top = top_admissible_index(gens_, abs(m), budget);
        std::vector<WitnessTerm> terms;
        if (m == 0) {
            return terms;
        }
        if (!top) {
            return std::nullopt;
        }
        if (search(m, budget, static_cast<long>(*top), terms)) {
            return terms;
        }
        return std::nullopt;
    }

private:
    // Represent m using generators with index <= imax and at most budget terms.
    bool search(const BigInt &m, std::int64_t budget, long imax, std::vector<WitnessTerm> &out)
    {
        if (m == 0) {
            return true;
        }
        if (budget == 0 || imax < 0) {
            return false;
        }
        if (m < 0) {
            const std::size_t mark = out.size();
            if (!search(-m, budget, imax, out)) {
                return false;
            }
            for (std::size_t i = mark; i < out.size(); ++i) {
                out[i].coefficient = -out[i].coefficient;
            }
            return true;
        }
        auto key = std::make_tuple(m, budget, imax);
        if (failures_.count(key) != 0) {
            return false;
        }
        for (long i = 0; i <= imax; ++i) {
            const BigInt &g = gens_.at(static_cast<std::size_t>(i));
            const BigInt below = i == 0 ? BigInt(0) : gens_.at(static_cast<std::size_t>(i - 1));
            if (g > m + BigInt(static_cast<long>(budget - 1)) * below) {
                continue;
            }
            for (std::int64_t c : coefficient_candidates(m, budget, g, below)) {
                const BigInt residual = m - BigInt(static_cast<long>(c)) * g;
                const std::size_t mark = out.size();
                if (search(residual, budget - (c < 0 ? -c : c), i - 1, out)) {
                    out.push_back({static_cast<std::size_t>(i), c});
                    return true;
                }
                out.resize(mark);
            }
        }
        if (failures_.size() < cache_size_) {
            failures_.insert(std::move(key));
        }
        return false;
    }

    // Nonzero c with |c| <= budget and |m - c g| <= (budget - |c|) g^-, ordered by |c|
    // then positive sign first.
    static std::vector<std::int64_t> coefficient_candidates(const BigInt &m, std::int64_t budget, const BigInt &g,
                                                            const BigInt &below)
    {
        std::vector<std::int64_t> out;
        const BigInt big_budget(static_cast<long>(budget));
        for (std::int64_t t = 1; t <= budget; ++t) {
            for (std::int64_t c : {t, -t}) {
                const BigInt residual = m - BigInt(static_cast<long>(c)) * g;
                if (abs(residual) <= (big_budget - t) * below) {
                    out.push_back(c);
                }
            }
        }
        return out;
    }

    GeneratorCache gens_;
    std::size_t cache_size_;
    std::set<std::tuple<BigInt, std::int64_t, long>> failures_;
};

WordLengthResult search_engine(const BigInt &n, const GeneratorSchedule &schedule, std::int64_t cap,
                               std::size_t cache_size)
{
    Searcher searcher(schedule, cache_size);
    for (std::int64_t budget = 0; budget <= cap; ++budget) {
        if (auto terms = searcher.solve(n, budget)) {
            WordLengthResult result;
            result.length = witness_length(*terms);
            result.witness = std::move(*terms);
            sort_witness(result.witness);
            return result;
        }
    }
    throw BudgetExceeded("word length of " + n.get_str() + " exceeds cap " + std::to_string(cap));
}

// ---------------------------------------------------------------------------
// upper bound

class UpperBuilder {
public:
    explicit UpperBuilder(const GeneratorSchedule &schedule) : gens_(schedule) {}

    struct Plan {
        BigInt length;
        std::vector<WitnessTerm> terms;
    };

    std::optional<Plan> run(const BigInt &m)
    {
        if (m == 0) {
            return Plan{0, {}};
        }
        long topmax = 0;
        while (gens_.has(static_cast<std::size_t>(topmax + 1)) && gens_.at(static_cast<std::size_t>(topmax)) <= m) {
            ++topmax;
        }
        return best(m, topmax);
    }

private:
    std::optional<Plan> best(const BigInt &m, long topmax)
    {
        if (m == 0) {
            return Plan{0, {}};
        }
        if (topmax < 0) {
            return std::nullopt;
        }
        auto key = std::make_pair(m, topmax);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        long floor_index = -1;
        for (long i = topmax; i >= 0; --i) {
            if (gens_.at(static_cast<std::size_t>(i)) <= m) {
                floor_index = i;
                break;
            }
        }
        std::optional<Plan> chosen;
        auto consider = [&](std::optional<Plan> rest, long index, const BigInt &coefficient, bool negate_rest) {
            if (!rest) {
                return;
            }
            Plan plan;
            plan.length = rest->length + abs(coefficient);
            plan.terms = std::move(rest->terms);
            if (negate_rest) {
                negate(plan.terms);
            }
            plan.terms.push_back({static_cast<std::size_t>(index), to_int64(coefficient)});
            if (!chosen || plan.length < chosen->length) {
                chosen = std::move(plan);
            }
        };
        if (floor_index >= 0) {
            const BigInt &g = gens_.at(static_cast<std::size_t>(floor_index));
            BigInt quotient, remainder;
            mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), m.get_mpz_t(), g.get_mpz_t());
            consider(best(remainder, floor_index - 1), floor_index, quotient, false);
            if (remainder != 0) {
                consider(best(g - remainder, floor_index - 1), floor_index, quotient + 1, true);
            }
        }
        if (floor_index + 1 <= topmax) {
            const BigInt &g = gens_.at(static_cast<std::size_t>(floor_index + 1));
            consider(best(g - m, floor_index), floor_index + 1, BigInt(1), true);
        }
        memo_.emplace(std::move(key), chosen);
        return chosen;
    }

    GeneratorCache gens_;
    std::map<std::pair<BigInt, long>, std::optional<Plan>> memo_;
};

// Layered BFS over signed sums; returns the layer index of each target.
template <typename OnLayer>
void enumerate_layers(const std::vector<std::int64_t> &admissible, std::int64_t max_terms, std::int64_t centre,
                      std::int64_t radius_base, OnLayer on_layer)
{
    const std::int64_t largest = admissible.empty() ? 0 : admissible.back();
    std::unordered_set<std::int64_t> seen{0};
    std::vector<std::int64_t> layer{0};
    on_layer(0, layer);
    for (std::int64_t t = 1; t <= max_terms && !layer.empty(); ++t) {
        const std::int64_t reach = radius_base + (max_terms - t) * largest;
        std::vector<std::int64_t> next;
        for (std::int64_t s : layer) {
            for (std::int64_t g : admissible) {
                for (std::int64_t v : {s + g, s - g}) {
                    if (v - centre > reach || centre - v > reach) {
                        continue;
                    }
                    if (seen.insert(v).second) {
                        next.push_back(v);
                    }
                }
            }
        }
        layer = std::move(next);
        if (!on_layer(t, layer)) {
            return;
        }
    }
}

std::vector<std::int64_t> oracle_generators(const GeneratorSchedule &schedule, std::int64_t magnitude,
                                            std::int64_t max_terms)
{
    std::vector<std::int64_t> out;
    GeneratorCache gens(schedule);
    const BigInt limit_base(static_cast<long>(magnitude));
    for (std::size_t i = 0; gens.has(i); ++i) {
        const BigInt &g = gens.at(i);
        if (i > 0 && g > limit_base + BigInt(static_cast<long>(max_terms)) * gens.at(i - 1)) {
            if (!schedule.is_finite()) {
                break;
            }
            continue;
        }
        if (!fits_int64(g)) {
            throw ResourceLimit("brute-force oracle needs generators below 2^62");
        }
        out.push_back(to_int64(g));
    }
    return out;
}

} // namespace

WordLengthResult word_length_exact(const BigInt &n, const GeneratorSchedule &schedule, std::int64_t length_cap,
                                   const WordLengthOptions &options)
{
    if (length_cap < 1) {
        throw InvalidArgument("length cap must be at least 1");
    }
    WordLengthEngine engine = options.engine;
    if (engine == WordLengthEngine::automatic) {
        engine = schedule.powers_of_two() ? WordLengthEngine::carry_dp : WordLengthEngine::search;
    }
    if (engine == WordLengthEngine::carry_dp) {
        if (!schedule.powers_of_two()) {
            throw InvalidArgument("carry-DP needs a power-of-two schedule");
        }
        return carry_dp(n, schedule, length_cap);
    }
    return search_engine(n, schedule, length_cap, options.cache_size);
}

WordLengthResult word_length_upper(const BigInt &n, const GeneratorSchedule &schedule)
{
    UpperBuilder builder(schedule);
    auto plan = builder.run(abs(n));
    WordLengthResult result;
    result.certificate = WordLengthResult::Certificate::upper_bound;
    if (!plan) {
        // Greedy recursion can dead-end when the smallest generator exceeds 1.
        result = word_length_exact(n, schedule, default_length_cap);
        result.certificate = WordLengthResult::Certificate::upper_bound;
        return result;
    }
    result.length = to_int64(plan->length);
    result.witness = std::move(plan->terms);
    sort_witness(result.witness);
    if (n < 0) {
        negate(result.witness);
    }
    return result;
}

WordLengthResult word_length(const BigInt &n, const GeneratorSchedule &schedule)
{
    const WordLengthResult upper = word_length_upper(n, schedule);
    if (upper.length <= 1) {
        WordLengthResult exact = upper;
        exact.certificate = WordLengthResult::Certificate::exact;
        return exact;
    }
    return word_length_exact(n, schedule, upper.length);
}

std::optional<std::int64_t> brute_force_oracle(const BigInt &n, const GeneratorSchedule &schedule,
                                               std::int64_t max_terms)
{
    if (max_terms < 1) {
        throw InvalidArgument("max_terms must be at least 1");
    }
    const std::int64_t target = to_int64(n);
    const std::int64_t magnitude = target < 0 ? -target : target;
    const std::vector<std::int64_t> admissible = oracle_generators(schedule, magnitude, max_terms);
    std::optional<std::int64_t> found;
    enumerate_layers(admissible, max_terms, target, 0, [&](std::int64_t t, const std::vector<std::int64_t> &layer) {
        if (std::find(layer.begin(), layer.end(), target) != layer.end()) {
            found = t;
            return false;
        }
        return true;
    });
    return found;
}

std::vector<std::optional<std::int64_t>> brute_force_table(std::int64_t bound, const GeneratorSchedule &schedule,
                                                           std::int64_t max_terms)
{
    if (bound < 0 || max_terms < 1) {
        throw InvalidArgument("brute_force_table needs bound >= 0 and max_terms >= 1");
    }
    const std::vector<std::int64_t> admissible = oracle_generators(schedule, bound, max_terms);
    std::vector<std::optional<std::int64_t>> table(static_cast<std::size_t>(bound + 1));
    enumerate_layers(admissible, max_terms, 0, bound, [&](std::int64_t t, const std::vector<std::int64_t> &layer) {
        for (std::int64_t v : layer) {
            if (v >= 0 && v <= bound) {
                table[static_cast<std::size_t>(v)] = t;
            }
        }
        return true;
    });
    return table;
}

} // namespace beurling
