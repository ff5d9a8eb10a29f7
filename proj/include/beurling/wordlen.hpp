#pragma once

#include "beurling/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace beurling {

// Strictly increasing positive generators s_0 < s_1 < ... of Z.
class GeneratorSchedule {
public:
    enum class Kind { explicit_list, squares_of_two, unit_only };

    // s_k = 2^{k^2}, k >= 0.
    static GeneratorSchedule squares_of_two();
    // {1}; |n| is the word length.
    static GeneratorSchedule unit_only();
    // Throws InvalidArgument unless the list is nonempty, positive and strictly increasing.
    static GeneratorSchedule explicit_list(std::vector<BigInt> generators);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ != Kind::squares_of_two; }
    // Number of generators for finite schedules.
    std::size_t size() const;
    BigInt generator(std::size_t index) const;
    std::vector<BigInt> generators_upto(const BigInt &bound) const;

    // True when every generator is a power of two (carry-DP applies).
    bool powers_of_two() const { return powers_of_two_; }
    // log2 of generator(index); requires powers_of_two().
    std::size_t exponent_of(std::size_t index) const;
    // Index of the generator 2^exponent, if there is one.
    std::optional<std::size_t> index_of_exponent(std::size_t exponent) const;

    // "squares2", "unit", or "explicit:3,5".
    std::string name() const;

private:
    GeneratorSchedule(Kind kind, std::vector<BigInt> generators);

    Kind kind_;
    std::vector<BigInt> generators_;
    std::vector<std::size_t> exponents_;
    bool powers_of_two_ = false;
};

struct WitnessTerm {
    std::size_t index = 0;        // generator index
    std::int64_t coefficient = 0; // signed, nonzero
    friend bool operator==(const WitnessTerm &, const WitnessTerm &) = default;
};

// n = sum coefficient * generator(index); length = sum |coefficient|.
// Equivalent to the signed-term form n = sum eps_i s_i with |c| repeated terms.
struct WordLengthResult {
    enum class Certificate { exact, upper_bound };

    std::int64_t length = 0;
    std::vector<WitnessTerm> witness;
    Certificate certificate = Certificate::exact;
};

const char *to_string(WordLengthResult::Certificate certificate);

enum class WordLengthEngine {
    automatic, // carry-DP for power-of-two schedules, search otherwise
    carry_dp,
    search,
};

struct WordLengthOptions {
    WordLengthEngine engine = WordLengthEngine::automatic;
    // Failure-memo entries kept by the search engine (per call).
    std::size_t cache_size = 1 << 20;
};

inline constexpr std::int64_t default_length_cap = 64;

std::vector<BigInt> generators_upto(const GeneratorSchedule &schedule, const BigInt &bound);

// Exact |n|_S.  Throws BudgetExceeded when |n|_S > length_cap.
WordLengthResult word_length_exact(const BigInt &n, const GeneratorSchedule &schedule,
                                   std::int64_t length_cap = default_length_cap,
                                   const WordLengthOptions &options = {});

// Valid representation with length >= |n|_S; greedy floor/ceiling recursion.
WordLengthResult word_length_upper(const BigInt &n, const GeneratorSchedule &schedule);

// word_length_exact with the cap set to the upper bound, so it never runs out of budget
// on power-of-two schedules.
WordLengthResult word_length(const BigInt &n, const GeneratorSchedule &schedule);

// Exhaustive layered enumeration of signed sums of at most max_terms admissible
// generators.  Independent of both exact engines.
std::optional<std::int64_t> brute_force_oracle(const BigInt &n, const GeneratorSchedule &schedule,
                                               std::int64_t max_terms);

// Same enumeration run once for every target in [0, bound]; entry n is |n|_S or empty.
std::vector<std::optional<std::int64_t>> brute_force_table(std::int64_t bound, const GeneratorSchedule &schedule,
                                                           std::int64_t max_terms);

BigInt evaluate_witness(const std::vector<WitnessTerm> &witness, const GeneratorSchedule &schedule);
std::int64_t witness_length(const std::vector<WitnessTerm> &witness);

} // namespace beurling
