#pragma once

#include "beurling/numeric.hpp"
#include "beurling/status.hpp"
#include "beurling/wordlen.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace beurling {

// n_k = 2^{k^2} + 2^{(k-1)^2} + ... + 2^0
BigInt nk5(std::int64_t k);

// r(j) = 2^{2j+1}
std::int64_t lemma_r(std::int64_t j);

// n_k as one copy of each generator 2^{i^2}, i = 0..k.
std::vector<WitnessTerm> telescoping_witness(std::int64_t k);

struct Lemma42Entry {
    std::int64_t k = 0;
    BigInt n;
    std::int64_t eta = 0;      // exact solver
    std::int64_t expected = 0; // k + 1
    std::vector<WitnessTerm> witness;
    std::optional<std::int64_t> oracle; // brute force, small k only
    CheckStatus status = CheckStatus::verified;
};

struct Lemma42Report {
    std::vector<Lemma42Entry> entries;
    CheckStatus status() const;
};

// eta(n_k) = k + 1 for k = 1..kmax; brute-force cross-check for k <= oracle_kmax.
Lemma42Report verify_lemma42(std::int64_t kmax, std::int64_t oracle_kmax = 3);

struct RrnjRepresentation {
    std::int64_t j = 0;
    std::int64_t r = 0;
    BigInt target;                   // r * n_j
    std::vector<WitnessTerm> witness; // 4^i at generator j+1-i
    std::int64_t length = 0;          // (4^{j+1} - 1)/3
    bool sums_to_target = false;
    bool within_r = false;
};

RrnjRepresentation rep_r_nj(std::int64_t j);

struct Lemma43Record {
    std::vector<std::int64_t> tuple;
    BigInt sum;
    std::int64_t upper = 0;    // length of the certified representation of the sum
    std::int64_t required = 0; // sum k_i + r - j r
    bool witness_ok = false;   // representation re-evaluates to the sum
    bool pass = false;
    // exponent m of the bound [Omega]^{1/r} <= e^{m/r}, from upper
    std::int64_t exponent() const;
};

struct Lemma43Certificate {
    std::int64_t j = 0;
    std::int64_t r = 0;
    RrnjRepresentation representation;
    std::vector<Lemma43Record> records;
    bool all_pass() const;
};

// Tuples must have length r and entries >= j (any order).
Lemma43Record lemma43_record(std::int64_t j, const std::vector<std::int64_t> &tuple);
Lemma43Certificate verify_lemma43(std::int64_t j, const std::vector<std::vector<std::int64_t>> &tuples);

// Least J >= 1 with 2^{2J-1} > r J + 2r; the inequality is then checked on [J, J + 64].
std::int64_t jmin_for_lemma44(std::int64_t j);
// 2^{k^2} > r k 2^{(k-1)^2} + r 2^{(k-1)^2+1} for k in [J, J + count].
bool lemma44_cond2(std::int64_t j, std::int64_t J, std::int64_t count = 8);

struct Lemma44Entry {
    std::vector<std::int64_t> tuple;
    BigInt sum;
    std::int64_t bound = 0; // sum k_i - r J
    std::optional<std::int64_t> eta;
    std::vector<WitnessTerm> witness;
    CheckStatus status = CheckStatus::verified;
};

struct Lemma44Report {
    std::int64_t j = 0;
    std::int64_t J = 0;
    std::int64_t r = 0;
    std::int64_t jmin = 0;
    bool cond2 = false;
    std::vector<Lemma44Entry> entries;
    CheckStatus status() const;
};

// Tuples must be non-increasing, of length r, with last entry >= J, and J >= jmin.
// eta larger than length_cap is reported as budget-exceeded.
Lemma44Report verify_lemma44(std::int64_t j, std::int64_t J, const std::vector<std::vector<std::int64_t>> &instances,
                             std::int64_t length_cap = default_length_cap);

struct Cor45Entry {
    std::vector<std::int64_t> tuple;
    std::int64_t eta_lower = 0; // exact eta, or the lower bound when eta was out of budget
    bool exact = false;
    std::int64_t exponent = 0; // eta_lower - sum (k_i + 1)
    std::int64_t bound = 0;    // -r (J + 1)
    CheckStatus status = CheckStatus::verified;
};

struct Cor45Report {
    std::int64_t j = 0;
    std::int64_t J = 0;
    std::int64_t r = 0;
    std::vector<Cor45Entry> entries;
    CheckStatus status() const;
};

// Omega^{(r)}(n_{k_1}, ..., n_{k_r}) >= e^{-r(J+1)} with J = jmin_for_lemma44(j).
Cor45Report cor45_lower(std::int64_t j, const std::vector<std::vector<std::int64_t>> &tuples,
                        std::int64_t length_cap = default_length_cap);

} // namespace beurling
