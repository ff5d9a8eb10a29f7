#include "beurling/witness5.hpp"

#include "beurling/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace beurling {

namespace {

const GeneratorSchedule &s0()
{
    static const GeneratorSchedule schedule = GeneratorSchedule::squares_of_two();
    return schedule;
}

void require_level(std::int64_t j)
{
    if (j < 1 || j > 30) {
        throw InvalidArgument("level j must lie in [1, 30]");
    }
}

std::int64_t tuple_sum(const std::vector<std::int64_t> &tuple)
{
    return std::accumulate(tuple.begin(), tuple.end(), std::int64_t{0});
}

BigInt sequence_sum(const std::vector<std::int64_t> &tuple)
{
    BigInt total = 0;
    for (std::int64_t k : tuple) {
        total += nk5(k);
    }
    return total;
}

std::vector<WitnessTerm> merge(const std::map<std::size_t, std::int64_t> &coefficients)
{
    std::vector<WitnessTerm> out;
    for (const auto &[index, c] : coefficients) {
        if (c != 0) {
            out.push_back({index, c});
        }
    }
    return out;
}

template <class Entries>
CheckStatus worst(const Entries &entries)
{
    CheckStatus out = CheckStatus::verified;
    for (const auto &e : entries) {
        out = combine(out, e.status);
    }
    return out;
}

} // namespace

BigInt nk5(std::int64_t k)
{
    if (k < 0) {
        throw InvalidArgument("n_k needs k >= 0");
    }
    BigInt total = 0;
    for (std::int64_t i = 0; i <= k; ++i) {
        total += pow2(static_cast<unsigned long>(i * i));
    }
    return total;
}

std::int64_t lemma_r(std::int64_t j)
{
    require_level(j);
    return std::int64_t{1} << (2 * j + 1);
}

std::vector<WitnessTerm> telescoping_witness(std::int64_t k)
{
    std::vector<WitnessTerm> out;
    for (std::int64_t i = 0; i <= k; ++i) {
        out.push_back({static_cast<std::size_t>(i), 1});
    }
    return out;
}

CheckStatus Lemma42Report::status() const { return worst(entries); }

Lemma42Report verify_lemma42(std::int64_t kmax, std::int64_t oracle_kmax)
{
    if (kmax < 1) {
        throw InvalidArgument("kmax must be at least 1");
    }
    Lemma42Report report;
    for (std::int64_t k = 1; k <= kmax; ++k) {
        Lemma42Entry entry;
        entry.k = k;
        entry.n = nk5(k);
        entry.expected = k + 1;
        entry.witness = telescoping_witness(k);
        try {
            entry.eta = word_length_exact(entry.n, s0()).length;
        } catch (const BudgetExceeded &) {
            entry.status = CheckStatus::budget_exceeded;
            report.entries.push_back(std::move(entry));
            continue;
        }
        bool ok = entry.eta == entry.expected && evaluate_witness(entry.witness, s0()) == entry.n &&
                  witness_length(entry.witness) == entry.expected;
        if (k <= oracle_kmax) {
            entry.oracle = brute_force_oracle(entry.n, s0(), entry.expected);
            ok = ok && entry.oracle == entry.expected;
        }
        entry.status = ok ? CheckStatus::verified : CheckStatus::failed;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

RrnjRepresentation rep_r_nj(std::int64_t j)
{
    RrnjRepresentation rep;
    rep.j = j;
    rep.r = lemma_r(j);
    rep.target = BigInt(static_cast<long>(rep.r)) * nk5(j);
    for (std::int64_t i = j; i >= 0; --i) {
        const std::int64_t coefficient = std::int64_t{1} << (2 * i);
        rep.witness.push_back({static_cast<std::size_t>(j + 1 - i), coefficient});
        rep.length += coefficient;
    }
    rep.sums_to_target = evaluate_witness(rep.witness, s0()) == rep.target;
    rep.within_r = rep.length <= rep.r && 3 * rep.length == (std::int64_t{4} << (2 * j)) - 1;
    return rep;
}

std::int64_t Lemma43Record::exponent() const
{
    return upper - tuple_sum(tuple) - static_cast<std::int64_t>(tuple.size());
}

bool Lemma43Certificate::all_pass() const
{
    return representation.sums_to_target && representation.within_r &&
           std::all_of(records.begin(), records.end(), [](const Lemma43Record &r) { return r.pass; });
}

Lemma43Record lemma43_record(std::int64_t j, const std::vector<std::int64_t> &tuple)
{
    const std::int64_t r = lemma_r(j);
    if (static_cast<std::int64_t>(tuple.size()) != r) {
        throw InvalidArgument("tuples must have length r = " + std::to_string(r));
    }
    if (*std::min_element(tuple.begin(), tuple.end()) < j) {
        throw InvalidArgument("tuples need every k_i >= j");
    }
    const RrnjRepresentation rep = rep_r_nj(j);
    std::map<std::size_t, std::int64_t> coefficients;
    for (const auto &term : rep.witness) {
        coefficients[term.index] += term.coefficient;
    }
    for (std::int64_t k : tuple) {
        // n_k - n_j = 2^{(j+1)^2} + ... + 2^{k^2}
        for (std::int64_t i = j + 1; i <= k; ++i) {
            coefficients[static_cast<std::size_t>(i)] += 1;
        }
    }
    Lemma43Record record;
    record.tuple = tuple;
    record.sum = sequence_sum(tuple);
    const auto witness = merge(coefficients);
    record.upper = witness_length(witness);
    record.required = tuple_sum(tuple) + r - j * r;
    record.witness_ok = evaluate_witness(witness, s0()) == record.sum;
    record.pass = record.witness_ok && rep.sums_to_target && record.upper <= record.required;
    return record;
}

Lemma43Certificate verify_lemma43(std::int64_t j, const std::vector<std::vector<std::int64_t>> &tuples)
{
    Lemma43Certificate cert;
    cert.j = j;
    cert.r = lemma_r(j);
    cert.representation = rep_r_nj(j);
    for (const auto &tuple : tuples) {
        cert.records.push_back(lemma43_record(j, tuple));
    }
    return cert;
}

std::int64_t jmin_for_lemma44(std::int64_t j)
{
    const BigInt r = static_cast<long>(lemma_r(j));
    const auto holds = [&](std::int64_t k) { return pow2(static_cast<unsigned long>(2 * k - 1)) > r * k + 2 * r; };
    std::int64_t J = 1;
    while (!holds(J)) {
        ++J;
    }
    for (std::int64_t k = J; k <= J + 64; ++k) {
        if (!holds(k)) {
            throw InvalidArgument("2^{2k-1} > r k + 2r fails past J");
        }
    }
    return J;
}

bool lemma44_cond2(std::int64_t j, std::int64_t J, std::int64_t count)
{
    const BigInt r = static_cast<long>(lemma_r(j));
    for (std::int64_t k = std::max<std::int64_t>(J, 1); k <= J + count; ++k) {
        const BigInt previous = pow2(static_cast<unsigned long>((k - 1) * (k - 1)));
        if (pow2(static_cast<unsigned long>(k * k)) <= r * k * previous + r * 2 * previous) {
            return false;
        }
    }
    return true;
}

CheckStatus Lemma44Report::status() const
{
    return cond2 ? worst(entries) : CheckStatus::failed;
}

Lemma44Report verify_lemma44(std::int64_t j, std::int64_t J, const std::vector<std::vector<std::int64_t>> &instances,
                             std::int64_t length_cap)
{
    Lemma44Report report;
    report.j = j;
    report.J = J;
    report.r = lemma_r(j);
    report.jmin = jmin_for_lemma44(j);
    if (J < report.jmin) {
        throw InvalidArgument("J must be at least " + std::to_string(report.jmin));
    }
    report.cond2 = lemma44_cond2(j, J);
    for (const auto &tuple : instances) {
        if (static_cast<std::int64_t>(tuple.size()) != report.r || !std::is_sorted(tuple.rbegin(), tuple.rend()) ||
            tuple.back() < J) {
            throw InvalidArgument("instances must be non-increasing r-tuples with entries >= J");
        }
        Lemma44Entry entry;
        entry.tuple = tuple;
        entry.sum = sequence_sum(tuple);
        entry.bound = tuple_sum(tuple) - report.r * J;
        try {
            const auto result = word_length_exact(entry.sum, s0(), length_cap);
            entry.eta = result.length;
            entry.witness = result.witness;
            const bool ok = evaluate_witness(result.witness, s0()) == entry.sum && *entry.eta >= entry.bound;
            entry.status = ok ? CheckStatus::verified : CheckStatus::failed;
        } catch (const BudgetExceeded &) {
            entry.status = CheckStatus::budget_exceeded;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

CheckStatus Cor45Report::status() const { return worst(entries); }

Cor45Report cor45_lower(std::int64_t j, const std::vector<std::vector<std::int64_t>> &tuples, std::int64_t length_cap)
{
    Cor45Report report;
    report.j = j;
    report.r = lemma_r(j);
    report.J = jmin_for_lemma44(j);
    for (const auto &tuple : tuples) {
        if (static_cast<std::int64_t>(tuple.size()) != report.r ||
            *std::min_element(tuple.begin(), tuple.end()) < report.J) {
            throw InvalidArgument("tuples must be r-tuples with entries >= J");
        }
        Cor45Entry entry;
        entry.tuple = tuple;
        entry.bound = -report.r * (report.J + 1);
        try {
            entry.eta_lower = word_length_exact(sequence_sum(tuple), s0(), length_cap).length;
            entry.exact = true;
        } catch (const BudgetExceeded &) {
            // the exact solver proved eta > cap
            entry.eta_lower = length_cap + 1;
        }
        entry.exponent = entry.eta_lower - tuple_sum(tuple) - report.r;
        entry.status = entry.exponent >= entry.bound ? CheckStatus::verified
                       : entry.exact                 ? CheckStatus::failed
                                                     : CheckStatus::budget_exceeded;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace beurling
