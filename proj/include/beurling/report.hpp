#pragma once

#include "beurling/dsum.hpp"
#include "beurling/l1z.hpp"
#include "beurling/meanslab.hpp"
#include "beurling/status.hpp"
#include "beurling/witness5.hpp"
#include "beurling/wordlen.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace beurling {

using Json = nlohmann::ordered_json;

inline constexpr const char *report_schema = "beurling-report";
inline constexpr int report_schema_version = 1;
inline constexpr const char *psi_schema = "beurling-psi";
inline constexpr int psi_schema_version = 1;

// {"schema", "schema_version", "claim", "parameters", "status", "checks": []}
Json make_report(const std::string &claim, Json parameters);
// Appends {"name", "status", ...values}; keeps "status" the worst seen so far.
void add_check(Json &report, const std::string &name, CheckStatus status, Json values = Json::object());
CheckStatus report_status(const Json &report);
// 0 verified, 2 failed, 3 inconclusive or budget-exceeded.
int exit_code(CheckStatus status);
CheckStatus parse_status(const std::string &text);

Json witness_json(const std::vector<WitnessTerm> &witness, const GeneratorSchedule &schedule);
Json tuple_json(const std::vector<std::int64_t> &tuple);

Json word_length_report(const BigInt &n, const GeneratorSchedule &schedule, std::int64_t cap,
                        const WordLengthOptions &options = {});
Json lemma42_report(const Lemma42Report &report);
Json lemma43_report(const Lemma43Certificate &cert, Json parameters);
Json lemma44_report(const Lemma44Report &report);
Json cor45_report(const Cor45Report &report);
Json psi_report(const PsiCertificate &cert, const PsiVerification &verification,
                const std::vector<CheckEntry> &extra = {});
Json ladder_report(std::int64_t j, std::int64_t base, std::int64_t growth, std::int64_t power,
                   const LadderPowerOptions &options = {});
Json decay_report(const std::vector<DecayRow> &rows, Json parameters);

// Header "r,j,bound_numerator_exponent,sample_count".
std::string decay_csv(const std::vector<DecayRow> &rows);

Json psi_to_json(const PsiCertificate &cert);
PsiCertificate psi_from_json(const Json &json);

// "trivial" or "exp-squares2"; the second uses cache_size entries of eta cache.
WeightFn weight_from_name(const std::string &name, std::size_t cache_size = 1 << 16);

// JSON list of integer tuples.
std::vector<std::vector<std::int64_t>> tuples_from_json(const Json &json);

} // namespace beurling
