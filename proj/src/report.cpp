#include "beurling/report.hpp"

#include "beurling/errors.hpp"

#include <sstream>

namespace beurling {

namespace {

Json big(const BigInt &z) { return z.get_str(); }

Json bigs(const std::vector<BigInt> &values)
{
    Json out = Json::array();
    for (const auto &v : values) {
        out.push_back(big(v));
    }
    return out;
}

Json ratio_json(const ExpRatio &r) { return Json{{"num", r.num.to_string()}, {"den", r.den.to_string()}}; }

ExpRatio ratio_from_json(const Json &j)
{
    return {ExpSum::parse(j.at("num").get<std::string>()), ExpSum::parse(j.at("den").get<std::string>())};
}

BigInt big_from_json(const Json &j)
{
    if (j.is_number_integer()) {
        return BigInt(static_cast<long>(j.get<std::int64_t>()));
    }
    BigInt out;
    if (!j.is_string() || out.set_str(j.get<std::string>(), 10) != 0) {
        throw InvalidArgument("expected an integer, got " + j.dump());
    }
    return out;
}

WindowBlock::Kind kind_from_string(const std::string &text)
{
    if (text == "zero") {
        return WindowBlock::Kind::zero;
    }
    if (text == "weight") {
        return WindowBlock::Kind::weight;
    }
    if (text == "value") {
        return WindowBlock::Kind::constant;
    }
    throw InvalidArgument("unknown psi block kind '" + text + "'");
}

void add_entry(Json &report, const CheckEntry &entry)
{
    Json values = Json::object();
    if (!entry.value.empty()) {
        values["value"] = entry.value;
    }
    if (!entry.margin.empty()) {
        values["margin"] = entry.margin;
    }
    add_check(report, entry.name, entry.status, std::move(values));
}

int status_rank(CheckStatus s)
{
    switch (s) {
    case CheckStatus::verified:
        return 0;
    case CheckStatus::inconclusive:
    case CheckStatus::budget_exceeded:
        return 1;
    case CheckStatus::failed:
        return 2;
    }
    return 2;
}

} // namespace

Json make_report(const std::string &claim, Json parameters)
{
    Json report;
    report["schema"] = report_schema;
    report["schema_version"] = report_schema_version;
    report["claim"] = claim;
    report["parameters"] = std::move(parameters);
    report["status"] = to_string(CheckStatus::verified);
    report["checks"] = Json::array();
    return report;
}

void add_check(Json &report, const std::string &name, CheckStatus status, Json values)
{
    Json check;
    check["name"] = name;
    check["status"] = to_string(status);
    for (auto &[key, value] : values.items()) {
        check[key] = value;
    }
    report["checks"].push_back(std::move(check));
    const CheckStatus current = parse_status(report["status"].get<std::string>());
    report["status"] = to_string(combine(current, status));
}

CheckStatus report_status(const Json &report)
{
    CheckStatus out = CheckStatus::verified;
    for (const auto &check : report.at("checks")) {
        out = combine(out, parse_status(check.at("status").get<std::string>()));
    }
    return out;
}

int exit_code(CheckStatus status)
{
    switch (status_rank(status)) {
    case 0:
        return 0;
    case 1:
        return 3;
    default:
        return 2;
    }
}

CheckStatus parse_status(const std::string &text)
{
    for (CheckStatus s : {CheckStatus::verified, CheckStatus::failed, CheckStatus::inconclusive,
                          CheckStatus::budget_exceeded}) {
        if (text == to_string(s)) {
            return s;
        }
    }
    throw InvalidArgument("unknown status '" + text + "'");
}

Json witness_json(const std::vector<WitnessTerm> &witness, const GeneratorSchedule &schedule)
{
    Json out = Json::array();
    for (const auto &term : witness) {
        out.push_back({{"index", term.index},
                       {"generator", big(schedule.generator(term.index))},
                       {"coefficient", term.coefficient}});
    }
    return out;
}

Json tuple_json(const std::vector<std::int64_t> &tuple) { return Json(tuple); }

Json word_length_report(const BigInt &n, const GeneratorSchedule &schedule, std::int64_t cap,
                        const WordLengthOptions &options)
{
    Json report = make_report("wordlen", {{"n", big(n)}, {"schedule", schedule.name()}, {"cap", cap}});
    try {
        const auto result = word_length_exact(n, schedule, cap, options);
        const bool ok = evaluate_witness(result.witness, schedule) == n &&
                        witness_length(result.witness) == result.length;
        add_check(report, "|n|_S", ok ? CheckStatus::verified : CheckStatus::failed,
                  {{"length", result.length},
                   {"certificate", to_string(result.certificate)},
                   {"witness", witness_json(result.witness, schedule)}});
    } catch (const BudgetExceeded &) {
        add_check(report, "|n|_S", CheckStatus::budget_exceeded, {{"length_exceeds", cap}});
    }
    return report;
}

Json lemma42_report(const Lemma42Report &r)
{
    const auto s0 = GeneratorSchedule::squares_of_two();
    const std::int64_t kmax = r.entries.empty() ? 0 : r.entries.back().k;
    Json report = make_report("lemma42", {{"kmax", kmax}, {"schedule", s0.name()}});
    for (const auto &e : r.entries) {
        Json values{{"k", e.k}, {"n", big(e.n)}, {"eta", e.eta}, {"expected", e.expected},
                    {"certificate", "exact"}, {"witness", witness_json(e.witness, s0)}};
        if (e.oracle) {
            values["oracle"] = *e.oracle;
        }
        add_check(report, "eta(n_" + std::to_string(e.k) + ") = " + std::to_string(e.expected), e.status,
                  std::move(values));
    }
    return report;
}

Json lemma43_report(const Lemma43Certificate &cert, Json parameters)
{
    const auto s0 = GeneratorSchedule::squares_of_two();
    parameters["r"] = cert.r;
    Json report = make_report("lemma43", std::move(parameters));
    const auto &rep = cert.representation;
    add_check(report, "r n_j representation",
              rep.sums_to_target && rep.within_r ? CheckStatus::verified : CheckStatus::failed,
              {{"target", big(rep.target)},
               {"length", rep.length},
               {"r", rep.r},
               {"witness", witness_json(rep.witness, s0)}});
    for (const auto &rec : cert.records) {
        add_check(report, "tuple", rec.pass ? CheckStatus::verified : CheckStatus::failed,
                  {{"tuple", tuple_json(rec.tuple)},
                   {"sum", big(rec.sum)},
                   {"eta_upper", rec.upper},
                   {"required", rec.required},
                   {"bound", "e^" + std::to_string(rec.exponent()) + "/" + std::to_string(cert.r)}});
    }
    return report;
}

Json lemma44_report(const Lemma44Report &r)
{
    const auto s0 = GeneratorSchedule::squares_of_two();
    Json report = make_report("lemma44", {{"j", r.j}, {"J", r.J}, {"r", r.r}});
    add_check(report, "2^{2J-1} > r J + 2r", r.J >= r.jmin ? CheckStatus::verified : CheckStatus::failed,
              {{"jmin", r.jmin}});
    add_check(report, "2^{k^2} > r k 2^{(k-1)^2} + r 2^{(k-1)^2+1} on [J, J+8]",
              r.cond2 ? CheckStatus::verified : CheckStatus::failed);
    for (const auto &e : r.entries) {
        Json values{{"tuple", tuple_json(e.tuple)}, {"sum", big(e.sum)}, {"bound", e.bound}};
        if (e.eta) {
            values["eta"] = *e.eta;
            values["certificate"] = "exact";
            values["witness"] = witness_json(e.witness, s0);
        }
        add_check(report, "eta(sum) >= sum k_i - r J", e.status, std::move(values));
    }
    return report;
}

Json cor45_report(const Cor45Report &r)
{
    Json report = make_report("cor45", {{"j", r.j}, {"J", r.J}, {"r", r.r}});
    for (const auto &e : r.entries) {
        add_check(report, "Omega >= e^{-r(J+1)}", e.status,
                  {{"tuple", tuple_json(e.tuple)},
                   {"eta", e.eta_lower},
                   {"eta_exact", e.exact},
                   {"exponent", e.exponent},
                   {"bound", e.bound}});
    }
    return report;
}

Json psi_report(const PsiCertificate &cert, const PsiVerification &verification, const std::vector<CheckEntry> &extra)
{
    Json report = make_report("psi", {{"weight", cert.weight},
                                      {"tolerance", cert.tolerance},
                                      {"levels", cert.levels()}});
    report["parameters"]["sj"] = cert.sj;
    report["parameters"]["tj"] = cert.tj;
    report["parameters"]["n_tJ"] = cert.nk.empty() ? Json("0") : big(cert.nk.back());
    for (const auto &entry : verification.checks) {
        add_entry(report, entry);
    }
    for (const auto &entry : extra) {
        add_entry(report, entry);
    }
    return report;
}

Json ladder_report(std::int64_t j, std::int64_t base, std::int64_t growth, std::int64_t power,
                   const LadderPowerOptions &options)
{
    const std::int64_t step = occurrence_growth(j, growth, options);
    Json report = make_report("ladder", {{"j", j},
                                         {"base", base},
                                         {"growth", growth},
                                         {"power", power},
                                         {"occurrence_growth", step}});
    const TensorSum product = ladder_power_tensor(j, base, growth, power, options);
    add_check(report, "<Lambda_j^p, h>", CheckStatus::verified,
              {{"value", to_string(product.h())}, {"l1_upper", to_string(product.l1_upper())}});
    if (j >= 2) {
        try {
            const bool ok = pi_i(build_ladder(j, base, growth), j) == build_ladder(j - 1, base * growth, growth);
            add_check(report, "pi_j(Lambda_j) = Lambda_{j-1}", ok ? CheckStatus::verified : CheckStatus::failed);
        } catch (const ResourceLimit &) {
            add_check(report, "pi_j(Lambda_j) = Lambda_{j-1}", CheckStatus::budget_exceeded);
        }
    }
    return report;
}

Json decay_report(const std::vector<DecayRow> &rows, Json parameters)
{
    Json report = make_report("decay", std::move(parameters));
    for (const auto &row : rows) {
        const std::int64_t target = -row.query.j * row.query.r;
        add_check(report, "sup [Omega^(r)]^{1/r} <= e^{-j}",
                  row.bound_numerator_exponent <= target ? CheckStatus::verified : CheckStatus::failed,
                  {{"j", row.query.j},
                   {"r", row.query.r},
                   {"kmin", row.query.kmin},
                   {"kmax", row.query.kmax},
                   {"bound_numerator_exponent", row.bound_numerator_exponent},
                   {"target_exponent", target},
                   {"argmax", tuple_json(row.argmax)},
                   {"sample_count", row.sample_count},
                   {"eta", row.exact ? "exact" : "upper-bound"}});
    }
    return report;
}

std::string decay_csv(const std::vector<DecayRow> &rows)
{
    std::ostringstream out;
    out << "r,j,bound_numerator_exponent,sample_count\n";
    for (const auto &row : rows) {
        out << row.query.r << ',' << row.query.j << ',' << row.bound_numerator_exponent << ',' << row.sample_count
            << '\n';
    }
    return out.str();
}

Json psi_to_json(const PsiCertificate &cert)
{
    Json out;
    out["schema"] = psi_schema;
    out["schema_version"] = psi_schema_version;
    out["weight"] = cert.weight;
    out["tolerance"] = cert.tolerance;
    out["nk"] = bigs(cert.nk);
    Json ck = Json::array();
    for (const auto &c : cert.Ck) {
        ck.push_back(c.to_string());
    }
    out["Ck"] = std::move(ck);
    Json psi = Json::array();
    for (const auto &block : cert.psi.blocks()) {
        Json b{{"lo", big(block.lo)}, {"hi", big(block.hi)}, {"kind", to_string(block.kind)}};
        if (block.kind == WindowBlock::Kind::constant) {
            b["value"] = block.value.to_string();
        }
        psi.push_back(std::move(b));
    }
    out["psi"] = std::move(psi);
    out["sj"] = cert.sj;
    out["tj"] = cert.tj;
    Json s = Json::array();
    Json t = Json::array();
    for (const auto &p : cert.pairings_s) {
        s.push_back(ratio_json(p));
    }
    for (const auto &p : cert.pairings_t) {
        t.push_back(ratio_json(p));
    }
    out["pairings"] = {{"s", std::move(s)}, {"t", std::move(t)}};
    return out;
}

PsiCertificate psi_from_json(const Json &json)
{
    try {
        if (json.at("schema") != psi_schema || json.at("schema_version") != psi_schema_version) {
            throw InvalidArgument("not a version " + std::to_string(psi_schema_version) + " psi certificate");
        }
        PsiCertificate cert;
        cert.weight = json.at("weight").get<std::string>();
        cert.tolerance = json.at("tolerance").get<std::string>();
        for (const auto &v : json.at("nk")) {
            cert.nk.push_back(big_from_json(v));
        }
        for (const auto &v : json.at("Ck")) {
            cert.Ck.push_back(ExpSum::parse(v.get<std::string>()));
        }
        for (const auto &b : json.at("psi")) {
            WindowBlock block;
            block.lo = big_from_json(b.at("lo"));
            block.hi = big_from_json(b.at("hi"));
            block.kind = kind_from_string(b.at("kind").get<std::string>());
            if (block.kind == WindowBlock::Kind::constant) {
                block.value = ExpSum::parse(b.at("value").get<std::string>());
            }
            cert.psi.append(std::move(block));
        }
        cert.sj = json.at("sj").get<std::vector<std::size_t>>();
        cert.tj = json.at("tj").get<std::vector<std::size_t>>();
        for (const auto &p : json.at("pairings").at("s")) {
            cert.pairings_s.push_back(ratio_from_json(p));
        }
        for (const auto &p : json.at("pairings").at("t")) {
            cert.pairings_t.push_back(ratio_from_json(p));
        }
        return cert;
    } catch (const nlohmann::json::exception &e) {
        throw InvalidArgument(std::string("malformed psi certificate: ") + e.what());
    }
}

WeightFn weight_from_name(const std::string &name, std::size_t cache_size)
{
    if (name == "trivial") {
        return WeightFn::trivial();
    }
    if (name == "exp-squares2") {
        return WeightFn::exp_wordlength(GeneratorSchedule::squares_of_two(), cache_size);
    }
    throw InvalidArgument("unknown weight '" + name + "' (expected trivial or exp-squares2)");
}

std::vector<std::vector<std::int64_t>> tuples_from_json(const Json &json)
{
    if (!json.is_array()) {
        throw InvalidArgument("instances must be a JSON list of integer tuples");
    }
    std::vector<std::vector<std::int64_t>> out;
    for (const auto &tuple : json) {
        if (!tuple.is_array()) {
            throw InvalidArgument("instances must be a JSON list of integer tuples");
        }
        std::vector<std::int64_t> t;
        for (const auto &v : tuple) {
            if (!v.is_number_integer()) {
                throw InvalidArgument("tuple entries must be integers, got " + v.dump());
            }
            t.push_back(v.get<std::int64_t>());
        }
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace beurling
