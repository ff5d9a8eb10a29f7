#include "beurling/cli.hpp"

#include "beurling/errors.hpp"
#include "beurling/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace beurling::cli {

namespace {

std::size_t cache_size_from_env(std::size_t fallback)
{
    const char *text = std::getenv("BEURLING_WORDLEN_CACHE");
    if (text == nullptr || *text == '\0') {
        return fallback;
    }
    char *end = nullptr;
    const unsigned long long value = std::strtoull(text, &end, 10);
    if (*end != '\0' || value == 0) {
        throw InvalidArgument("BEURLING_WORDLEN_CACHE must be a positive integer");
    }
    return static_cast<std::size_t>(value);
}

BigInt parse_big(const std::string &text, const char *what)
{
    BigInt out;
    const std::string trimmed = !text.empty() && text[0] == '+' ? text.substr(1) : text;
    if (trimmed.empty() || out.set_str(trimmed, 10) != 0) {
        throw InvalidArgument(std::string(what) + " must be an integer, got '" + text + "'");
    }
    return out;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidArgument("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidArgument("cannot write " + path);
    }
    out << content;
    if (!out) {
        throw InvalidArgument("failed writing " + path);
    }
}

Json parse_json(const std::string &text, const std::string &source)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InvalidArgument(source + ": " + e.what());
    }
}

// squares2 | unit | file:PATH (JSON list of positive integers)
GeneratorSchedule schedule_from_flag(const std::string &flag)
{
    if (flag == "squares2") {
        return GeneratorSchedule::squares_of_two();
    }
    if (flag == "unit") {
        return GeneratorSchedule::unit_only();
    }
    if (flag.rfind("file:", 0) == 0) {
        const std::string path = flag.substr(5);
        const Json list = parse_json(read_file(path), path);
        if (!list.is_array()) {
            throw InvalidArgument(path + ": expected a JSON list of generators");
        }
        std::vector<BigInt> generators;
        for (const auto &g : list) {
            if (g.is_number_integer()) {
                generators.emplace_back(static_cast<long>(g.get<std::int64_t>()));
            } else if (g.is_string()) {
                generators.push_back(parse_big(g.get<std::string>(), "generator"));
            } else {
                throw InvalidArgument(path + ": generators must be integers");
            }
        }
        return GeneratorSchedule::explicit_list(std::move(generators));
    }
    throw InvalidArgument("unknown schedule '" + flag + "' (expected squares2, unit or file:PATH)");
}

std::vector<std::vector<std::int64_t>> read_tuples(const std::string &path)
{
    return tuples_from_json(parse_json(read_file(path), path));
}

class Runner {
public:
    Runner(std::ostream &out, std::ostream &err) : out_(out), err_(err) {}

    int run(const std::vector<std::string> &args);

private:
    using Action = std::function<Json()>;

    CLI::App *leaf(CLI::App &parent, const std::string &name, const std::string &description, Action action)
    {
        CLI::App *sub = parent.add_subcommand(name, description);
        sub->add_option("--report", report_path_, "Write the JSON report here instead of stdout");
        sub->callback([this, action, name] {
            action_ = action;
            claim_ = name;
        });
        return sub;
    }

    void build(CLI::App &app);

    std::ostream &out_;
    std::ostream &err_;
    std::string report_path_;
    Action action_;
    std::string claim_;

    // option storage
    std::string n_ = "0";
    std::string schedule_ = "squares2";
    std::int64_t cap_ = default_length_cap;
    std::int64_t kmax42_ = 5;
    std::int64_t oracle_kmax_ = 3;
    std::int64_t j_ = 1;
    std::int64_t kmin_ = 1;
    std::int64_t kmax_ = 6;
    std::size_t samples_ = 200;
    std::uint64_t seed_ = 7;
    std::string instances_;
    std::optional<std::int64_t> J_;
    std::string weight_ = "trivial";
    std::size_t levels_ = 6;
    std::string out_path_ = "psi.json";
    std::string in_path_ = "psi.json";
    std::string search_bound_;
    std::size_t max_index_ = 10000;
    std::int64_t ladder_j_ = 2;
    std::int64_t base_ = 4;
    std::int64_t growth_ = 4;
    std::int64_t power_ = 3;
    std::int64_t occurrence_growth_ = 0;
    std::int64_t jmax_ = 3;
    std::int64_t span_ = 4;
    std::string decay_out_ = "decay.csv";
    std::string mode_ = "exact";
};

void Runner::build(CLI::App &app)
{
    app.require_subcommand(1);

    auto *wordlen = leaf(app, "wordlen", "Exact word length with a witness", [this] {
        const auto schedule = schedule_from_flag(schedule_);
        WordLengthOptions options;
        options.cache_size = cache_size_from_env(options.cache_size);
        return word_length_report(parse_big(n_, "--n"), schedule, cap_, options);
    });
    wordlen->add_option("--n", n_, "Integer to measure")->required();
    wordlen->add_option("--schedule", schedule_, "squares2, unit or file:PATH")->capture_default_str();
    wordlen->add_option("--cap", cap_, "Length cap")->capture_default_str()->check(CLI::NonNegativeNumber);

    auto *verify = app.add_subcommand("verify", "Verify the word-length lemmas for n_k");
    verify->require_subcommand(1);

    auto *l42 = leaf(*verify, "lemma42", "eta(n_k) = k + 1", [this] {
        return lemma42_report(verify_lemma42(kmax42_, oracle_kmax_));
    });
    l42->add_option("--kmax", kmax42_)->capture_default_str()->check(CLI::PositiveNumber);
    l42->add_option("--oracle-kmax", oracle_kmax_, "Brute-force cross-check up to this k")->capture_default_str();

    auto *l43 = leaf(*verify, "lemma43", "Upper bounds [Omega^(r)]^{1/r} <= e^{-j} on tuples", [this] {
        const std::int64_t r = lemma_r(j_);
        const auto tuples = tuple_grid(r, kmin_, kmax_, samples_, seed_);
        Json parameters{{"j", j_},         {"kmin", kmin_}, {"kmax", kmax_},
                        {"samples", samples_}, {"seed", seed_}, {"sampler", "mt19937_64"},
                        {"tuple_count", tuples.size()}};
        return lemma43_report(verify_lemma43(j_, tuples), std::move(parameters));
    });
    l43->add_option("--j", j_)->capture_default_str()->check(CLI::PositiveNumber);
    l43->add_option("--kmin", kmin_)->capture_default_str();
    l43->add_option("--kmax", kmax_)->capture_default_str();
    l43->add_option("--samples", samples_)->capture_default_str();
    l43->add_option("--seed", seed_)->capture_default_str();

    auto *l44 = leaf(*verify, "lemma44", "Exact lower bounds eta(sum n_k_i) >= sum k_i - r J", [this] {
        const std::int64_t J = J_ ? *J_ : jmin_for_lemma44(j_);
        return lemma44_report(verify_lemma44(j_, J, read_tuples(instances_), cap_));
    });
    l44->add_option("--j", j_)->capture_default_str()->check(CLI::PositiveNumber);
    l44->add_option("--J", J_, "Threshold (default: least admissible)");
    l44->add_option("--instances", instances_, "JSON list of non-increasing tuples")->required();
    l44->add_option("--cap", cap_, "Length cap for the exact solver")->capture_default_str();

    auto *c45 = leaf(*verify, "cor45", "Omega^(r) >= e^{-r(J+1)} on tuples", [this] {
        return cor45_report(cor45_lower(j_, read_tuples(instances_), cap_));
    });
    c45->add_option("--j", j_)->capture_default_str()->check(CLI::PositiveNumber);
    c45->add_option("--instances", instances_, "JSON list of tuples")->required();
    c45->add_option("--cap", cap_, "Length cap for the exact solver")->capture_default_str();

    auto *sec3 = app.add_subcommand("sec3", "Cesaro means and the oscillating witness psi");
    sec3->require_subcommand(1);

    auto *build3 = leaf(*sec3, "build", "Build and verify a psi certificate", [this] {
        const WeightFn weight = weight_from_name(weight_, cache_size_from_env(1 << 16));
        const BigInt bound = search_bound_.empty()
                                 ? (weight.kind() == WeightFn::Kind::trivial ? pow2(512) : BigInt(1'000'000))
                                 : parse_big(search_bound_, "--search-bound");
        CesaroState state(weight, default_tolerance(weight), bound, default_tolerance_name(weight));
        const PsiCertificate cert = build_psi_extending(state, levels_, max_index_);
        const auto verification = verify_psi(cert, weight);
        const auto defect = invariance_defect(state, cert.tj.back());
        CheckEntry entry{"invariance defect at n_tJ <= (omega(1) omega(n) + omega(0))/C",
                         status_from_sign(defect.exact_vs_coarse == Sign::zero ? Sign::negative
                                                                               : defect.exact_vs_coarse,
                                          Sign::negative),
                         defect.exact.to_string(),
                         ExpRatio{defect.coarse.num - defect.exact.num, defect.exact.den}.to_string()};
        write_file(out_path_, psi_to_json(cert).dump(2) + "\n");
        Json report = psi_report(cert, verification, {entry});
        report["parameters"]["out"] = out_path_;
        return report;
    });
    build3->add_option("--weight", weight_, "trivial or exp-squares2")->capture_default_str();
    build3->add_option("--levels", levels_, "Number of levels J")->capture_default_str()->check(CLI::PositiveNumber);
    build3->add_option("--out", out_path_, "Certificate path")->capture_default_str();
    build3->add_option("--search-bound", search_bound_, "Largest n scanned for n_k");
    build3->add_option("--max-index", max_index_, "Largest k the state may reach")->capture_default_str();

    auto *check3 = leaf(*sec3, "check", "Re-verify a psi certificate", [this] {
        const PsiCertificate cert = psi_from_json(parse_json(read_file(in_path_), in_path_));
        const WeightFn weight = weight_from_name(cert.weight, cache_size_from_env(1 << 16));
        Json report = psi_report(cert, verify_psi(cert, weight));
        report["parameters"]["in"] = in_path_;
        return report;
    });
    check3->add_option("--in", in_path_, "Certificate path")->capture_default_str();

    auto *sec4 = app.add_subcommand("sec4", "Direct-sum ladder surrogates");
    sec4->require_subcommand(1);
    auto *ladder = leaf(*sec4, "ladder", "<Lambda_j^p, h> over staircase indices", [this] {
        return ladder_report(ladder_j_, base_, growth_, power_, {occurrence_growth_});
    });
    ladder->add_option("--j", ladder_j_)->capture_default_str()->check(CLI::PositiveNumber);
    ladder->add_option("--base", base_)->capture_default_str()->check(CLI::PositiveNumber);
    ladder->add_option("--growth", growth_)->capture_default_str()->check(CLI::Range(2, 1 << 20));
    ladder->add_option("--power", power_)->capture_default_str()->check(CLI::PositiveNumber);
    ladder->add_option("--occurrence-growth", occurrence_growth_, "Index growth between occurrences (0: growth^j)")
        ->capture_default_str();

    auto *profile = app.add_subcommand("profile", "Decay tables");
    profile->require_subcommand(1);
    auto *decay = leaf(*profile, "decay", "sup [Omega^(r)]^{1/r} over tuples of n_k", [this] {
        const WeightFn weight = weight_from_name("exp-squares2", cache_size_from_env(1 << 16));
        std::vector<DecayQuery> queries;
        for (std::int64_t j = 1; j <= jmax_; ++j) {
            queries.push_back({j, lemma_r(j), j, j + span_});
        }
        DecayOptions options;
        options.mode = mode_ == "upper" ? DecayOptions::Mode::upper : DecayOptions::Mode::exact;
        options.samples = samples_;
        options.seed = seed_;
        const auto rows = decay_profile(weight, nk5, queries, options);
        write_file(decay_out_, decay_csv(rows));
        return decay_report(rows, {{"jmax", jmax_},
                                   {"span", span_},
                                   {"mode", mode_},
                                   {"samples", samples_},
                                   {"seed", seed_},
                                   {"sampler", "mt19937_64"},
                                   {"out", decay_out_}});
    });
    decay->add_option("--jmax", jmax_)->capture_default_str()->check(CLI::Range(1, 6));
    decay->add_option("--span", span_, "Rows use k in [j, j + span]")->capture_default_str()->check(
        CLI::NonNegativeNumber);
    decay->add_option("--samples", samples_)->capture_default_str();
    decay->add_option("--seed", seed_)->capture_default_str();
    decay->add_option("--mode", mode_, "exact or upper")->capture_default_str()->check(
        CLI::IsMember({"exact", "upper"}));
    decay->add_option("--out", decay_out_, "CSV path")->capture_default_str();
}

int Runner::run(const std::vector<std::string> &args)
{
    CLI::App app{"Exact word-length and weighted convolution algebra verifier", "beurling"};
    build(app);
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out_, err_);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out_, err_);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out_, err_);
        return exit_usage;
    } catch (const Error &e) {
        err_ << "error: " << e.what() << "\n";
        return exit_usage;
    }
    if (!action_) {
        err_ << app.help();
        return exit_usage;
    }
    try {
        Json report;
        try {
            report = action_();
        } catch (const InvalidArgument &) {
            throw;
        } catch (const Error &e) {
            // budget, resource and precision limits are reported, never passed
            report = make_report(claim_, Json::object());
            const CheckStatus status = dynamic_cast<const Inconclusive *>(&e) != nullptr
                                           ? CheckStatus::inconclusive
                                           : CheckStatus::budget_exceeded;
            add_check(report, "computation", status, {{"error", e.what()}});
            err_ << "warning: " << e.what() << "\n";
        }
        const std::string text = report.dump(2) + "\n";
        if (report_path_.empty()) {
            out_ << text;
        } else {
            write_file(report_path_, text);
        }
        return exit_code(report_status(report));
    } catch (const Error &e) {
        err_ << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Runner runner(out, err);
    return runner.run(args);
}

} // namespace beurling::cli
