#include <doctest.h>

#include "beurling/cli.hpp"
#include "beurling/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace beurling;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result invoke(const std::vector<std::string> &args)
{
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path scratch()
{
    const fs::path dir = fs::temp_directory_path() / "beurling_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path &path)
{
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const fs::path &path, const std::string &text) { std::ofstream(path) << text; }

} // namespace

TEST_CASE("wordlen")
{
    const auto zero = invoke({"wordlen", "--n", "0", "--schedule", "squares2"});
    CHECK(zero.code == 0);
    const Json report = zero.json();
    CHECK(report["schema_version"] == report_schema_version);
    CHECK(report["claim"] == "wordlen");
    CHECK(report["checks"][0]["length"] == 0);

    const auto n = invoke({"wordlen", "--n", "-531"});
    CHECK(n.code == 0);
    CHECK(n.json()["checks"][0]["length"] == 4);

    const auto capped = invoke({"wordlen", "--n", "531", "--cap", "2"});
    CHECK(capped.code == 3);
    CHECK(capped.json()["status"] == "budget-exceeded");

    const fs::path gens = scratch() / "gens.json";
    spit(gens, "[3, 5]");
    const auto custom = invoke({"wordlen", "--n", "7", "--schedule", "file:" + gens.string()});
    CHECK(custom.code == 0);
    CHECK(custom.json()["checks"][0]["length"] == 3);
    CHECK(custom.json()["parameters"]["schedule"] == "explicit:3,5");
}

TEST_CASE("usage errors")
{
    CHECK(invoke({}).code == cli::exit_usage);
    CHECK(invoke({"wordlen"}).code == cli::exit_usage);
    CHECK(invoke({"wordlen", "--n", "3", "--bogus"}).code == cli::exit_usage);
    CHECK(invoke({"wordlen", "--n", "x3"}).code == cli::exit_usage);
    CHECK(invoke({"wordlen", "--n", "3", "--schedule", "cubes"}).code == cli::exit_usage);
    CHECK(invoke({"verify"}).code == cli::exit_usage);
    CHECK(invoke({"sec3", "build", "--weight", "exp-abs"}).code == cli::exit_usage);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("verify lemma42")
{
    const auto r = invoke({"verify", "lemma42", "--kmax", "3"});
    CHECK(r.code == 0);
    const Json report = r.json();
    REQUIRE(report["checks"].size() == 3);
    for (int k = 1; k <= 3; ++k) {
        const auto &check = report["checks"][static_cast<std::size_t>(k - 1)];
        CHECK(check["status"] == "verified");
        CHECK(check["eta"] == k + 1);
        CHECK(check["oracle"] == k + 1);
    }
    CHECK(report["checks"][2]["witness"].size() == 4);
}

TEST_CASE("verify lemma43")
{
    const auto r = invoke({"verify", "lemma43", "--j", "1", "--kmin", "1", "--kmax", "6", "--seed", "9"});
    CHECK(r.code == 0);
    const Json report = r.json();
    CHECK(report["parameters"]["seed"] == 9);
    CHECK(report["parameters"]["tuple_count"] == 200);
    CHECK(report["checks"].size() == 201);
    CHECK(report["checks"][0]["length"] == 5);
    CHECK(invoke({"verify", "lemma43", "--j", "2", "--kmin", "1"}).code == cli::exit_usage);
}

TEST_CASE("verify lemma44 and cor45")
{
    const fs::path path = scratch() / "instances.json";
    spit(path, "[[4,4,4,4,4,4,4,4],[5,4,4,4,4,4,4,4],[6,5,4,4,4,4,4,4]]");
    const auto r = invoke({"verify", "lemma44", "--j", "1", "--instances", path.string()});
    CHECK(r.code == 0);
    const Json report = r.json();
    CHECK(report["parameters"]["J"] == 4);
    CHECK(report["checks"][2]["bound"] == 0);
    CHECK(report["checks"][3]["bound"] == 1);
    CHECK(report["checks"][4]["bound"] == 3);

    const auto capped = invoke({"verify", "lemma44", "--instances", path.string(), "--cap", "3"});
    CHECK(capped.code == 3);

    const auto cor = invoke({"verify", "cor45", "--instances", path.string()});
    CHECK(cor.code == 0);
    CHECK(cor.json()["checks"][0]["bound"] == -40);

    spit(path, "[[4,4]]");
    CHECK(invoke({"verify", "lemma44", "--instances", path.string()}).code == cli::exit_usage);
    spit(path, "{\"not\": 1}");
    CHECK(invoke({"verify", "lemma44", "--instances", path.string()}).code == cli::exit_usage);
}

TEST_CASE("sec3 build and check")
{
    const fs::path psi = scratch() / "psi.json";
    const auto built = invoke({"sec3", "build", "--weight", "trivial", "--levels", "3", "--out", psi.string()});
    CHECK(built.code == 0);
    const Json cert = Json::parse(slurp(psi));
    for (const char *field : {"nk", "Ck", "psi", "sj", "tj", "pairings"}) {
        CHECK(cert.contains(field));
    }
    // C_k = 2^k and N_{t_2} = 2 + 240, so s_3 is the least s with 2^s > 968
    CHECK(cert["sj"] == Json({0, 4, 10}));

    const auto checked = invoke({"sec3", "check", "--in", psi.string()});
    CHECK(checked.code == 0);
    CHECK(checked.json()["claim"] == "psi");

    Json tampered = cert;
    tampered["pairings"]["t"][0]["num"] = "1/2";
    spit(psi, tampered.dump());
    CHECK(invoke({"sec3", "check", "--in", psi.string()}).code == 2);

    tampered = cert;
    tampered["psi"][0]["value"] = "0";
    spit(psi, tampered.dump());
    CHECK(invoke({"sec3", "check", "--in", psi.string()}).code == 2);

    spit(psi, "{}");
    CHECK(invoke({"sec3", "check", "--in", psi.string()}).code == cli::exit_usage);
}

TEST_CASE("sec4 ladder")
{
    const auto r = invoke({"sec4", "ladder", "--j", "1", "--base", "4", "--growth", "4", "--power", "2"});
    CHECK(r.code == 0);
    CHECK(r.json()["checks"][0]["value"] == "-1/16");
    const auto two = invoke({"sec4", "ladder"});
    CHECK(two.code == 0);
    CHECK(two.json()["checks"][0]["value"] == "-4950051/134217728");
    CHECK(two.json()["checks"][1]["status"] == "verified");
}

TEST_CASE("profile decay")
{
    const fs::path csv = scratch() / "decay.csv";
    const auto r = invoke({"profile", "decay", "--jmax", "2", "--out", csv.string()});
    CHECK(r.code == 0);
    const std::string table = slurp(csv);
    CHECK(table.rfind("r,j,bound_numerator_exponent,sample_count\n", 0) == 0);
    CHECK(table == "r,j,bound_numerator_exponent,sample_count\n8,1,-11,200\n32,2,-89,200\n");
}

TEST_CASE("reports are deterministic")
{
    const auto report_path = scratch() / "report.json";
    const std::vector<std::vector<std::string>> commands{
        {"verify", "lemma43", "--j", "2", "--kmin", "2", "--kmax", "6"},
        {"sec3", "build", "--weight", "exp-squares2", "--levels", "3", "--out", (scratch() / "p.json").string()},
        {"sec4", "ladder", "--j", "2", "--power", "2"},
        {"profile", "decay", "--jmax", "2", "--out", (scratch() / "d.csv").string()},
    };
    for (const auto &args : commands) {
        CHECK(invoke(args).out == invoke(args).out);
    }
    auto with_file = commands[2];
    with_file.insert(with_file.end(), {"--report", report_path.string()});
    const auto r = invoke(with_file);
    CHECK(r.out.empty());
    CHECK(slurp(report_path) == invoke(commands[2]).out);
}
