#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "beurling/cli.hpp"
#include "beurling/errors.hpp"
#include "beurling/report.hpp"

#include <sstream>

namespace py = pybind11;
using namespace beurling;

namespace {

GeneratorSchedule schedule_named(const std::string &name)
{
    if (name == "squares2") return GeneratorSchedule::squares_of_two();
    if (name == "unit") return GeneratorSchedule::unit_only();
    throw py::value_error("unknown schedule: " + name);
}

std::string dump(const Json &json) { return json.dump(); }

py::tuple run_cli(const std::vector<std::string> &args)
{
    std::ostringstream out;
    std::ostringstream err;
    int code = 0;
    {
        py::gil_scoped_release release;
        code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact word lengths, witness checks and ladder sums";

    auto &error = py::register_exception<Error>(m, "BeurlingError");
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
    py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());

    m.attr("report_schema_version") = report_schema_version;
    m.attr("psi_schema_version") = psi_schema_version;

    m.def("nk5", [](std::int64_t k) { return nk5(k).get_str(); }, py::arg("k"));

    m.def(
        "word_length_report",
        [](const std::string &n, const std::string &schedule, std::int64_t cap) {
            return dump(word_length_report(BigInt(n), schedule_named(schedule), cap));
        },
        py::arg("n"), py::arg("schedule") = "squares2", py::arg("cap") = 64);

    m.def(
        "lemma42_report",
        [](std::int64_t kmax, std::int64_t oracle_kmax) {
            return dump(lemma42_report(verify_lemma42(kmax, oracle_kmax)));
        },
        py::arg("kmax") = 5, py::arg("oracle_kmax") = 3);

    m.def(
        "ladder_report",
        [](std::int64_t j, std::int64_t base, std::int64_t growth, std::int64_t power) {
            return dump(ladder_report(j, base, growth, power));
        },
        py::arg("j") = 2, py::arg("base") = 4, py::arg("growth") = 4, py::arg("power") = 3);

    m.def("ladder_power", [](std::int64_t j, std::int64_t base, std::int64_t growth, std::int64_t power) {
        return ladder_powers(j, base, growth, power).get_str();
    }, py::arg("j"), py::arg("base"), py::arg("growth"), py::arg("power"));

    m.def("run", &run_cli, py::arg("args"),
          "Run a command line; returns (exit_code, stdout, stderr).");
}
