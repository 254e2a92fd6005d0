#include "inflect/runner.hpp"
#include "inflect/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int selftest()
{
    int failed = 0;
    for (const auto& r : inflect::run_selftest()) {
        std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name;
        if (!r.error.empty())
            std::cout << "  (" << r.error << ")";
        std::cout << "\n";
        failed += r.passed ? 0 : 1;
    }
    std::cout << (failed ? std::to_string(failed) + " example(s) failed\n" : std::string("all examples passed\n"));
    return failed ? inflect::exit_mismatch : inflect::exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Inflection divisors of rational curves against divisor families"};
    std::string mode, file, json_out;
    std::optional<std::uint64_t> seed;
    bool run_self = false, timing = false;
    app.add_option("mode", mode, "verify|inflect|rhs|wronskian|degenerate-check|rh-hyperelliptic|functoriality-test")
        ->check(CLI::IsMember(inflect::mode_names()));
    app.add_option("instance", file, "instance file (JSON)");
    app.add_option("--json", json_out, "write the run report here");
    app.add_option("--seed", seed, "seed for randomized modes (overrides the instance)");
    app.add_flag("--selftest", run_self, "rerun the worked examples");
    app.add_flag("--timing", timing, "record wall time in the report");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : inflect::exit_invalid;
    }

    if (run_self && mode.empty())
        return selftest();
    if (mode.empty() || file.empty()) {
        std::cerr << "usage: inflect <mode> <instance-file> [--json out.json] [--seed N] [--selftest] [--timing]\n";
        return inflect::exit_invalid;
    }
    int self_rc = run_self ? selftest() : 0;

    inflect::RunResult res;
    try {
        res = inflect::run(inflect::read_instance(file), mode, {seed, timing});
    } catch (const inflect::InvalidInput& e) {
        res.report.mode = mode;
        res.report.exit_code = inflect::exit_invalid;
        res.report.status = "invalid-input";
        res.report.message = e.what();
        res.report.outcome = inflect::Json::object();
        res.table = "status      invalid-input: " + res.report.message + "\n";
    }
    std::cout << res.table;
    if (!json_out.empty()) {
        std::ofstream out(json_out, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << json_out << "\n";
            return inflect::exit_internal;
        }
        out << inflect::dump(res.report);
    }
    return res.report.exit_code != 0 ? res.report.exit_code : self_rc;
}
