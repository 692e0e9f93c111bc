// acphase: exact algebra checks and Aharonov-Casher phase verification.
//
//   acphase verify-algebra [--samples N] [--inject-beta-perturbation]
//   acphase verify-phase <scenario.cfg>
//   acphase report --format json|text --out <path> [--in <report.json>]
//
// Global flags --tol, --seed and --grid-h override the scenario. Each verify
// run writes last_report.json to $ACPHASE_REPORT_DIR (default: working dir).
// Exit status: 0 all pass, 1 a check failed, 2 configuration or I/O error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "acphase/cli/commands.hpp"

namespace {

using namespace acphase::cli;

int finish(const RunReport& report) {
    std::cout << to_text(report);
    write_report(report, last_report_path(), "json");
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact algebra and Aharonov-Casher phase verification"};
    app.require_subcommand(1);

    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::optional<double> grid_h;
    app.add_option("--tol", tol, "loop-phase tolerance (overrides the scenario)");
    app.add_option("--seed", seed, "seed for random samples");
    app.add_option("--grid-h", grid_h, "coarse grid spacing (overrides the scenario)");

    auto* algebra = app.add_subcommand("verify-algebra", "run every exact identity suite");
    int samples = 100;
    bool perturb = false;
    algebra->add_option("--samples", samples, "interaction-transport samples")->check(CLI::NonNegativeNumber);
    algebra->add_flag("--inject-beta-perturbation", perturb, "test hook: zero one entry of beta^1");

    auto* phase = app.add_subcommand("verify-phase", "verify one scenario");
    std::string scenario_path;
    phase->add_option("scenario", scenario_path, "scenario file")->required();

    auto* report = app.add_subcommand("report", "serialize the last report");
    std::string format = "json";
    std::string out_path;
    std::string in_path;
    report->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    report->add_option("--out", out_path, "output file")->required();
    report->add_option("--in", in_path, "report to convert (default: last_report.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (algebra->parsed()) {
            AlgebraOptions opts;
            if (seed) opts.seed = *seed;
            opts.transport_samples = samples;
            opts.perturb_beta = perturb;
            return finish(cmd_verify_algebra(opts));
        }
        if (phase->parsed()) {
            Scenario sc = load_scenario(scenario_path);
            apply_overrides(sc, {tol, seed, grid_h});
            return finish(cmd_verify_phase(sc));
        }
        const RunReport r = read_report(in_path.empty() ? last_report_path() : in_path);
        write_report(r, out_path, format);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
