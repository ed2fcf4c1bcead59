// qdeph — command-line runner for dephasing trajectories, figure presets and self-checks
//
//   qdeph trace  --config <path> --out <path>
//   qdeph figure <preset> --out <dir> [--dump-config]
//   qdeph verify <algebra|kernels|oracle|all> [--csv <path>]
//
// Exit codes: 0 success, 1 validation error, 2 computation error, 3 verification failure.

#include "qdeph/scenario.hpp"
#include "qdeph/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

enum ExitCode : int { kOk = 0, kValidation = 1, kComputation = 2, kVerification = 3 };

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact qubit dephasing with measurement-prepared initial states"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    auto* trace = app.add_subcommand("trace", "Compute one trajectory from a JSON scenario and write CSV");
    trace->add_option("--config", config_path, "Scenario JSON")->required();
    trace->add_option("--out", out_path, "Output CSV")->required();

    std::string preset;
    std::string out_dir;
    bool dump_config = false;
    auto* figure = app.add_subcommand("figure", "Write the CSV data of a figure preset, one file per curve");
    figure->add_option("preset", preset, "fig1 ... fig5")->required();
    figure->add_option("--out", out_dir, "Output directory")->required();
    figure->add_flag("--dump-config", dump_config, "Write the preset scenario configs instead of computing");

    std::string suite;
    std::string report_csv;
    auto* verify = app.add_subcommand("verify", "Run the built-in verification suites");
    verify->add_option("suite", suite, "algebra, kernels, oracle or all")->required();
    verify->add_option("--csv", report_csv, "Also write the per-case report as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kValidation;
    }

    try {
        if (*trace) {
            qdeph::run_trace(config_path, out_path);
            return kOk;
        }
        if (*figure) {
            const auto files = dump_config ? qdeph::dump_figure_configs(preset, out_dir)
                                           : qdeph::run_figure(preset, out_dir);
            for (const auto& f : files) std::cout << f.string() << '\n';
            return kOk;
        }
        const qdeph::VerifyReport report = qdeph::run_verify(suite);
        qdeph::print_report(std::cout, report);
        if (!report_csv.empty()) {
            std::ofstream os(report_csv);
            if (!os) throw qdeph::ComputationError("cannot write " + report_csv);
            qdeph::write_report_csv(os, report);
        }
        return report.passed() ? kOk : kVerification;
    } catch (const qdeph::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kComputation;
    }
}
