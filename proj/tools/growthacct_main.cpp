// Command line front end for the growth accounting library.
//
// Subcommands:
//   validate   check a data bundle against every dataset invariant
//   decompose  growth decompositions (basic, by asset, ICT contribution)
//   invest     commodity-flow investment estimates
//   domar      Domar-weighted aggregate TFP growth
//   report     human-readable summary of everything above
//
// Exit codes: 0 success, 1 data or validation problem, 2 usage or I/O problem.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "growthacct/cli.hpp"
#include "growthacct/version.hpp"

namespace {

using growthacct::DecompositionMode;
using growthacct::cli::OutputFormat;
using growthacct::cli::RunConfig;
using growthacct::cli::YearRange;

struct RawOptions {
    std::string input;
    std::string output;
    std::string format = "csv";
    std::string mode = "levels";
    std::string years;
    std::vector<std::string> countries;
    bool percent = false;
};

void add_common_options(CLI::App* cmd, RawOptions& raw, bool with_mode, bool with_percent) {
    cmd->add_option("-i,--input", raw.input, "Data bundle directory")->required();
    cmd->add_option("-o,--output", raw.output,
                    "Output file (written atomically; default: stdout)");
    cmd->add_option("--countries", raw.countries,
                    "Restrict to these countries (repeatable or comma separated)")
        ->delimiter(',');
    cmd->add_option("--years", raw.years, "Growth-year range A:B (inclusive)");
    if (with_mode) {
        cmd->add_option("--mode", raw.mode, "levels or per-worker")
            ->check(CLI::IsMember({"levels", "per-worker"}));
    }
    if (with_percent) {
        cmd->add_flag("--percent", raw.percent,
                      "Scale growth rates and contributions by 100 in the output");
    }
}

void add_format_option(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("--format", raw.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

/// Parse "A:B" into an inclusive range; throws CLI::ValidationError on
/// malformed input so CLI11 reports it as a usage problem.
YearRange parse_year_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size()) {
        throw CLI::ValidationError("--years", "expected A:B, got '" + text + "'");
    }
    YearRange range;
    try {
        std::size_t used = 0;
        range.start = std::stoi(text.substr(0, colon), &used);
        if (used != colon) {
            throw std::invalid_argument(text);
        }
        std::string end = text.substr(colon + 1);
        range.end = std::stoi(end, &used);
        if (used != end.size()) {
            throw std::invalid_argument(text);
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--years", "expected A:B, got '" + text + "'");
    }
    if (range.start > range.end) {
        throw CLI::ValidationError("--years", "start exceeds end in '" + text + "'");
    }
    return range;
}

RunConfig to_config(const RawOptions& raw) {
    RunConfig config;
    config.input_path = raw.input;
    config.output_path = raw.output;
    config.countries = raw.countries;
    config.format = (raw.format == "json") ? OutputFormat::json : OutputFormat::csv;
    config.mode = (raw.mode == "per-worker") ? DecompositionMode::per_worker
                                             : DecompositionMode::levels;
    config.percent = raw.percent;
    if (!raw.years.empty()) {
        config.year_range = parse_year_range(raw.years);
    }
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Growth accounting toolkit: decompositions, commodity-flow investment "
                 "estimates, and Domar-weighted TFP aggregation over annual data bundles"};
    app.set_version_flag("--version", growthacct::kToolVersion);
    app.require_subcommand(1);

    RawOptions validate_raw;
    CLI::App* validate = app.add_subcommand("validate", "Check a data bundle");
    add_common_options(validate, validate_raw, false, false);

    RawOptions decompose_raw;
    CLI::App* decompose = app.add_subcommand("decompose", "Growth decompositions");
    add_common_options(decompose, decompose_raw, true, true);
    add_format_option(decompose, decompose_raw);

    RawOptions invest_raw;
    CLI::App* invest = app.add_subcommand("invest", "Commodity-flow investment estimates");
    add_common_options(invest, invest_raw, false, false);
    add_format_option(invest, invest_raw);

    RawOptions domar_raw;
    CLI::App* domar = app.add_subcommand("domar", "Domar-weighted aggregate TFP");
    add_common_options(domar, domar_raw, false, true);
    add_format_option(domar, domar_raw);

    RawOptions report_raw;
    CLI::App* report = app.add_subcommand("report", "Human-readable summary");
    add_common_options(report, report_raw, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version land here with Success exit codes.
        int code = app.exit(e);
        return code == 0 ? growthacct::cli::kExitOk : growthacct::cli::kExitUsageError;
    }

    try {
        if (*validate) {
            return growthacct::cli::cmd_validate(to_config(validate_raw));
        }
        if (*decompose) {
            return growthacct::cli::cmd_decompose(to_config(decompose_raw));
        }
        if (*invest) {
            return growthacct::cli::cmd_invest(to_config(invest_raw));
        }
        if (*domar) {
            return growthacct::cli::cmd_domar(to_config(domar_raw));
        }
        if (*report) {
            return growthacct::cli::cmd_report(to_config(report_raw));
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return growthacct::cli::kExitUsageError;
    }
    return growthacct::cli::kExitUsageError;
}
