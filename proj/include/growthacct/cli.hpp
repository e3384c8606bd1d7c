#pragma once

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "growthacct/commodity_flow.hpp"
#include "growthacct/domar.hpp"
#include "growthacct/growth_accounting.hpp"
#include "growthacct/types.hpp"

namespace growthacct::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;    // validation or data problems
inline constexpr int kExitUsageError = 2;   // bad arguments or I/O failures

enum class OutputFormat { csv, json };

struct YearRange {
    int start = 0;
    int end = 0;
};

struct RunConfig {
    std::filesystem::path input_path;
    std::vector<std::string> countries;        // empty = every country in the bundle
    std::optional<YearRange> year_range;       // selects the growth year t
    DecompositionMode mode = DecompositionMode::levels;
    std::filesystem::path output_path;         // empty = stdout
    OutputFormat format = OutputFormat::csv;
    bool percent = false;                      // x100 at the formatting layer only
};

struct CountryDecompositions {
    std::vector<Decomposition> basic;
    std::vector<DetailedDecomposition> detailed;
    std::vector<IctContribution> ict;
};

/// Everything cmd_decompose emits. Deterministic for identical inputs; the
/// JSON rendering is byte-identical run to run.
struct RunReport {
    std::string tool_version;
    DecompositionMode mode = DecompositionMode::levels;
    std::map<std::string, std::string> input_digests;   // bundle file -> hex digest
    std::map<std::string, CountryDecompositions> countries;
    std::size_t validation_warnings = 0;
};

struct InvestRow {
    std::string country;
    InvestmentEstimate estimate;
};

struct InvestResult {
    std::vector<InvestRow> rows;
    std::vector<std::string> warnings;   // one per skipped software row
};

struct DomarRow {
    std::string country;
    DomarWeightedTfp tfp;
};

struct DomarResult {
    std::vector<DomarRow> rows;
    std::vector<std::string> warnings;
};

// Report-building cores; throw LoadError/DataError on failure.
RunReport run_decompose(const RunConfig& config);
InvestResult run_invest(const RunConfig& config);
DomarResult run_domar(const RunConfig& config);

std::string render_decompose_json(const RunReport& report, bool percent);
std::string render_decompose_csv(const RunReport& report, bool percent);

// Subcommand entry points; never throw, return an exit code.
int cmd_validate(const RunConfig& config, std::ostream& out = std::cout,
                 std::ostream& err = std::cerr);
int cmd_decompose(const RunConfig& config, std::ostream& out = std::cout,
                  std::ostream& err = std::cerr);
int cmd_invest(const RunConfig& config, std::ostream& out = std::cout,
               std::ostream& err = std::cerr);
int cmd_domar(const RunConfig& config, std::ostream& out = std::cout,
              std::ostream& err = std::cerr);
int cmd_report(const RunConfig& config, std::ostream& out = std::cout,
               std::ostream& err = std::cerr);

/// Full-precision fixed formatting (17 significant digits) used by every
/// emitter so outputs are byte-reproducible.
std::string format_double(double value);

/// FNV-1a digest over the parsed, canonically sorted rows of a bundle file,
/// so permuting input rows never changes the digest.
std::string content_digest(const std::filesystem::path& file);

/// Write via a temp file and rename: on any failure the target keeps its
/// previous content (or stays absent).
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace growthacct::cli
