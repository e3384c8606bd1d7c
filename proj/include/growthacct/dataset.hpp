#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "growthacct/types.hpp"

namespace growthacct {

/// Log growth rate ln(v_t) - ln(v_{t-1}).
///
/// Throws DataError if either year is absent or either value is not
/// strictly positive.
double growth_rate(const AnnualSeries& series, int year);

/// Two-period arithmetic average of a share, the bar convention applied to
/// every weighted share in the decompositions. Throws DataError on negative
/// input.
double two_period_share(double share_t, double share_prev);

/// Parse a classification config file: `industry = ict_producer:true|false`
/// lines plus an optional `labor_unit = <text>` entry. '#' starts a comment.
ClassificationConfig load_classification(const std::filesystem::path& file);

/// Load every country found in a bundle directory (series.csv, shares.csv,
/// optional tfp.csv). Structural problems (missing files, malformed rows,
/// unknown columns or asset codes, duplicate cells, gaps) throw LoadError.
/// Share sums that miss their target by at most 1e-6 are renormalized
/// proportionally; larger misses are left for validate() to flag.
std::map<std::string, EconomyDataset> load_bundle(const std::filesystem::path& dir,
                                                  const ClassificationConfig& config);

/// Single-country convenience wrapper; throws LoadError if the bundle holds
/// anything other than exactly one country.
EconomyDataset load_economy(const std::filesystem::path& dir,
                            const ClassificationConfig& config);

/// Check every dataset invariant: contiguity, positivity, share closure,
/// cross-references. Violations are reported, not thrown; downstream
/// operations accept the dataset iff the report has no errors.
ValidationReport validate(const EconomyDataset& dataset);

} // namespace growthacct
