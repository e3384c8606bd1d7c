#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace growthacct {

/// The six fixed-asset categories. The first three form ICT capital.
enum class AssetCode {
    OfficeComputer,
    Communication,
    Software,
    OtherEquipment,
    Transport,
    NonResidentialStructures,
};

inline constexpr std::array<AssetCode, 6> kAllAssets = {
    AssetCode::OfficeComputer,          AssetCode::Communication,
    AssetCode::Software,                AssetCode::OtherEquipment,
    AssetCode::Transport,               AssetCode::NonResidentialStructures,
};

bool is_ict(AssetCode code) noexcept;

/// Software investment must come from a direct series; the commodity-flow
/// estimator refuses it.
bool commodity_flow_eligible(AssetCode code) noexcept;

/// Short code used in the CSV schemas: OC, CM, SW, OE, TR, NRS.
std::string_view asset_label(AssetCode code) noexcept;

std::optional<AssetCode> asset_from_label(std::string_view label) noexcept;

/// One yearly time series. Years must form a contiguous range; values must be
/// strictly positive wherever the series feeds a log growth rate.
struct AnnualSeries {
    std::string name;
    std::map<int, double> values;

    bool empty() const noexcept { return values.empty(); }
    bool has(int year) const noexcept { return values.count(year) != 0; }

    /// Value at `year`; throws DataError naming the series if absent.
    double at(int year) const;

    int first_year() const;
    int last_year() const;

    /// Year of the first hole in the range, if any.
    std::optional<int> first_gap() const noexcept;
};

/// Input shares of gross value added for one year. v_k + v_l must sum to 1
/// and the per-asset shares must sum to v_k (tolerance 1e-6; small misses are
/// renormalized at load time).
struct YearShares {
    double v_k = 0.0;
    double v_l = 0.0;
    std::map<AssetCode, double> v_c;      // ICT assets
    std::map<AssetCode, double> v_n;      // non-ICT assets
    std::map<std::string, double> u_c;    // output-share weights of ICT producers
};

struct InputShares {
    std::map<int, YearShares> by_year;

    bool has(int year) const noexcept { return by_year.count(year) != 0; }
    const YearShares& at(int year) const;
};

struct IndustryAccount {
    std::string id;
    AnnualSeries gross_output;
    std::map<int, double> tfp_growth;   // log-growth per year
};

/// All time series for one country. Immutable after load; every operation on
/// it is a pure function, so concurrent evaluation needs no coordination.
struct EconomyDataset {
    std::string country;
    std::string labor_unit;             // free-text metadata, may be empty
    AnnualSeries output;                // gross value added, constant prices
    AnnualSeries labor;
    AnnualSeries capital_total;         // aggregate capital service flow
    std::map<AssetCode, AnnualSeries> capital_by_asset;
    InputShares shares;
    std::map<std::string, IndustryAccount> industries;
    std::set<std::string> ict_producer_ids;
};

struct ValidationIssue {
    std::string location;   // e.g. "series/labor" or "shares/1997"
    std::string rule;
    std::string observed;
};

struct ValidationReport {
    std::vector<ValidationIssue> errors;
    std::vector<ValidationIssue> warnings;

    bool ok() const noexcept { return errors.empty(); }

    void error(std::string location, std::string rule, std::string observed);
    void warning(std::string location, std::string rule, std::string observed);

    /// "N errors, M warnings"
    std::string summary() const;
};

/// Parsed classification config: industry id -> ICT-producer flag, plus the
/// free-text labor unit if the file declares one.
struct ClassificationConfig {
    std::map<std::string, bool> ict_producer;
    std::string labor_unit;
};

} // namespace growthacct
