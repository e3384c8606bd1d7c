#include "growthacct/commodity_flow.hpp"

#include <cmath>
#include <sstream>

#include "growthacct/csv.hpp"
#include "growthacct/errors.hpp"

namespace growthacct {

namespace {

std::string fmt(double value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

void require_finite_nonneg(double value, const std::string& what, const std::string& where) {
    if (!std::isfinite(value) || value < 0.0) {
        throw DataError(where + ": " + what + " = " + fmt(value) +
                        " (must be finite and non-negative)");
    }
}

} // namespace

InvestmentEstimate estimate_investment(const CommodityFlowInputs& flows,
                                       const IoAllocationRatios& ratios, int year) {
    if (!commodity_flow_eligible(flows.item)) {
        throw DataError("commodity flow not applicable to software");
    }
    if (flows.item != ratios.item) {
        throw DataError("allocation ratios for " + std::string(asset_label(ratios.item)) +
                        " used with flows for " + std::string(asset_label(flows.item)));
    }
    auto it = flows.by_year.find(year);
    if (it == flows.by_year.end()) {
        throw DataError("no flow data for " + std::string(asset_label(flows.item)) + " in " +
                        std::to_string(year));
    }
    const FlowYear& f = it->second;
    std::string where = std::string(asset_label(flows.item)) + "/" + std::to_string(year);
    require_finite_nonneg(f.domestic_output, "domestic output", where);
    require_finite_nonneg(f.domestic_exports, "domestic exports", where);
    require_finite_nonneg(f.imports, "imports", where);
    require_finite_nonneg(f.reexports, "re-exports", where);
    if (f.domestic_exports > f.domestic_output) {
        throw DataError(where + ": domestic exports " + fmt(f.domestic_exports) +
                        " exceed domestic output " + fmt(f.domestic_output));
    }
    if (f.reexports > f.imports) {
        throw DataError(where + ": re-exports " + fmt(f.reexports) + " exceed imports " +
                        fmt(f.imports));
    }
    auto check_ratio = [&](double ratio, const std::string& name) {
        if (!std::isfinite(ratio) || ratio < 0.0 || ratio > 1.0) {
            throw DataError(where + ": " + name + " = " + fmt(ratio) +
                            " (must lie in [0, 1])");
        }
    };
    check_ratio(ratios.domestic_ratio, "domestic allocation ratio");
    check_ratio(ratios.import_ratio, "import allocation ratio");

    InvestmentEstimate result;
    result.item = flows.item;
    result.year = year;
    result.domestic_component = (f.domestic_output - f.domestic_exports) * ratios.domestic_ratio;
    result.import_component = (f.imports - f.reexports) * ratios.import_ratio;
    result.total = result.domestic_component + result.import_component;
    return result;
}

std::map<AssetCode, double> gfcf_shares(const std::map<AssetCode, double>& gfcf_by_category,
                                        GfcfScope scope) {
    auto in_scope = [&](AssetCode code) {
        return scope == GfcfScope::total_non_residential ||
               code != AssetCode::NonResidentialStructures;
    };
    double denominator = 0.0;
    for (const auto& [code, value] : gfcf_by_category) {
        require_finite_nonneg(value, "gross fixed capital formation for " +
                                         std::string(asset_label(code)),
                              "gfcf");
        if (in_scope(code)) {
            denominator += value;
        }
    }
    if (denominator <= 0.0) {
        throw DataError("gfcf: no positive capital formation within the chosen scope");
    }
    std::map<AssetCode, double> shares;
    for (const auto& [code, value] : gfcf_by_category) {
        if (in_scope(code)) {
            shares[code] = value / denominator;
        }
    }
    return shares;
}

std::map<std::string, std::map<AssetCode, CommodityFlowInputs>>
load_flows(const std::filesystem::path& file) {
    CsvReader csv(file, {"country", "asset", "year", "Q", "E_d", "M", "E_r"});
    std::map<std::string, std::map<AssetCode, CommodityFlowInputs>> result;
    while (csv.next()) {
        const std::string& country = csv.field("country");
        if (country.empty()) {
            throw LoadError(csv.context() + ": malformed row: missing country");
        }
        auto code = asset_from_label(csv.field("asset"));
        if (!code) {
            throw LoadError(csv.context() + ": unknown asset code '" + csv.field("asset") + "'");
        }
        int year = parse_year(csv.field("year"), csv.context());
        FlowYear flow;
        flow.domestic_output = parse_double(csv.field("Q"), csv.context());
        flow.domestic_exports = parse_double(csv.field("E_d"), csv.context());
        flow.imports = parse_double(csv.field("M"), csv.context());
        flow.reexports = parse_double(csv.field("E_r"), csv.context());
        CommodityFlowInputs& inputs = result[country][*code];
        inputs.item = *code;
        if (!inputs.by_year.emplace(year, flow).second) {
            throw LoadError(csv.context() + ": duplicate cell for (" + country + ", " +
                            std::string(asset_label(*code)) + ", " + std::to_string(year) + ")");
        }
    }
    return result;
}

std::map<std::string, std::map<AssetCode, IoAllocationRatios>>
load_io_ratios(const std::filesystem::path& file) {
    CsvReader csv(file,
                  {"country", "asset", "domestic_ratio", "import_ratio", "io_reference_year"});
    std::map<std::string, std::map<AssetCode, IoAllocationRatios>> result;
    while (csv.next()) {
        const std::string& country = csv.field("country");
        if (country.empty()) {
            throw LoadError(csv.context() + ": malformed row: missing country");
        }
        auto code = asset_from_label(csv.field("asset"));
        if (!code) {
            throw LoadError(csv.context() + ": unknown asset code '" + csv.field("asset") + "'");
        }
        IoAllocationRatios ratios;
        ratios.item = *code;
        ratios.domestic_ratio = parse_double(csv.field("domestic_ratio"), csv.context());
        ratios.import_ratio = parse_double(csv.field("import_ratio"), csv.context());
        ratios.io_reference_year = parse_year(csv.field("io_reference_year"), csv.context());
        if (!result[country].emplace(*code, ratios).second) {
            throw LoadError(csv.context() + ": duplicate cell for (" + country + ", " +
                            std::string(asset_label(*code)) + ")");
        }
    }
    return result;
}

std::map<std::string, std::map<int, std::map<AssetCode, double>>>
load_gfcf(const std::filesystem::path& file) {
    CsvReader csv(file, {"country", "asset", "year", "value"});
    std::map<std::string, std::map<int, std::map<AssetCode, double>>> result;
    while (csv.next()) {
        const std::string& country = csv.field("country");
        if (country.empty()) {
            throw LoadError(csv.context() + ": malformed row: missing country");
        }
        auto code = asset_from_label(csv.field("asset"));
        if (!code) {
            throw LoadError(csv.context() + ": unknown asset code '" + csv.field("asset") + "'");
        }
        int year = parse_year(csv.field("year"), csv.context());
        double value = parse_double(csv.field("value"), csv.context());
        if (!result[country][year].emplace(*code, value).second) {
            throw LoadError(csv.context() + ": duplicate cell for (" + country + ", " +
                            std::string(asset_label(*code)) + ", " + std::to_string(year) + ")");
        }
    }
    return result;
}

} // namespace growthacct
