#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "growthacct/types.hpp"

namespace growthacct {

/// Trade and production flows for one commodity, per year, all in the same
/// currency units. Exports from domestic production may not exceed domestic
/// output, and re-exports may not exceed imports.
struct FlowYear {
    double domestic_output = 0.0;     // Q
    double domestic_exports = 0.0;    // E_d, exports from domestic production
    double imports = 0.0;             // M
    double reexports = 0.0;           // E_r
};

struct CommodityFlowInputs {
    AssetCode item = AssetCode::OfficeComputer;
    std::map<int, FlowYear> by_year;
};

/// Investment allocation ratios taken from an input-output table of a named
/// reference year; held constant between benchmark updates.
struct IoAllocationRatios {
    AssetCode item = AssetCode::OfficeComputer;
    double domestic_ratio = 0.0;   // I(Q) / (Q - E_d) from the I/O table
    double import_ratio = 0.0;     // I(M) / (M - E_r) from the I/O table
    int io_reference_year = 0;
};

struct InvestmentEstimate {
    AssetCode item = AssetCode::OfficeComputer;
    int year = 0;
    double domestic_component = 0.0;
    double import_component = 0.0;
    double total = 0.0;
};

/// Commodity-flow investment estimate for one year: domestic production net
/// of exports and imports net of re-exports, each allocated to investment
/// with its I/O ratio. Refuses Software; the method does not apply to it.
InvestmentEstimate estimate_investment(const CommodityFlowInputs& flows,
                                       const IoAllocationRatios& ratios, int year);

enum class GfcfScope {
    total_non_residential,   // all six categories in the denominator
    total_equipment,         // excludes non-residential structures
};

/// Category shares of gross fixed capital formation over the chosen scope.
/// Only in-scope categories appear in the result; their shares sum to 1 when
/// the input covers the whole scope.
std::map<AssetCode, double> gfcf_shares(const std::map<AssetCode, double>& gfcf_by_category,
                                        GfcfScope scope);

// Bundle file loaders, keyed country -> asset.
std::map<std::string, std::map<AssetCode, CommodityFlowInputs>>
load_flows(const std::filesystem::path& file);

std::map<std::string, std::map<AssetCode, IoAllocationRatios>>
load_io_ratios(const std::filesystem::path& file);

/// gfcf.csv: country, asset, year, value.
std::map<std::string, std::map<int, std::map<AssetCode, double>>>
load_gfcf(const std::filesystem::path& file);

} // namespace growthacct
