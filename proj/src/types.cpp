#include "growthacct/types.hpp"

#include <stdexcept>

#include "growthacct/errors.hpp"

namespace growthacct {

bool is_ict(AssetCode code) noexcept {
    switch (code) {
    case AssetCode::OfficeComputer:
    case AssetCode::Communication:
    case AssetCode::Software:
        return true;
    default:
        return false;
    }
}

bool commodity_flow_eligible(AssetCode code) noexcept {
    return code != AssetCode::Software;
}

std::string_view asset_label(AssetCode code) noexcept {
    switch (code) {
    case AssetCode::OfficeComputer: return "OC";
    case AssetCode::Communication: return "CM";
    case AssetCode::Software: return "SW";
    case AssetCode::OtherEquipment: return "OE";
    case AssetCode::Transport: return "TR";
    case AssetCode::NonResidentialStructures: return "NRS";
    }
    return "??";
}

std::optional<AssetCode> asset_from_label(std::string_view label) noexcept {
    for (AssetCode code : kAllAssets) {
        if (asset_label(code) == label) {
            return code;
        }
    }
    return std::nullopt;
}

double AnnualSeries::at(int year) const {
    auto it = values.find(year);
    if (it == values.end()) {
        throw DataError("series '" + name + "' has no value for year " + std::to_string(year));
    }
    return it->second;
}

int AnnualSeries::first_year() const {
    if (values.empty()) {
        throw DataError("series '" + name + "' is empty");
    }
    return values.begin()->first;
}

int AnnualSeries::last_year() const {
    if (values.empty()) {
        throw DataError("series '" + name + "' is empty");
    }
    return values.rbegin()->first;
}

std::optional<int> AnnualSeries::first_gap() const noexcept {
    int expected = 0;
    bool first = true;
    for (const auto& [year, value] : values) {
        (void)value;
        if (!first && year != expected) {
            return expected;
        }
        expected = year + 1;
        first = false;
    }
    return std::nullopt;
}

const YearShares& InputShares::at(int year) const {
    auto it = by_year.find(year);
    if (it == by_year.end()) {
        throw DataError("no input shares for year " + std::to_string(year));
    }
    return it->second;
}

void ValidationReport::error(std::string location, std::string rule, std::string observed) {
    errors.push_back({std::move(location), std::move(rule), std::move(observed)});
}

void ValidationReport::warning(std::string location, std::string rule, std::string observed) {
    warnings.push_back({std::move(location), std::move(rule), std::move(observed)});
}

std::string ValidationReport::summary() const {
    return std::to_string(errors.size()) + " errors, " + std::to_string(warnings.size()) +
           " warnings";
}

} // namespace growthacct
