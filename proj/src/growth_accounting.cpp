#include "growthacct/growth_accounting.hpp"

#include <set>

#include "growthacct/dataset.hpp"
#include "growthacct/domar.hpp"
#include "growthacct/errors.hpp"

namespace growthacct {

namespace {

double share_or_zero(const std::map<AssetCode, double>& shares, AssetCode code) {
    auto it = shares.find(code);
    return it == shares.end() ? 0.0 : it->second;
}

} // namespace

Decomposition decompose_basic(const EconomyDataset& dataset, int year, DecompositionMode mode) {
    double dy = growth_rate(dataset.output, year);
    double dk = growth_rate(dataset.capital_total, year);
    double dl = growth_rate(dataset.labor, year);
    const YearShares& cur = dataset.shares.at(year);
    const YearShares& prev = dataset.shares.at(year - 1);
    double vk = two_period_share(cur.v_k, prev.v_k);
    double vl = two_period_share(cur.v_l, prev.v_l);

    Decomposition result;
    result.year = year;
    result.mode = mode;
    if (mode == DecompositionMode::levels) {
        result.output_growth = dy;
        result.capital_contribution = vk * dk;
        result.labor_contribution = vl * dl;
    } else {
        result.output_growth = dy - dl;
        result.capital_contribution = vk * (dk - dl);
        result.labor_contribution = 0.0;
    }
    result.tfp_residual =
        result.output_growth - result.capital_contribution - result.labor_contribution;
    return result;
}

DetailedDecomposition decompose_detailed(const EconomyDataset& dataset, int year,
                                         DecompositionMode mode) {
    double dy = growth_rate(dataset.output, year);
    double dl = growth_rate(dataset.labor, year);
    const YearShares& cur = dataset.shares.at(year);
    const YearShares& prev = dataset.shares.at(year - 1);
    double vl = two_period_share(cur.v_l, prev.v_l);

    DetailedDecomposition result;
    result.year = year;
    result.mode = mode;
    result.output_growth = (mode == DecompositionMode::levels) ? dy : dy - dl;
    result.labor_contribution = (mode == DecompositionMode::levels) ? vl * dl : 0.0;

    std::set<AssetCode> codes;
    for (const auto& [code, value] : cur.v_c) {
        (void)value;
        codes.insert(code);
    }
    for (const auto& [code, value] : cur.v_n) {
        (void)value;
        codes.insert(code);
    }
    for (const auto& [code, value] : prev.v_c) {
        (void)value;
        codes.insert(code);
    }
    for (const auto& [code, value] : prev.v_n) {
        (void)value;
        codes.insert(code);
    }

    for (AssetCode code : codes) {
        const auto& cur_map = is_ict(code) ? cur.v_c : cur.v_n;
        const auto& prev_map = is_ict(code) ? prev.v_c : prev.v_n;
        double share = two_period_share(share_or_zero(cur_map, code),
                                        share_or_zero(prev_map, code));
        double contribution = 0.0;
        if (share != 0.0) {
            auto it = dataset.capital_by_asset.find(code);
            if (it == dataset.capital_by_asset.end()) {
                throw DataError("no capital series for asset " +
                                std::string(asset_label(code)));
            }
            double dk = growth_rate(it->second, year);
            contribution = (mode == DecompositionMode::levels) ? share * dk
                                                               : share * (dk - dl);
        }
        (is_ict(code) ? result.ict_asset_contributions
                      : result.non_ict_asset_contributions)[code] = contribution;
    }

    double asset_total = 0.0;
    for (const auto& [code, contribution] : result.ict_asset_contributions) {
        (void)code;
        asset_total += contribution;
    }
    for (const auto& [code, contribution] : result.non_ict_asset_contributions) {
        (void)code;
        asset_total += contribution;
    }
    result.tfp_residual = result.output_growth - asset_total - result.labor_contribution;
    return result;
}

IctContribution ict_contribution(const EconomyDataset& dataset, int year) {
    DetailedDecomposition detail = decompose_detailed(dataset, year, DecompositionMode::levels);

    IctContribution result;
    result.year = year;
    result.asset_term = 0.0;
    for (const auto& [code, contribution] : detail.ict_asset_contributions) {
        (void)code;
        result.asset_term += contribution;
    }

    const YearShares& cur = dataset.shares.at(year);
    const YearShares& prev = dataset.shares.at(year - 1);
    result.producer_tfp_term = 0.0;
    for (const auto& id : dataset.ict_producer_ids) {
        auto it = dataset.industries.find(id);
        if (it == dataset.industries.end()) {
            throw DataError("ICT producer '" + id + "' is not in the industry accounts");
        }
        const IndustryAccount& account = it->second;
        auto tfp = account.tfp_growth.find(year);
        if (tfp == account.tfp_growth.end()) {
            throw DataError("industry '" + id + "' has no TFP growth for " +
                            std::to_string(year));
        }
        double weight;
        auto uc_cur = cur.u_c.find(id);
        auto uc_prev = prev.u_c.find(id);
        if (uc_cur != cur.u_c.end() && uc_prev != prev.u_c.end()) {
            weight = two_period_share(uc_cur->second, uc_prev->second);
        } else if (!account.gross_output.empty()) {
            weight = domar_weight(account.gross_output.at(year),
                                  account.gross_output.at(year - 1), dataset.output.at(year),
                                  dataset.output.at(year - 1));
        } else {
            throw DataError("industry '" + id +
                            "' has neither output-share data nor a gross_output series");
        }
        result.producer_tfp_term += weight * tfp->second;
    }
    result.total = result.asset_term + result.producer_tfp_term;
    return result;
}

} // namespace growthacct
