#pragma once

#include <map>

#include "growthacct/types.hpp"

namespace growthacct {

/// `levels` decomposes output growth; `per_worker` decomposes labor
/// productivity growth (all growth rates taken on per-labor-unit series, and
/// the labor term is zero by definition).
enum class DecompositionMode { levels, per_worker };

/// Output growth split into share-weighted capital and labor contributions
/// plus the TFP residual. The residual is defined by subtraction, so the
/// parts always reconstruct output_growth.
struct Decomposition {
    int year = 0;
    DecompositionMode mode = DecompositionMode::levels;
    double output_growth = 0.0;
    double capital_contribution = 0.0;
    double labor_contribution = 0.0;
    double tfp_residual = 0.0;
};

/// Same decomposition with capital detailed by asset category.
struct DetailedDecomposition {
    int year = 0;
    DecompositionMode mode = DecompositionMode::levels;
    double output_growth = 0.0;
    std::map<AssetCode, double> ict_asset_contributions;
    std::map<AssetCode, double> non_ict_asset_contributions;
    double labor_contribution = 0.0;
    double tfp_residual = 0.0;
};

/// ICT contribution to growth: service flows from ICT assets plus
/// output-share weighted TFP gains of the ICT-producing industries.
struct IctContribution {
    int year = 0;
    double asset_term = 0.0;
    double producer_tfp_term = 0.0;
    double total = 0.0;
};

Decomposition decompose_basic(const EconomyDataset& dataset, int year,
                              DecompositionMode mode = DecompositionMode::levels);

DetailedDecomposition decompose_detailed(const EconomyDataset& dataset, int year,
                                         DecompositionMode mode = DecompositionMode::levels);

/// Levels-mode ICT contribution. The asset term equals the summed ICT asset
/// contributions of decompose_detailed at the same year, bit for bit. The
/// producer weights come from the u_c share table, falling back to the
/// industry Domar weight when no u_c entry exists.
IctContribution ict_contribution(const EconomyDataset& dataset, int year);

} // namespace growthacct
