#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "growthacct/types.hpp"

namespace growthacct {

/// Industry TFP growth aggregated with Domar weights for one year. Weights
/// may legitimately sum to more than 1 because gross output double-counts
/// intermediates. The producer split partitions the aggregate exactly.
struct DomarWeightedTfp {
    int year = 0;
    std::map<std::string, double> weights;         // industry -> w_i (two-period avg)
    std::map<std::string, double> contributions;   // industry -> w_i * A_i
    double aggregate = 0.0;
    double ict_producer_contribution = 0.0;
    double non_ict_contribution = 0.0;
};

/// Two-period average gross-output/GDP ratio. Throws DataError on
/// non-positive GDP or negative gross output.
double domar_weight(double gvo_t, double gvo_prev, double gdp_t, double gdp_prev);

/// Aggregate TFP growth as the Domar-weighted sum of industry TFP growth.
/// When any single weight exceeds 1 a note is appended to `warnings` (if
/// given); the weight itself is never adjusted.
DomarWeightedTfp aggregate_tfp(const std::map<std::string, IndustryAccount>& industries,
                               const AnnualSeries& gdp, int year,
                               std::vector<std::string>* warnings = nullptr);

/// Fill the ICT-producer / non-ICT split. Every id must name an industry
/// present in the aggregation result.
DomarWeightedTfp split_by_producer(DomarWeightedTfp result,
                                   const std::set<std::string>& ict_producer_ids);

} // namespace growthacct
