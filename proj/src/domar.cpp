#include "growthacct/domar.hpp"

#include <cmath>
#include <sstream>

#include "growthacct/errors.hpp"

namespace growthacct {

namespace {

std::string fmt(double value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

} // namespace

double domar_weight(double gvo_t, double gvo_prev, double gdp_t, double gdp_prev) {
    if (gdp_t <= 0.0 || gdp_prev <= 0.0) {
        throw DataError("Domar weight: non-positive GDP " + fmt(gdp_t <= 0.0 ? gdp_t : gdp_prev));
    }
    if (gvo_t < 0.0 || gvo_prev < 0.0) {
        throw DataError("Domar weight: negative gross output " +
                        fmt(gvo_t < 0.0 ? gvo_t : gvo_prev));
    }
    return 0.5 * (gvo_t / gdp_t + gvo_prev / gdp_prev);
}

DomarWeightedTfp aggregate_tfp(const std::map<std::string, IndustryAccount>& industries,
                               const AnnualSeries& gdp, int year,
                               std::vector<std::string>* warnings) {
    DomarWeightedTfp result;
    result.year = year;
    double gdp_t = gdp.at(year);
    double gdp_prev = gdp.at(year - 1);
    for (const auto& [id, account] : industries) {
        auto tfp = account.tfp_growth.find(year);
        if (tfp == account.tfp_growth.end()) {
            throw DataError("industry '" + id + "' has no TFP growth for " +
                            std::to_string(year));
        }
        if (account.gross_output.empty()) {
            throw DataError("industry '" + id + "' has no gross_output series");
        }
        double weight = domar_weight(account.gross_output.at(year),
                                     account.gross_output.at(year - 1), gdp_t, gdp_prev);
        if (weight > 1.0 && warnings != nullptr) {
            warnings->push_back("industry '" + id + "' has Domar weight " + fmt(weight) +
                                " > 1 in " + std::to_string(year) +
                                "; gross output exceeds GDP");
        }
        result.weights[id] = weight;
        double contribution = weight * tfp->second;
        result.contributions[id] = contribution;
        result.aggregate += contribution;
    }
    return result;
}

DomarWeightedTfp split_by_producer(DomarWeightedTfp result,
                                   const std::set<std::string>& ict_producer_ids) {
    double ict_sum = 0.0;
    for (const auto& id : ict_producer_ids) {
        auto it = result.contributions.find(id);
        if (it == result.contributions.end()) {
            throw DataError("ICT producer '" + id + "' is not in the aggregation result");
        }
        ict_sum += it->second;
    }
    result.ict_producer_contribution = ict_sum;
    // Defined as the remainder so the two parts always recompose the
    // aggregate exactly, mirroring how the residual itself is defined.
    result.non_ict_contribution = result.aggregate - ict_sum;
    return result;
}

} // namespace growthacct
