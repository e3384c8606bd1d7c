#include "growthacct/dataset.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "growthacct/csv.hpp"
#include "growthacct/errors.hpp"

namespace growthacct {

namespace {

constexpr double kShareTolerance = 1e-6;

std::string trim(const std::string& text) {
    auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return {};
    }
    auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

std::string fmt(double value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

/// Proportional renormalization of share sums that miss their target by at
/// most the tolerance. Larger misses and negative shares are left untouched
/// for validate() to flag.
void renormalize_shares(YearShares& shares) {
    if (shares.v_k < 0.0 || shares.v_l < 0.0) {
        return;
    }
    double sum = shares.v_k + shares.v_l;
    if (sum > 0.0 && sum != 1.0 && std::abs(sum - 1.0) <= kShareTolerance) {
        shares.v_k /= sum;
        shares.v_l /= sum;
    }
    double asset_sum = 0.0;
    for (const auto& [code, value] : shares.v_c) {
        (void)code;
        if (value < 0.0) {
            return;
        }
        asset_sum += value;
    }
    for (const auto& [code, value] : shares.v_n) {
        (void)code;
        if (value < 0.0) {
            return;
        }
        asset_sum += value;
    }
    if (asset_sum > 0.0 && asset_sum != shares.v_k &&
        std::abs(asset_sum - shares.v_k) <= kShareTolerance) {
        double factor = shares.v_k / asset_sum;
        for (auto& [code, value] : shares.v_c) {
            (void)code;
            value *= factor;
        }
        for (auto& [code, value] : shares.v_n) {
            (void)code;
            value *= factor;
        }
    }
}

void require_empty_field(const CsvReader& csv, const std::string& column,
                         const std::string& why) {
    if (!csv.field(column).empty()) {
        throw LoadError(csv.context() + ": malformed row: column '" + column +
                        "' must be empty " + why);
    }
}

AssetCode parse_asset(const CsvReader& csv, const std::string& column) {
    const std::string& label = csv.field(column);
    if (label.empty()) {
        throw LoadError(csv.context() + ": malformed row: missing asset code");
    }
    auto code = asset_from_label(label);
    if (!code) {
        throw LoadError(csv.context() + ": unknown asset code '" + label + "'");
    }
    return *code;
}

void check_series(const AnnualSeries& series, const std::string& country) {
    if (auto gap = series.first_gap()) {
        throw LoadError("country " + country + ": gap in series " + series.name + " at " +
                        std::to_string(*gap));
    }
}

} // namespace

double growth_rate(const AnnualSeries& series, int year) {
    double prev = series.at(year - 1);
    double cur = series.at(year);
    if (prev <= 0.0 || cur <= 0.0) {
        throw DataError("growth rate of series '" + series.name + "' over " +
                        std::to_string(year - 1) + "->" + std::to_string(year) +
                        ": non-positive value " + fmt(prev <= 0.0 ? prev : cur));
    }
    return std::log(cur) - std::log(prev);
}

double two_period_share(double share_t, double share_prev) {
    if (share_t < 0.0 || share_prev < 0.0) {
        throw DataError("two-period share: negative input " +
                        fmt(share_t < 0.0 ? share_t : share_prev));
    }
    return 0.5 * (share_t + share_prev);
}

ClassificationConfig load_classification(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw LoadError("cannot open " + file.string());
    }
    ClassificationConfig config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw LoadError(file.filename().string() + ":" + std::to_string(line_no) +
                            ": expected 'key = value'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "labor_unit") {
            config.labor_unit = value;
            continue;
        }
        bool flag;
        if (value == "ict_producer:true" || value == "true") {
            flag = true;
        } else if (value == "ict_producer:false" || value == "false") {
            flag = false;
        } else {
            throw LoadError(file.filename().string() + ":" + std::to_string(line_no) +
                            ": expected ict_producer:true|false, got '" + value + "'");
        }
        config.ict_producer[key] = flag;
    }
    return config;
}

std::map<std::string, EconomyDataset> load_bundle(const std::filesystem::path& dir,
                                                  const ClassificationConfig& config) {
    if (!std::filesystem::is_directory(dir)) {
        throw LoadError("input not found: " + dir.string());
    }

    std::map<std::string, EconomyDataset> bundle;
    auto country_of = [&](const std::string& name) -> EconomyDataset& {
        auto [it, inserted] = bundle.try_emplace(name);
        if (inserted) {
            it->second.country = name;
            it->second.labor_unit = config.labor_unit;
            it->second.output.name = "output";
            it->second.labor.name = "labor";
            it->second.capital_total.name = "capital_total";
        }
        return it->second;
    };

    // series.csv
    {
        CsvReader csv(dir / "series.csv",
                      {"country", "variable", "asset", "industry", "year", "value"});
        while (csv.next()) {
            const std::string& country = csv.field("country");
            const std::string& variable = csv.field("variable");
            if (country.empty()) {
                throw LoadError(csv.context() + ": malformed row: missing country");
            }
            int year = parse_year(csv.field("year"), csv.context());
            double value = parse_double(csv.field("value"), csv.context());
            EconomyDataset& dataset = country_of(country);

            AnnualSeries* target = nullptr;
            if (variable == "output") {
                target = &dataset.output;
            } else if (variable == "labor") {
                target = &dataset.labor;
            } else if (variable == "capital_total") {
                target = &dataset.capital_total;
            } else if (variable == "capital_asset") {
                AssetCode code = parse_asset(csv, "asset");
                require_empty_field(csv, "industry", "for variable capital_asset");
                auto [it, inserted] = dataset.capital_by_asset.try_emplace(code);
                if (inserted) {
                    it->second.name = "capital_asset " + std::string(asset_label(code));
                }
                target = &it->second;
            } else if (variable == "gross_output") {
                const std::string& industry = csv.field("industry");
                if (industry.empty()) {
                    throw LoadError(csv.context() +
                                    ": malformed row: missing industry for gross_output");
                }
                require_empty_field(csv, "asset", "for variable gross_output");
                auto [it, inserted] = dataset.industries.try_emplace(industry);
                if (inserted) {
                    it->second.id = industry;
                    it->second.gross_output.name = "gross_output " + industry;
                }
                target = &it->second.gross_output;
            } else {
                throw LoadError(csv.context() + ": unknown variable '" + variable + "'");
            }
            if (variable == "output" || variable == "labor" || variable == "capital_total") {
                require_empty_field(csv, "asset", "for variable " + variable);
                require_empty_field(csv, "industry", "for variable " + variable);
            }
            if (!target->values.emplace(year, value).second) {
                throw LoadError(csv.context() + ": duplicate cell for (" + target->name + ", " +
                                std::to_string(year) + ")");
            }
        }
        if (csv.rows_read() == 0) {
            throw LoadError("series.csv: no observations");
        }
    }

    // shares.csv
    {
        CsvReader csv(dir / "shares.csv",
                      {"country", "year", "share_kind", "asset", "industry", "value"});
        std::set<std::string> seen_scalar;
        while (csv.next()) {
            const std::string& country = csv.field("country");
            if (country.empty()) {
                throw LoadError(csv.context() + ": malformed row: missing country");
            }
            auto it = bundle.find(country);
            if (it == bundle.end()) {
                throw LoadError(csv.context() + ": country '" + country +
                                "' has shares but no series");
            }
            int year = parse_year(csv.field("year"), csv.context());
            double value = parse_double(csv.field("value"), csv.context());
            const std::string& kind = csv.field("share_kind");
            YearShares& shares = it->second.shares.by_year[year];

            auto duplicate = [&](const std::string& what) {
                throw LoadError(csv.context() + ": duplicate cell for (" + what + ", " +
                                std::to_string(year) + ")");
            };
            if (kind == "v_k" || kind == "v_l") {
                require_empty_field(csv, "asset", "for share_kind " + kind);
                require_empty_field(csv, "industry", "for share_kind " + kind);
                if (!seen_scalar.insert(country + "\x1f" + std::to_string(year) + "\x1f" + kind)
                         .second) {
                    duplicate(kind);
                }
                ((kind == "v_k") ? shares.v_k : shares.v_l) = value;
            } else if (kind == "v_c" || kind == "v_n") {
                AssetCode code = parse_asset(csv, "asset");
                require_empty_field(csv, "industry", "for share_kind " + kind);
                if (kind == "v_c" && !is_ict(code)) {
                    throw LoadError(csv.context() + ": asset " + std::string(asset_label(code)) +
                                    " is not an ICT asset (share_kind v_c)");
                }
                if (kind == "v_n" && is_ict(code)) {
                    throw LoadError(csv.context() + ": asset " + std::string(asset_label(code)) +
                                    " is an ICT asset (share_kind v_n)");
                }
                auto& target = (kind == "v_c") ? shares.v_c : shares.v_n;
                if (!target.emplace(code, value).second) {
                    duplicate(kind + " " + std::string(asset_label(code)));
                }
            } else if (kind == "u_c") {
                const std::string& industry = csv.field("industry");
                if (industry.empty()) {
                    throw LoadError(csv.context() + ": malformed row: missing industry for u_c");
                }
                require_empty_field(csv, "asset", "for share_kind u_c");
                if (!shares.u_c.emplace(industry, value).second) {
                    duplicate("u_c " + industry);
                }
            } else {
                throw LoadError(csv.context() + ": unknown share_kind '" + kind + "'");
            }
        }
    }

    // tfp.csv (optional)
    if (std::filesystem::exists(dir / "tfp.csv")) {
        CsvReader csv(dir / "tfp.csv", {"country", "industry", "year", "tfp_growth"});
        while (csv.next()) {
            const std::string& country = csv.field("country");
            auto it = bundle.find(country);
            if (it == bundle.end()) {
                throw LoadError(csv.context() + ": country '" + country +
                                "' has TFP data but no series");
            }
            const std::string& industry = csv.field("industry");
            if (industry.empty()) {
                throw LoadError(csv.context() + ": malformed row: missing industry");
            }
            int year = parse_year(csv.field("year"), csv.context());
            double value = parse_double(csv.field("tfp_growth"), csv.context());
            auto [ind, inserted] = it->second.industries.try_emplace(industry);
            if (inserted) {
                ind->second.id = industry;
                ind->second.gross_output.name = "gross_output " + industry;
            }
            if (!ind->second.tfp_growth.emplace(year, value).second) {
                throw LoadError(csv.context() + ": duplicate cell for (tfp " + industry + ", " +
                                std::to_string(year) + ")");
            }
        }
    }

    for (auto& [country, dataset] : bundle) {
        if (dataset.output.empty()) {
            throw LoadError("country " + country + ": no output series");
        }
        if (dataset.labor.empty()) {
            throw LoadError("country " + country + ": no labor series");
        }
        if (dataset.capital_total.empty()) {
            throw LoadError("country " + country + ": no capital_total series");
        }
        check_series(dataset.output, country);
        check_series(dataset.labor, country);
        check_series(dataset.capital_total, country);
        for (const auto& [code, series] : dataset.capital_by_asset) {
            (void)code;
            check_series(series, country);
        }
        for (const auto& [id, account] : dataset.industries) {
            (void)id;
            if (!account.gross_output.empty()) {
                check_series(account.gross_output, country);
            }
        }
        for (auto& [year, shares] : dataset.shares.by_year) {
            (void)year;
            renormalize_shares(shares);
        }
        for (const auto& [id, producer] : config.ict_producer) {
            if (producer && dataset.industries.count(id) != 0) {
                dataset.ict_producer_ids.insert(id);
            }
        }
    }
    return bundle;
}

EconomyDataset load_economy(const std::filesystem::path& dir,
                            const ClassificationConfig& config) {
    auto bundle = load_bundle(dir, config);
    if (bundle.size() != 1) {
        throw LoadError("bundle contains " + std::to_string(bundle.size()) +
                        " countries; load_economy expects exactly one");
    }
    return std::move(bundle.begin()->second);
}

namespace {

void validate_series(const AnnualSeries& series, ValidationReport& report, int first, int last) {
    std::string location = "series/" + series.name;
    if (auto gap = series.first_gap()) {
        report.error(location, "contiguity", "gap at " + std::to_string(*gap));
    }
    if (series.first_year() != first || series.last_year() != last) {
        report.error(location, "year range",
                     std::to_string(series.first_year()) + "-" +
                         std::to_string(series.last_year()) + " differs from output range " +
                         std::to_string(first) + "-" + std::to_string(last));
    }
    for (const auto& [year, value] : series.values) {
        if (!std::isfinite(value)) {
            report.error(location, "finite values",
                         "value " + fmt(value) + " in " + std::to_string(year));
        } else if (value <= 0.0) {
            report.error(location, "positive series",
                         "value " + fmt(value) + " in " + std::to_string(year));
        }
    }
}

} // namespace

ValidationReport validate(const EconomyDataset& dataset) {
    ValidationReport report;
    if (dataset.output.empty() || dataset.labor.empty() || dataset.capital_total.empty()) {
        if (dataset.output.empty()) {
            report.error("series/output", "required series", "missing");
        }
        if (dataset.labor.empty()) {
            report.error("series/labor", "required series", "missing");
        }
        if (dataset.capital_total.empty()) {
            report.error("series/capital_total", "required series", "missing");
        }
        return report;
    }

    int first = dataset.output.first_year();
    int last = dataset.output.last_year();
    validate_series(dataset.output, report, first, last);
    validate_series(dataset.labor, report, first, last);
    validate_series(dataset.capital_total, report, first, last);
    for (const auto& [code, series] : dataset.capital_by_asset) {
        (void)code;
        validate_series(series, report, first, last);
    }
    for (const auto& [id, account] : dataset.industries) {
        if (account.gross_output.empty()) {
            report.error("industries/" + id, "required series", "no gross_output series");
        } else {
            validate_series(account.gross_output, report, first, last);
        }
        for (const auto& [year, value] : account.tfp_growth) {
            if (!std::isfinite(value)) {
                report.error("tfp/" + id, "finite values",
                             "value " + fmt(value) + " in " + std::to_string(year));
            } else if (year <= first || year > last) {
                report.warning("tfp/" + id, "year range",
                               "tfp growth for " + std::to_string(year) +
                                   " lies outside " + std::to_string(first + 1) + "-" +
                                   std::to_string(last));
            }
        }
    }

    for (int year = first; year <= last; ++year) {
        std::string location = "shares/" + std::to_string(year);
        if (!dataset.shares.has(year)) {
            report.error(location, "coverage", "no input shares for this year");
            continue;
        }
        const YearShares& s = dataset.shares.at(year);
        bool negative = false;
        auto check_nonneg = [&](double value, const std::string& what) {
            if (!std::isfinite(value)) {
                report.error(location, "finite values", what + " = " + fmt(value));
                negative = true;
            } else if (value < 0.0) {
                report.error(location, "non-negative shares", what + " = " + fmt(value));
                negative = true;
            }
        };
        check_nonneg(s.v_k, "v_k");
        check_nonneg(s.v_l, "v_l");
        double asset_sum = 0.0;
        for (const auto& [code, value] : s.v_c) {
            check_nonneg(value, "v_c " + std::string(asset_label(code)));
            asset_sum += value;
            if (!is_ict(code)) {
                report.error(location, "asset classification",
                             "v_c contains non-ICT asset " + std::string(asset_label(code)));
            }
            if (dataset.capital_by_asset.count(code) == 0) {
                report.error(location, "asset series",
                             "no capital series for asset " + std::string(asset_label(code)));
            }
        }
        for (const auto& [code, value] : s.v_n) {
            check_nonneg(value, "v_n " + std::string(asset_label(code)));
            asset_sum += value;
            if (is_ict(code)) {
                report.error(location, "asset classification",
                             "v_n contains ICT asset " + std::string(asset_label(code)));
            }
            if (dataset.capital_by_asset.count(code) == 0) {
                report.error(location, "asset series",
                             "no capital series for asset " + std::string(asset_label(code)));
            }
        }
        if (!negative) {
            if (std::abs(s.v_k + s.v_l - 1.0) > kShareTolerance) {
                report.error(location, "share closure",
                             "share sum " + fmt(s.v_k + s.v_l) + " \xE2\x89\xA0 1");
            }
            // The per-asset breakdown is optional; the closure rule applies
            // only once any asset share is supplied for the year.
            if ((!s.v_c.empty() || !s.v_n.empty()) &&
                std::abs(asset_sum - s.v_k) > kShareTolerance) {
                report.error(location, "asset share closure",
                             "asset share sum " + fmt(asset_sum) + " \xE2\x89\xA0 v_k = " +
                                 fmt(s.v_k));
            }
        }
        for (const auto& [industry, value] : s.u_c) {
            check_nonneg(value, "u_c " + industry);
            if (dataset.industries.count(industry) == 0) {
                report.warning(location, "u_c industry",
                               "unknown industry '" + industry + "'");
            } else if (dataset.ict_producer_ids.count(industry) == 0) {
                report.warning(location, "u_c industry",
                               "industry '" + industry + "' is not an ICT producer");
            }
        }
    }

    for (const auto& id : dataset.ict_producer_ids) {
        if (dataset.industries.count(id) == 0) {
            report.error("ict_producers/" + id, "cross-reference",
                         "not present in industry accounts");
        }
    }
    return report;
}

} // namespace growthacct
