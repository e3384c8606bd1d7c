#include "growthacct/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "growthacct/csv.hpp"
#include "growthacct/dataset.hpp"
#include "growthacct/errors.hpp"
#include "growthacct/version.hpp"

namespace growthacct::cli {

namespace {

const char* mode_label(DecompositionMode mode) {
    return mode == DecompositionMode::levels ? "levels" : "per-worker";
}

double scaled(double value, bool percent) {
    return percent ? value * 100.0 : value;
}

std::string json_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (unsigned char c : text) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += static_cast<char>(c);
            }
        }
    }
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out += c;
        }
    }
    out += '"';
    return out;
}

/// Tiny JSON document model. Objects serialize with their members sorted by
/// key and two-space indentation, which together with the fixed float
/// formatting makes renderings byte-reproducible.
struct JsonValue {
    enum class Kind { object, array, scalar };
    Kind kind = Kind::scalar;
    std::vector<std::pair<std::string, JsonValue>> members;
    std::vector<JsonValue> items;
    std::string rendered = "null";

    static JsonValue object() {
        JsonValue v;
        v.kind = Kind::object;
        return v;
    }
    static JsonValue array() {
        JsonValue v;
        v.kind = Kind::array;
        return v;
    }
    static JsonValue number(double x) {
        JsonValue v;
        v.rendered = format_double(x);
        return v;
    }
    static JsonValue integer(long long x) {
        JsonValue v;
        v.rendered = std::to_string(x);
        return v;
    }
    static JsonValue text(const std::string& s) {
        JsonValue v;
        v.rendered = '"' + json_escape(s) + '"';
        return v;
    }

    JsonValue& add(const std::string& key, JsonValue value) {
        members.emplace_back(key, std::move(value));
        return *this;
    }
    JsonValue& push(JsonValue value) {
        items.push_back(std::move(value));
        return *this;
    }

    void write(std::string& out, int indent) const {
        std::string pad(static_cast<std::size_t>(indent), ' ');
        std::string inner(static_cast<std::size_t>(indent) + 2, ' ');
        switch (kind) {
        case Kind::scalar:
            out += rendered;
            break;
        case Kind::object: {
            if (members.empty()) {
                out += "{}";
                break;
            }
            auto sorted = members;
            std::stable_sort(sorted.begin(), sorted.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            out += "{\n";
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                out += inner;
                out += '"' + json_escape(sorted[i].first) + "\": ";
                sorted[i].second.write(out, indent + 2);
                out += (i + 1 < sorted.size()) ? ",\n" : "\n";
            }
            out += pad + "}";
            break;
        }
        case Kind::array: {
            if (items.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < items.size(); ++i) {
                out += inner;
                items[i].write(out, indent + 2);
                out += (i + 1 < items.size()) ? ",\n" : "\n";
            }
            out += pad + "]";
            break;
        }
        }
    }

    std::string dump() const {
        std::string out;
        write(out, 0);
        out += '\n';
        return out;
    }
};

ClassificationConfig load_bundle_classification(const std::filesystem::path& dir) {
    auto file = dir / "classification.cfg";
    if (std::filesystem::exists(file)) {
        return load_classification(file);
    }
    return {};
}

std::vector<std::string> select_countries(const std::map<std::string, EconomyDataset>& bundle,
                                          const std::vector<std::string>& requested) {
    std::vector<std::string> selected;
    if (requested.empty()) {
        for (const auto& [country, dataset] : bundle) {
            (void)dataset;
            selected.push_back(country);
        }
        return selected;
    }
    for (const auto& country : requested) {
        if (bundle.count(country) == 0) {
            throw DataError("unknown country '" + country + "'");
        }
        selected.push_back(country);
    }
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
    return selected;
}

std::vector<int> select_growth_years(const EconomyDataset& dataset,
                                     const std::optional<YearRange>& range) {
    int lo = dataset.output.first_year() + 1;
    int hi = dataset.output.last_year();
    int available_lo = lo;
    int available_hi = hi;
    if (range) {
        lo = std::max(lo, range->start);
        hi = std::min(hi, range->end);
    }
    std::vector<int> years;
    for (int t = lo; t <= hi; ++t) {
        years.push_back(t);
    }
    if (years.empty()) {
        throw DataError("year range selects no growth years for " + dataset.country +
                        " (available " + std::to_string(available_lo) + "-" +
                        std::to_string(available_hi) + ")");
    }
    return years;
}

ValidationReport require_valid(const EconomyDataset& dataset) {
    ValidationReport report = validate(dataset);
    if (!report.ok()) {
        std::string message = "validation failed for " + dataset.country + ": " +
                              report.summary();
        for (const auto& issue : report.errors) {
            message += "\n  " + issue.location + ": " + issue.rule + ": " + issue.observed;
        }
        throw DataError(message);
    }
    return report;
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
    if (config.output_path.empty()) {
        out << text;
    } else {
        write_file_atomic(config.output_path, text);
    }
}

bool input_exists(const RunConfig& config, std::ostream& err) {
    if (!std::filesystem::exists(config.input_path)) {
        err << "error: input not found: " << config.input_path.string() << '\n';
        return false;
    }
    return true;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& body) {
    try {
        return body();
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageError;
    }
}

} // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string content_digest(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw LoadError("cannot open " + file.string());
    }
    std::string header;
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        auto fields = split_csv_line(line);
        std::string canonical;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) {
                canonical += ',';
            }
            canonical += fields[i];
        }
        if (canonical.empty()) {
            continue;
        }
        if (header.empty() && rows.empty()) {
            header = canonical;
        } else {
            rows.push_back(std::move(canonical));
        }
    }
    std::sort(rows.begin(), rows.end());

    std::uint64_t hash = 14695981039346656037ULL;
    auto mix = [&hash](const std::string& text) {
        for (unsigned char c : text) {
            hash ^= c;
            hash *= 1099511628211ULL;
        }
        hash ^= static_cast<unsigned char>('\n');
        hash *= 1099511628211ULL;
    };
    mix(header);
    for (const auto& row : rows) {
        mix(row);
    }
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write " + tmp.string());
        }
        out << content;
        out.flush();
        if (!out.good()) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("failed while writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ec_remove;
        std::filesystem::remove(tmp, ec_remove);
        throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " +
                      ec.message());
    }
}

RunReport run_decompose(const RunConfig& config) {
    ClassificationConfig cls = load_bundle_classification(config.input_path);
    auto bundle = load_bundle(config.input_path, cls);

    RunReport report;
    report.tool_version = kToolVersion;
    report.mode = config.mode;
    for (const char* name : {"series.csv", "shares.csv", "tfp.csv", "classification.cfg"}) {
        auto file = config.input_path / name;
        if (std::filesystem::exists(file)) {
            report.input_digests[name] = content_digest(file);
        }
    }

    for (const auto& country : select_countries(bundle, config.countries)) {
        const EconomyDataset& dataset = bundle.at(country);
        report.validation_warnings += require_valid(dataset).warnings.size();
        CountryDecompositions& cd = report.countries[country];
        for (int t : select_growth_years(dataset, config.year_range)) {
            cd.basic.push_back(decompose_basic(dataset, t, config.mode));
            cd.detailed.push_back(decompose_detailed(dataset, t, config.mode));
            if (config.mode == DecompositionMode::levels) {
                cd.ict.push_back(ict_contribution(dataset, t));
            }
        }
    }
    return report;
}

std::string render_decompose_json(const RunReport& report, bool percent) {
    JsonValue root = JsonValue::object();

    JsonValue countries = JsonValue::object();
    for (const auto& [name, cd] : report.countries) {
        JsonValue country = JsonValue::object();

        JsonValue basic = JsonValue::array();
        for (const auto& d : cd.basic) {
            JsonValue row = JsonValue::object();
            row.add("capital_contribution", JsonValue::number(scaled(d.capital_contribution, percent)));
            row.add("labor_contribution", JsonValue::number(scaled(d.labor_contribution, percent)));
            row.add("output_growth", JsonValue::number(scaled(d.output_growth, percent)));
            row.add("tfp_residual", JsonValue::number(scaled(d.tfp_residual, percent)));
            row.add("year", JsonValue::integer(d.year));
            basic.push(std::move(row));
        }
        country.add("basic", std::move(basic));

        JsonValue detailed = JsonValue::array();
        for (const auto& d : cd.detailed) {
            JsonValue row = JsonValue::object();
            JsonValue ict = JsonValue::object();
            for (const auto& [code, value] : d.ict_asset_contributions) {
                ict.add(std::string(asset_label(code)), JsonValue::number(scaled(value, percent)));
            }
            JsonValue non_ict = JsonValue::object();
            for (const auto& [code, value] : d.non_ict_asset_contributions) {
                non_ict.add(std::string(asset_label(code)),
                            JsonValue::number(scaled(value, percent)));
            }
            row.add("ict_assets", std::move(ict));
            row.add("labor_contribution", JsonValue::number(scaled(d.labor_contribution, percent)));
            row.add("non_ict_assets", std::move(non_ict));
            row.add("output_growth", JsonValue::number(scaled(d.output_growth, percent)));
            row.add("tfp_residual", JsonValue::number(scaled(d.tfp_residual, percent)));
            row.add("year", JsonValue::integer(d.year));
            detailed.push(std::move(row));
        }
        country.add("detailed", std::move(detailed));

        JsonValue ict = JsonValue::array();
        for (const auto& c : cd.ict) {
            JsonValue row = JsonValue::object();
            row.add("asset_term", JsonValue::number(scaled(c.asset_term, percent)));
            row.add("producer_tfp_term", JsonValue::number(scaled(c.producer_tfp_term, percent)));
            row.add("total", JsonValue::number(scaled(c.total, percent)));
            row.add("year", JsonValue::integer(c.year));
            ict.push(std::move(row));
        }
        country.add("ict", std::move(ict));

        countries.add(name, std::move(country));
    }
    root.add("countries", std::move(countries));

    JsonValue digests = JsonValue::object();
    for (const auto& [file, digest] : report.input_digests) {
        digests.add(file, JsonValue::text(digest));
    }
    root.add("input_digests", std::move(digests));
    root.add("mode", JsonValue::text(mode_label(report.mode)));
    root.add("tool_version", JsonValue::text(report.tool_version));
    root.add("validation_warnings",
             JsonValue::integer(static_cast<long long>(report.validation_warnings)));
    return root.dump();
}

std::string render_decompose_csv(const RunReport& report, bool percent) {
    std::string out = "country,year,mode,record,field,key,value\n";
    const char* mode = mode_label(report.mode);
    auto row = [&](const std::string& country, int year, const char* record,
                   const char* field, const std::string& key, double value) {
        out += csv_escape(country);
        out += ',' + std::to_string(year) + ',' + mode + ',' + record + ',' + field + ',';
        out += csv_escape(key);
        out += ',' + format_double(scaled(value, percent)) + '\n';
    };
    for (const auto& [country, cd] : report.countries) {
        for (const auto& d : cd.basic) {
            row(country, d.year, "basic", "output_growth", "", d.output_growth);
            row(country, d.year, "basic", "capital_contribution", "", d.capital_contribution);
            row(country, d.year, "basic", "labor_contribution", "", d.labor_contribution);
            row(country, d.year, "basic", "tfp_residual", "", d.tfp_residual);
        }
        for (const auto& d : cd.detailed) {
            row(country, d.year, "detailed", "output_growth", "", d.output_growth);
            std::map<std::string, double> assets;
            for (const auto& [code, value] : d.ict_asset_contributions) {
                assets[std::string(asset_label(code))] = value;
            }
            for (const auto& [code, value] : d.non_ict_asset_contributions) {
                assets[std::string(asset_label(code))] = value;
            }
            for (const auto& [label, value] : assets) {
                row(country, d.year, "detailed", "asset_contribution", label, value);
            }
            row(country, d.year, "detailed", "labor_contribution", "", d.labor_contribution);
            row(country, d.year, "detailed", "tfp_residual", "", d.tfp_residual);
        }
        for (const auto& c : cd.ict) {
            row(country, c.year, "ict", "asset_term", "", c.asset_term);
            row(country, c.year, "ict", "producer_tfp_term", "", c.producer_tfp_term);
            row(country, c.year, "ict", "total", "", c.total);
        }
    }
    return out;
}

InvestResult run_invest(const RunConfig& config) {
    auto flows = load_flows(config.input_path / "flows.csv");
    auto ratios = load_io_ratios(config.input_path / "io_ratios.csv");

    std::vector<std::string> countries;
    if (config.countries.empty()) {
        for (const auto& [country, by_asset] : flows) {
            (void)by_asset;
            countries.push_back(country);
        }
    } else {
        for (const auto& country : config.countries) {
            if (flows.count(country) == 0) {
                throw DataError("no flow data for country '" + country + "'");
            }
            countries.push_back(country);
        }
        std::sort(countries.begin(), countries.end());
        countries.erase(std::unique(countries.begin(), countries.end()), countries.end());
    }

    InvestResult result;
    for (const auto& country : countries) {
        const auto& by_asset = flows.at(country);
        std::vector<AssetCode> codes;
        for (const auto& [code, inputs] : by_asset) {
            (void)inputs;
            codes.push_back(code);
        }
        std::sort(codes.begin(), codes.end(), [](AssetCode a, AssetCode b) {
            return asset_label(a) < asset_label(b);
        });
        for (AssetCode code : codes) {
            const CommodityFlowInputs& inputs = by_asset.at(code);
            std::vector<int> years;
            for (const auto& [year, flow] : inputs.by_year) {
                (void)flow;
                if (!config.year_range ||
                    (year >= config.year_range->start && year <= config.year_range->end)) {
                    years.push_back(year);
                }
            }
            if (!commodity_flow_eligible(code)) {
                for (int year : years) {
                    result.warnings.push_back(
                        country + "/" + std::string(asset_label(code)) + "/" +
                        std::to_string(year) +
                        ": skipped: commodity flow not applicable to software");
                }
                continue;
            }
            auto country_ratios = ratios.find(country);
            if (country_ratios == ratios.end() ||
                country_ratios->second.count(code) == 0) {
                throw DataError("no allocation ratios for " + std::string(asset_label(code)) +
                                " in country " + country);
            }
            for (int year : years) {
                InvestRow row;
                row.country = country;
                row.estimate = estimate_investment(inputs, country_ratios->second.at(code), year);
                result.rows.push_back(std::move(row));
            }
        }
    }
    return result;
}

DomarResult run_domar(const RunConfig& config) {
    ClassificationConfig cls = load_bundle_classification(config.input_path);
    auto bundle = load_bundle(config.input_path, cls);

    DomarResult result;
    for (const auto& country : select_countries(bundle, config.countries)) {
        const EconomyDataset& dataset = bundle.at(country);
        require_valid(dataset);
        if (dataset.industries.empty()) {
            throw DataError("no industry accounts for country " + country);
        }
        for (int t : select_growth_years(dataset, config.year_range)) {
            std::vector<std::string> warnings;
            DomarWeightedTfp tfp = aggregate_tfp(dataset.industries, dataset.output, t, &warnings);
            tfp = split_by_producer(std::move(tfp), dataset.ict_producer_ids);
            for (auto& message : warnings) {
                result.warnings.push_back(country + ": " + message);
            }
            DomarRow row;
            row.country = country;
            row.tfp = std::move(tfp);
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

namespace {

std::string render_invest_csv(const InvestResult& result) {
    std::string out = "country,asset,year,domestic_component,import_component,total\n";
    for (const auto& row : result.rows) {
        out += csv_escape(row.country);
        out += ',';
        out += asset_label(row.estimate.item);
        out += ',' + std::to_string(row.estimate.year);
        out += ',' + format_double(row.estimate.domestic_component);
        out += ',' + format_double(row.estimate.import_component);
        out += ',' + format_double(row.estimate.total) + '\n';
    }
    return out;
}

std::string render_invest_json(const InvestResult& result) {
    JsonValue root = JsonValue::object();
    JsonValue rows = JsonValue::array();
    for (const auto& row : result.rows) {
        JsonValue item = JsonValue::object();
        item.add("asset", JsonValue::text(std::string(asset_label(row.estimate.item))));
        item.add("country", JsonValue::text(row.country));
        item.add("domestic_component", JsonValue::number(row.estimate.domestic_component));
        item.add("import_component", JsonValue::number(row.estimate.import_component));
        item.add("total", JsonValue::number(row.estimate.total));
        item.add("year", JsonValue::integer(row.estimate.year));
        rows.push(std::move(item));
    }
    root.add("rows", std::move(rows));
    root.add("tool_version", JsonValue::text(kToolVersion));
    JsonValue warnings = JsonValue::array();
    for (const auto& message : result.warnings) {
        warnings.push(JsonValue::text(message));
    }
    root.add("warnings", std::move(warnings));
    return root.dump();
}

std::string render_domar_csv(const DomarResult& result, bool percent) {
    std::string out = "country,year,aggregate_tfp,ict_producer_contribution,non_ict_contribution\n";
    for (const auto& row : result.rows) {
        out += csv_escape(row.country);
        out += ',' + std::to_string(row.tfp.year);
        out += ',' + format_double(scaled(row.tfp.aggregate, percent));
        out += ',' + format_double(scaled(row.tfp.ict_producer_contribution, percent));
        out += ',' + format_double(scaled(row.tfp.non_ict_contribution, percent)) + '\n';
    }
    return out;
}

std::string render_domar_weights_csv(const DomarResult& result) {
    std::string out = "country,year,industry,weight\n";
    for (const auto& row : result.rows) {
        for (const auto& [industry, weight] : row.tfp.weights) {
            out += csv_escape(row.country);
            out += ',' + std::to_string(row.tfp.year);
            out += ',' + csv_escape(industry);
            out += ',' + format_double(weight) + '\n';
        }
    }
    return out;
}

std::string render_domar_json(const DomarResult& result, bool percent) {
    JsonValue root = JsonValue::object();
    JsonValue rows = JsonValue::array();
    for (const auto& row : result.rows) {
        JsonValue item = JsonValue::object();
        item.add("aggregate_tfp", JsonValue::number(scaled(row.tfp.aggregate, percent)));
        item.add("country", JsonValue::text(row.country));
        item.add("ict_producer_contribution",
                 JsonValue::number(scaled(row.tfp.ict_producer_contribution, percent)));
        item.add("non_ict_contribution",
                 JsonValue::number(scaled(row.tfp.non_ict_contribution, percent)));
        JsonValue weights = JsonValue::object();
        for (const auto& [industry, weight] : row.tfp.weights) {
            weights.add(industry, JsonValue::number(weight));
        }
        item.add("weights", std::move(weights));
        item.add("year", JsonValue::integer(row.tfp.year));
        rows.push(std::move(item));
    }
    root.add("rows", std::move(rows));
    root.add("tool_version", JsonValue::text(kToolVersion));
    JsonValue warnings = JsonValue::array();
    for (const auto& message : result.warnings) {
        warnings.push(JsonValue::text(message));
    }
    root.add("warnings", std::move(warnings));
    return root.dump();
}

} // namespace

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!input_exists(config, err)) {
        return kExitUsageError;
    }
    return guarded(err, [&] {
        ClassificationConfig cls = load_bundle_classification(config.input_path);
        auto bundle = load_bundle(config.input_path, cls);
        std::ostringstream text;
        bool all_ok = true;
        for (const auto& country : select_countries(bundle, config.countries)) {
            ValidationReport report = validate(bundle.at(country));
            text << country << ": " << report.summary() << '\n';
            for (const auto& issue : report.errors) {
                text << "  error: " << issue.location << ": " << issue.rule << ": "
                     << issue.observed << '\n';
            }
            for (const auto& issue : report.warnings) {
                text << "  warning: " << issue.location << ": " << issue.rule << ": "
                     << issue.observed << '\n';
            }
            all_ok = all_ok && report.ok();
        }
        emit(config, text.str(), out);
        return all_ok ? kExitOk : kExitDataError;
    });
}

int cmd_decompose(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!input_exists(config, err)) {
        return kExitUsageError;
    }
    return guarded(err, [&] {
        RunReport report = run_decompose(config);
        std::string text = (config.format == OutputFormat::json)
                               ? render_decompose_json(report, config.percent)
                               : render_decompose_csv(report, config.percent);
        emit(config, text, out);
        if (report.validation_warnings > 0) {
            err << "note: " << report.validation_warnings << " validation warning(s)\n";
        }
        return kExitOk;
    });
}

int cmd_invest(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!input_exists(config, err)) {
        return kExitUsageError;
    }
    return guarded(err, [&] {
        InvestResult result = run_invest(config);
        std::string text = (config.format == OutputFormat::json) ? render_invest_json(result)
                                                                 : render_invest_csv(result);
        emit(config, text, out);
        for (const auto& message : result.warnings) {
            err << "warning: " << message << '\n';
        }
        return kExitOk;
    });
}

int cmd_domar(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!input_exists(config, err)) {
        return kExitUsageError;
    }
    return guarded(err, [&] {
        DomarResult result = run_domar(config);
        if (config.format == OutputFormat::json) {
            emit(config, render_domar_json(result, config.percent), out);
        } else if (config.output_path.empty()) {
            out << render_domar_csv(result, config.percent) << '\n'
                << render_domar_weights_csv(result);
        } else {
            write_file_atomic(config.output_path, render_domar_csv(result, config.percent));
            std::filesystem::path weights = config.output_path;
            weights.replace_filename(config.output_path.stem().string() + "_weights" +
                                     config.output_path.extension().string());
            write_file_atomic(weights, render_domar_weights_csv(result));
        }
        for (const auto& message : result.warnings) {
            err << "warning: " << message << '\n';
        }
        return kExitOk;
    });
}

int cmd_report(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!input_exists(config, err)) {
        return kExitUsageError;
    }
    return guarded(err, [&] {
        ClassificationConfig cls = load_bundle_classification(config.input_path);
        auto bundle = load_bundle(config.input_path, cls);
        std::ostringstream text;
        double scale = config.percent ? 100.0 : 1.0;
        int precision = config.percent ? 4 : 6;
        auto num = [&](double value) {
            char buf[48];
            std::snprintf(buf, sizeof(buf), "%.*f", precision, value * scale);
            return std::string(buf);
        };

        text << "growth accounting report (tool " << kToolVersion << ")\n";
        text << "input: " << config.input_path.string() << '\n';
        text << "mode: " << mode_label(config.mode) << '\n';
        if (config.percent) {
            text << "units: percent\n";
        }
        text << "inputs:\n";
        for (const char* name :
             {"series.csv", "shares.csv", "tfp.csv", "classification.cfg"}) {
            auto file = config.input_path / name;
            if (std::filesystem::exists(file)) {
                text << "  " << name << "  fnv1a:" << content_digest(file) << '\n';
            }
        }

        bool all_ok = true;
        for (const auto& country : select_countries(bundle, config.countries)) {
            const EconomyDataset& dataset = bundle.at(country);
            ValidationReport report = validate(dataset);
            text << '\n' << "country " << country << '\n';
            text << "  validation: " << report.summary() << '\n';
            for (const auto& issue : report.errors) {
                text << "    error: " << issue.location << ": " << issue.rule << ": "
                     << issue.observed << '\n';
            }
            for (const auto& issue : report.warnings) {
                text << "    warning: " << issue.location << ": " << issue.rule << ": "
                     << issue.observed << '\n';
            }
            if (!report.ok()) {
                all_ok = false;
                continue;
            }
            text << "  coverage: " << dataset.output.first_year() << "-"
                 << dataset.output.last_year();
            if (!dataset.labor_unit.empty()) {
                text << " (labor unit: " << dataset.labor_unit << ")";
            }
            text << '\n';

            auto years = select_growth_years(dataset, config.year_range);
            text << "  growth decomposition (output, capital, labor, TFP):\n";
            for (int t : years) {
                Decomposition d = decompose_basic(dataset, t, config.mode);
                text << "    " << t << "  " << num(d.output_growth) << "  "
                     << num(d.capital_contribution) << "  " << num(d.labor_contribution)
                     << "  " << num(d.tfp_residual) << '\n';
            }
            if (config.mode == DecompositionMode::levels) {
                try {
                    std::ostringstream section;
                    for (int t : years) {
                        IctContribution c = ict_contribution(dataset, t);
                        section << "    " << t << "  " << num(c.asset_term) << "  "
                                << num(c.producer_tfp_term) << "  " << num(c.total) << '\n';
                    }
                    text << "  ICT contribution (assets, producer TFP, total):\n"
                         << section.str();
                } catch (const DataError& e) {
                    text << "  ICT contribution unavailable: " << e.what() << '\n';
                }
            }
            if (!dataset.industries.empty()) {
                try {
                    std::ostringstream section;
                    for (int t : years) {
                        DomarWeightedTfp tfp =
                            aggregate_tfp(dataset.industries, dataset.output, t);
                        tfp = split_by_producer(std::move(tfp), dataset.ict_producer_ids);
                        section << "    " << t << "  " << num(tfp.aggregate) << "  "
                                << num(tfp.ict_producer_contribution) << "  "
                                << num(tfp.non_ict_contribution) << '\n';
                    }
                    text << "  aggregate TFP, Domar-weighted (total, ICT producers, others):\n"
                         << section.str();
                } catch (const DataError& e) {
                    text << "  aggregate TFP unavailable: " << e.what() << '\n';
                }
            }
        }
        emit(config, text.str(), out);
        return all_ok ? kExitOk : kExitDataError;
    });
}

} // namespace growthacct::cli
