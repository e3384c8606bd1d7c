#include "growthacct/csv.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "growthacct/errors.hpp"

namespace growthacct {

namespace {

std::string trim(const std::string& text) {
    auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return {};
    }
    auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

} // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"' && trim(current).empty()) {
            quoted = true;
            current.clear();
        } else if (c == ',') {
            fields.push_back(trim(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(trim(current));
    return fields;
}

CsvReader::CsvReader(std::filesystem::path file, std::vector<std::string> expected_columns)
    : path_(std::move(file)), columns_(std::move(expected_columns)) {
    in_.open(path_);
    if (!in_) {
        throw LoadError("cannot open " + path_.string());
    }
    std::string header;
    if (!std::getline(in_, header)) {
        throw LoadError(path_.filename().string() + ": no observations (file is empty)");
    }
    ++line_;
    if (!header.empty() && header.back() == '\r') {
        header.pop_back();
    }
    auto names = split_csv_line(header);
    column_index_.assign(columns_.size(), names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto it = std::find(columns_.begin(), columns_.end(), names[i]);
        if (it == columns_.end()) {
            throw LoadError(path_.filename().string() + ": unknown column '" + names[i] + "'");
        }
        std::size_t pos = static_cast<std::size_t>(it - columns_.begin());
        if (column_index_[pos] != names.size()) {
            throw LoadError(path_.filename().string() + ": duplicate column '" + names[i] + "'");
        }
        column_index_[pos] = i;
    }
    for (std::size_t pos = 0; pos < columns_.size(); ++pos) {
        if (column_index_[pos] == names.size()) {
            throw LoadError(path_.filename().string() + ": missing column '" + columns_[pos] + "'");
        }
    }
}

bool CsvReader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (trim(line).empty()) {
            continue;
        }
        row_ = split_csv_line(line);
        if (row_.size() != columns_.size()) {
            throw LoadError(context() + ": malformed row: expected " +
                            std::to_string(columns_.size()) + " fields, got " +
                            std::to_string(row_.size()));
        }
        ++rows_;
        return true;
    }
    return false;
}

const std::string& CsvReader::field(const std::string& column) const {
    auto it = std::find(columns_.begin(), columns_.end(), column);
    if (it == columns_.end()) {
        throw LoadError(path_.filename().string() + ": no such column '" + column + "'");
    }
    return row_[column_index_[static_cast<std::size_t>(it - columns_.begin())]];
}

std::string CsvReader::context() const {
    return path_.filename().string() + ":" + std::to_string(line_);
}

double parse_double(const std::string& text, const std::string& context) {
    if (text.empty()) {
        throw LoadError(context + ": malformed row: empty numeric field");
    }
    char* end = nullptr;
    double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) {
        throw LoadError(context + ": malformed row: not a number: '" + text + "'");
    }
    return value;
}

int parse_year(const std::string& text, const std::string& context) {
    if (text.empty()) {
        throw LoadError(context + ": malformed row: empty year field");
    }
    char* end = nullptr;
    long value = std::strtol(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size() || value < -100000 || value > 100000) {
        throw LoadError(context + ": malformed row: not a year: '" + text + "'");
    }
    return static_cast<int>(value);
}

} // namespace growthacct
