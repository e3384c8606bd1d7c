#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace growthacct {

/// Minimal CSV reader for the bundle schemas: comma separated, one header
/// row, UTF-8, '.' decimal separator. The header must contain exactly the
/// expected columns (any order); unknown columns are rejected so schema
/// drift never passes silently.
class CsvReader {
public:
    CsvReader(std::filesystem::path file, std::vector<std::string> expected_columns);

    /// Advance to the next data row. Blank lines are skipped.
    bool next();

    /// Field of the current row by column name (trimmed).
    const std::string& field(const std::string& column) const;

    std::size_t line() const noexcept { return line_; }
    std::size_t rows_read() const noexcept { return rows_; }
    const std::filesystem::path& path() const noexcept { return path_; }

    /// "file.csv:12" prefix for error messages.
    std::string context() const;

private:
    std::filesystem::path path_;
    std::ifstream in_;
    std::vector<std::string> columns_;        // expected, declaration order
    std::vector<std::size_t> column_index_;   // position of columns_[i] in the file
    std::vector<std::string> row_;
    std::size_t line_ = 0;
    std::size_t rows_ = 0;
};

/// Split one CSV line into fields. Handles double-quoted fields with ""
/// escapes; fields are whitespace-trimmed outside quotes.
std::vector<std::string> split_csv_line(const std::string& line);

/// Strict full-string numeric parsers; throw LoadError with `context` on
/// failure.
double parse_double(const std::string& text, const std::string& context);
int parse_year(const std::string& text, const std::string& context);

} // namespace growthacct
