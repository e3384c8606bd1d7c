#pragma once

#include <stdexcept>
#include <string>

namespace growthacct {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Structural problem in an input file: missing file, malformed row,
/// unknown column, duplicate cell, gap in a series.
class LoadError : public Error {
public:
    explicit LoadError(const std::string& message) : Error(message) {}
};

/// Invalid value handed to a computation: non-positive series value under a
/// log, negative share, ineligible asset, missing year.
class DataError : public Error {
public:
    explicit DataError(const std::string& message) : Error(message) {}
};

/// Operating-system level I/O failure, e.g. an output file that cannot be
/// written. Distinct from LoadError so the CLI can map it to the usage/I-O
/// exit code.
class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error(message) {}
};

} // namespace growthacct
