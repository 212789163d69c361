#pragma once

#include <stdexcept>
#include <string>

namespace coherent {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid user input: malformed specs, bad factors, out-of-range options.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Broken hierarchy structure or mismatched matrix/panel shapes.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Raw data problems: unknown ids, duplicate rows, unparseable files.
class IngestError : public Error {
public:
    using Error::Error;
};

/// A series that cannot be cleaned (no valid observation at all).
class CleaningError : public Error {
public:
    using Error::Error;
};

/// Not enough history to build a feature window or design row.
class FeatureError : public Error {
public:
    using Error::Error;
};

/// Singular systems, non-finite results, failed decompositions.
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace coherent
