#pragma once

#include <stdexcept>
#include <string>

namespace ovib {

// Error taxonomy used across the library. The CLI maps these onto exit codes:
// ConfigError/FormatError/IoError -> 2, NumericalError -> 3.

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ovib
