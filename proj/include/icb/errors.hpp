#pragma once

#include <stdexcept>
#include <string>

namespace icb {

// Dimension / layout mismatches between tensors and the declared geometry.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tensor file format problems (bad magic, version, truncation) and file-system failures.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Config text problems; messages carry the offending line number.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace icb
