#pragma once

#include <stdexcept>

namespace oad {

// Shape or length disagreement between operands. Dimension mismatches are
// always errors, never implicit broadcasts.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent external input: files, headers, datasets.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid configuration or command usage.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite value where a finite one is required (diverged training etc.).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace oad
