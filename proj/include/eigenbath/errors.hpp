#pragma once

#include <stdexcept>
#include <string>

namespace eigenbath {

// Bad or missing run-configuration field; message names the field.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Request exceeds a hard resource guard (e.g. dense matrix too large).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace eigenbath
