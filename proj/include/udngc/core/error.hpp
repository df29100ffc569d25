#pragma once

#include <stdexcept>
#include <string>

namespace udngc {

// Invalid model or run parameter (non-positive density, bad exponents, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A query needed more base stations than the deployment holds.
class InsufficientPointsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Quadrature failed to converge, or a result left its admissible range.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Configuration file problems (unknown key, malformed value, violated bound).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace udngc
