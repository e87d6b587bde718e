#pragma once

#include <stdexcept>
#include <string>

namespace ccgof {

// A required calibrated constant is not available (absent table entry, or a
// lookup outside the tabulated n-range, which is never silently extrapolated).
class CalibrationRequiredError : public std::runtime_error {
 public:
  explicit CalibrationRequiredError(const std::string& what)
      : std::runtime_error(what) {}
};

// A numerical contract was violated (non-positive radicand, failed bracket,
// non-convergent integral). Clamping is never used to paper over these.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ccgof
