#pragma once

#include <stdexcept>
#include <string>

namespace fdaclust {

// Invalid inputs: malformed files, broken invariants, violated preconditions.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical breakdown: failed factorizations, unidentifiable variance
// components, degenerate mixture fits.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fdaclust
