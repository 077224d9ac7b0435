#pragma once

#include <stdexcept>
#include <string>

namespace jm {

// Caller broke a contract (mismatched algebras, bad flag, invalid frame).
struct usage_error : std::invalid_argument {
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Input is outside the mathematical domain of the operation.
struct domain_error : std::domain_error {
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A numerical procedure failed to converge or lost feasibility.
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jm
