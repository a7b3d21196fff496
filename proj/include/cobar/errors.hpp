#pragma once

#include <stdexcept>
#include <string>

namespace cobar {

// Malformed user input: files, flags, unknown example names. CLI exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A contract violation detected by validation (bad presentation, ring mismatch,
// d^2 != 0 where an operation requires it). CLI exit code 2.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration exceeded the configured cell budget.
struct bound_error : std::runtime_error {
  explicit bound_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cobar
