#pragma once

#include <stdexcept>
#include <string>

namespace divehmm {

// Malformed input text (CSV rows, config lines).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that violates a model invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite or otherwise pathological numerical state.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace divehmm
