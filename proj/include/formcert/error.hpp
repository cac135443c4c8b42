#pragma once

#include <stdexcept>
#include <string>

namespace formcert {

// Base class for all engine errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed inputs: bad structure constants, failed axioms, dimension
// mismatches. Carries a human-readable witness in the message.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A computation exceeded a resource cap (term count, generator count or
// wall-clock budget). The message carries a size estimate.
class CapError : public Error {
 public:
  explicit CapError(const std::string& msg) : Error(msg) {}
};

}  // namespace formcert
