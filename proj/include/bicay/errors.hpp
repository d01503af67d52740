#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicay {

// Bad scalar argument: non-prime where a prime is required, size over cap,
// index out of range, malformed descriptor, and similar.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Connection set violates the Cayley-side requirements for its role
// (identity member, or not inverse-closed, or out-of-range element).
class InvalidConnectionSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A hard size cap was exceeded (isomorphism vertex cap, enumeration caps).
// Distinct from solver budget exhaustion, which is reported in-band via
// SolveOutcome::exhaustive = false.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized input. Carries a byte offset into the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_ = 0;
};

}  // namespace bicay
