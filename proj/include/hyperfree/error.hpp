#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperfree {

// Malformed or out-of-contract input (bad vertex, bad family, parse failure).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request the library refuses to serve at this size (exact canonical form
// above 8 vertices, even n-gons, ...).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal algorithm invariant failed. Seeing one of these is a bug.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised by checks that require a Q-free input; carries the offending set.
class NotFreeError : public InputError {
 public:
  NotFreeError(const std::string& what, std::vector<int> witness)
      : InputError(what), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

}  // namespace hyperfree
