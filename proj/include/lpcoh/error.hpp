#pragma once

#include <stdexcept>

namespace lpcoh {

// Value lies outside an operation's documented domain (p <= 1, k out of
// range, size cap exceeded, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller broke a structural precondition (configuration not in the family
// the operation is defined on, mismatched dimensions, ...).
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace lpcoh
