#pragma once

#include <stdexcept>
#include <string>

namespace gitsolve {

// Malformed user input: bad group names, weight text, weight files.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inputs that parse but violate a precondition (non-dominant weight,
// rank mismatch, unsupported coordinate conversion, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configurable size cap (support size, cell count, Weyl enumeration) was hit.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gitsolve
