#pragma once

#include <stdexcept>
#include <string>

namespace symsq {

// Argument outside the mathematical domain of an operation (zero inverse,
// non-square sqrt, Legendre symbol of a multiple of p, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Working precision p^N cannot resolve the requested quantity.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedInput : public std::invalid_argument {
 public:
  explicit UnsupportedInput(const std::string& what) : std::invalid_argument(what) {}
};

// A documented precondition of a check (general position, equal central
// characters, ...) is violated by the caller's input.
class PreconditionFailure : public std::logic_error {
 public:
  explicit PreconditionFailure(const std::string& what) : std::logic_error(what) {}
};

}  // namespace symsq
