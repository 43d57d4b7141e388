#pragma once

#include <stdexcept>
#include <string>

namespace confarea {

// Argument outside the mathematical domain of an operation (z = 0 with
// negative exponents, r >= R, x <= 0 for gamma, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Malformed constructor input: duplicate or out-of-range exponents.
class ConstructionError : public std::invalid_argument {
 public:
  explicit ConstructionError(const std::string& what) : std::invalid_argument(what) {}
};

// Input shape the operation does not handle (Laurent where Taylor is required).
class UnsupportedError : public std::invalid_argument {
 public:
  explicit UnsupportedError(const std::string& what) : std::invalid_argument(what) {}
};

// Input satisfies the type but not the operation's nondegeneracy condition.
class DegenerateInputError : public std::invalid_argument {
 public:
  explicit DegenerateInputError(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Principal-value extrapolation did not settle.
class PrincipalValueError : public std::runtime_error {
 public:
  explicit PrincipalValueError(const std::string& what) : std::runtime_error(what) {}
};

class InsufficientDataError : public std::runtime_error {
 public:
  explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace confarea
