#pragma once

#include <stdexcept>
#include <string>

namespace supertower {

// Bad argument to a pure function (non-prime ell, zero polynomial, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation undefined for this input (e.g. tower data of a reducible curve).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A curve description that parses but does not describe a valid model.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A curve description that cannot be read at all.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace supertower
