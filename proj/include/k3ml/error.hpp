#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace k3ml {

// Precondition violated by the caller (zero modulus, wrong field, bad shape, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two exact values from different coefficient fields were combined.
class FieldMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace k3ml
