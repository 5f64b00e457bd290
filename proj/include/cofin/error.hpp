#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cofin {

// A precondition of an algebraic operation was violated (for example a
// non-idempotent argument where an idempotent is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Text could not be read as an element or expression.  `position` and
// `length` locate the offending span in the source (0-based, bytes).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t position, std::size_t length = 1)
      : std::runtime_error(what), position_(position), length_(length) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t length() const noexcept { return length_; }

 private:
  std::size_t position_;
  std::size_t length_;
};

// An expression combines carriers that have no product defined between them.
class TypeError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace cofin
