#pragma once

#include <stdexcept>
#include <string>

namespace polylat {

// Bad argument: wrong base, degree mismatch, out-of-range index, bad weight.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input that violates a mathematical precondition (zero where a unit is required).
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request refused because the enumeration or construction would be too large.
class ResourceLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

class UnsupportedBase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Misuse of a stateful object (calls out of sequence).
class InternalState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polylat
