#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace circan {

// Violated structural precondition (degree mismatch, non-member generator, ...).
class StructuralError : public std::logic_error {
public:
  explicit StructuralError(const std::string& what) : std::logic_error(what) {}
};

// Input outside the operation's domain (0 in a connection set, non-unit
// multiplier, witness parameter out of range, ...).
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A closure or enumeration outgrew the configured cap. Carries how far the
// computation got before stopping.
class CapacityError : public std::runtime_error {
public:
  CapacityError(const std::string& what, std::uint64_t partial_count)
      : std::runtime_error(what), partial_count(partial_count) {}

  std::uint64_t partial_count;
};

// The request is outside the configured sweep/analysis budget (n too large,
// missing --max-size, ...). CLI maps this to exit code 2.
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed instance text. `position` is the byte offset of the first bad
// character.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position(position) {}

  std::size_t position;
};

}  // namespace circan
