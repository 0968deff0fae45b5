#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumset {

/// Parameters outside the domain where an operation is defined
/// (h > rk, k > p, non-prime modulus, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A guarantee that must always hold was observed to fail.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A scan or computation would exceed its configured size limit.
class ResourceCapExceeded : public std::runtime_error {
 public:
  ResourceCapExceeded(const std::string& what, std::uint64_t requested, std::uint64_t cap)
      : std::runtime_error(what), requested_(requested), cap_(cap) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

/// Malformed textual input (set literal, manifest).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sumset
