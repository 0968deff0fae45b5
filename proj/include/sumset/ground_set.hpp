#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sumset {

using Element = std::int64_t;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// A finite set of distinct integers, or of residues modulo a prime.
/// Elements are always stored sorted ascending.
class GroundSet {
 public:
  /// Sorts and deduplicates `elements`. Throws DomainError when empty, when
  /// `modulus` is not prime, or when a residue lies outside [0, p-1].
  explicit GroundSet(std::vector<Element> elements,
                     std::optional<std::uint64_t> modulus = std::nullopt);

  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Element operator[](std::size_t i) const { return elements_[i]; }
  Element min() const noexcept { return elements_.front(); }
  Element max() const noexcept { return elements_.back(); }

  const std::optional<std::uint64_t>& modulus() const noexcept { return modulus_; }
  bool is_modular() const noexcept { return modulus_.has_value(); }

  bool contains(Element x) const;

  /// Set literal form, e.g. "0,1,3,7" or "0,1,3,7 mod 11".
  std::string to_string() const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<Element> elements_;
  std::optional<std::uint64_t> modulus_;
};

/// The pair (h, r) with h = m*r + epsilon, 0 <= epsilon <= r-1.
/// m and epsilon are always derived.
class SumParams {
 public:
  /// Throws DomainError unless h >= 1 and r >= 1.
  SumParams(std::int64_t h, std::int64_t r);

  std::int64_t h() const noexcept { return h_; }
  std::int64_t r() const noexcept { return r_; }
  std::int64_t m() const noexcept { return m_; }
  std::int64_t epsilon() const noexcept { return epsilon_; }

  friend bool operator==(const SumParams&, const SumParams&) = default;

 private:
  std::int64_t h_;
  std::int64_t r_;
  std::int64_t m_;
  std::int64_t epsilon_;
};

struct Split {
  std::int64_t m;
  std::int64_t epsilon;
  friend bool operator==(const Split&, const Split&) = default;
};

/// Euclidean division h = m*r + epsilon. Requires h >= 1, r >= 1.
Split split_h(std::int64_t h, std::int64_t r);

struct ParsedSet {
  GroundSet set;
  std::vector<std::string> warnings;
};

/// Parses "a,b,c" with an optional " mod p" suffix. Whitespace is ignored.
/// Unsorted or duplicated input is normalized and reported in `warnings`.
/// `modulus` supplies p when the literal has no suffix; if both are given
/// they must agree.
ParsedSet parse_set_literal(std::string_view text,
                            std::optional<std::uint64_t> modulus = std::nullopt);

}  // namespace sumset
