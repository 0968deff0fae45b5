#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sumset/ground_set.hpp"

namespace sumset {

/// A computed sumset: sorted distinct sums, or residues in [0, p-1].
class SumsetResult {
 public:
  SumsetResult(std::vector<Element> values, std::optional<std::uint64_t> modulus);

  std::span<const Element> values() const noexcept { return values_; }
  std::size_t cardinality() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const std::optional<std::uint64_t>& modulus() const noexcept { return modulus_; }

  /// Least and greatest sum; only defined for integer sumsets.
  std::optional<Element> min_value() const;
  std::optional<Element> max_value() const;

  bool contains(Element x) const;
  bool includes(const SumsetResult& other) const;

  /// The values as a ground set (same modulus), for iterating sumsets.
  GroundSet as_ground_set() const;

  friend bool operator==(const SumsetResult&, const SumsetResult&) = default;

 private:
  std::vector<Element> values_;
  std::optional<std::uint64_t> modulus_;
};

/// h^(r)A: all sums sum_i r_i a_i with 0 <= r_i <= r and sum_i r_i = h,
/// reduced mod p for modular sets. Exact bit-vector dynamic program over
/// (prefix of A, total multiplicity).
///
/// Throws DomainError if h > r*k, and ResourceCapExceeded if the integer sum
/// range is too wide to hold as a bit-vector.
SumsetResult generalized_sumset(const GroundSet& a, const SumParams& params);

/// hA = h^(h)A.
SumsetResult classical_sumset(const GroundSet& a, std::int64_t h);

/// h^A = h^(1)A, sums of h distinct elements. Throws DomainError if h > k.
SumsetResult restricted_sumset(const GroundSet& a, std::int64_t h);

/// Sum of two sets (A + B), reduced mod p when both are modular.
SumsetResult set_sum(const SumsetResult& a, const SumsetResult& b);

struct Extremes {
  Element min;
  Element max;
  friend bool operator==(const Extremes&, const Extremes&) = default;
};

/// Least and greatest element of h^(r)A for an integer set:
///   min = r*(a_1 + ... + a_m) + eps*a_{m+1}
///   max = r*(a_{k-m+1} + ... + a_k) + eps*a_{k-m}
Extremes extremes_closed_form(const GroundSet& a, const SumParams& params);

/// Throws DomainError naming the inequality unless 1 <= h <= r*k.
void require_nonempty_sumset(std::size_t k, const SumParams& params);

}  // namespace sumset
