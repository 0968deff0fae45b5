#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumset/ground_set.hpp"
#include "sumset/sumset.hpp"

namespace sumset {

/// Repetition counts (r_1, ..., r_k) with 0 <= r_i <= cap and sum r_i = total.
class MultiplicityVector {
 public:
  /// Throws DomainError if a count is negative or exceeds `cap`.
  MultiplicityVector(std::vector<std::int64_t> counts, std::int64_t cap);

  std::span<const std::int64_t> counts() const noexcept { return counts_; }
  std::int64_t cap() const noexcept { return cap_; }
  std::int64_t total() const noexcept { return total_; }
  std::size_t size() const noexcept { return counts_.size(); }

  /// sum_i r_i a_i, reduced mod p for modular sets.
  Element evaluate(const GroundSet& a) const;

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t cap_;
  std::int64_t total_;
};

/// Every multiplicity vector of length k with entries in [0, cap] summing to
/// `total`, in lexicographic order.
std::vector<MultiplicityVector> enumerate_multiplicity_vectors(std::size_t k, std::int64_t cap,
                                                               std::int64_t total);

/// State of one greedy step j (1-based).
struct DecompositionStep {
  std::int64_t step;
  std::vector<std::int64_t> counts_before;    // r_i^(j-1)
  std::vector<std::size_t> chosen;            // 0-based indices, ascending
  std::vector<std::int64_t> counts_after;     // r_i^(j)
  std::int64_t positive_before;               // |{i : r_i^(j-1) >= 1}|, must be >= m
  std::int64_t max_after;                     // max_i r_i^(j), must be <= r - j
};

/// x = x_1 + ... + x_r with each x_j a sum of m distinct elements of A.
struct Decomposition {
  std::int64_t m = 0;
  std::int64_t r = 0;
  std::vector<std::vector<std::size_t>> parts;  // 0-based indices into A
  std::vector<Element> part_sums;
  Element total = 0;
  std::vector<DecompositionStep> trace;
};

/// Rewrites the element sum_i r_i a_i of h^(r)A, h = m*r, as a sum of r
/// elements of m^A. At step j the m indices with the largest remaining counts
/// are taken (ties: lowest index) and decremented. Before each step at least
/// m counts must be positive, and afterwards every count must be <= r - j;
/// either failing throws InvariantViolation.
///
/// Throws DomainError if the total is not a multiple of the cap, if the
/// vector does not match A, or if h > r*k.
Decomposition greedy_decompose(const GroundSet& a, const MultiplicityVector& mult);

struct Lemma1Report {
  std::int64_t m = 0;
  std::int64_t r = 0;
  std::size_t generalized_cardinality = 0;  // |(mr)^(r) A|
  std::size_t iterated_cardinality = 0;     // |r (m^A)|
  bool equal = false;
  std::vector<Element> symmetric_difference;
};

/// Compares (mr)^(r)A with the r-fold sumset of m^A. Requires 1 <= m <= k.
Lemma1Report verify_lemma1(const GroundSet& a, std::int64_t m, std::int64_t r);

}  // namespace sumset
