#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumset/ground_set.hpp"

namespace sumset {

struct ScanOptions {
  std::uint64_t cap = 100'000'000;  // max candidates per scan
  unsigned jobs = 0;                // 0: hardware concurrency
  bool normalize = true;            // mod-p scans: only sets containing 0
};

/// Result of an exhaustive search for sets attaining a lower bound.
struct ScanReport {
  std::string kind;  // "extremal" or "inverse-eh"
  std::size_t k = 0;
  std::int64_t h = 0;
  std::int64_t r = 0;
  std::int64_t max_diameter = 0;  // extremal scans
  std::uint64_t p = 0;            // modular scans
  bool within_hypothesis = false;
  std::int64_t target = 0;        // the bound value equality is tested against
  std::uint64_t candidates = 0;   // sets actually evaluated
  std::vector<GroundSet> equality_sets;
  std::vector<bool> ap_verdicts;
  std::vector<GroundSet> counterexamples;   // equality sets that are not APs
  std::vector<GroundSet> bound_violations;  // cardinality below target

  /// Counterexamples only count inside the hypothesis range; bound
  /// violations always count.
  bool failed() const;
};

/// All normalized integer sets 0 = a_1 < ... < a_k <= max_diameter with gap
/// gcd 1, collecting those where |h^(r)A| equals the direct bound. Inside
/// k >= 5, 2 <= r <= h <= rk - 2 every such set must be {0, ..., k-1}.
///
/// Throws DomainError if h > rk, ResourceCapExceeded if C(max_diameter, k-1)
/// exceeds options.cap.
ScanReport scan_extremal_integers(std::size_t k, std::int64_t h, std::int64_t r,
                                  std::int64_t max_diameter, const ScanOptions& options = {});

/// All k-subsets A of Z/pZ (containing 0 when options.normalize), collecting
/// those with |h^A| = min(p, hk - h^2 + 1). For h = 2, k >= 5, p > 2k - 3
/// each must be an arithmetic progression; other h are exploratory.
ScanReport scan_inverse_eh_mod_p(std::uint64_t p, std::size_t k, std::int64_t h = 2,
                                 const ScanOptions& options = {});

/// C(n, k) saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace sumset
