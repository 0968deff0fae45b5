#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumset/ground_set.hpp"
#include "sumset/sumset.hpp"

namespace sumset {

enum class BoundKind {
  kDirectIntegers,   // hk - m^2 r + 1 - 2m eps - eps
  kDirectModP,       // min(p, same)
  kSumsetIntegers,   // |hA| >= hk - h + 1
  kRestrictedIntegers,  // |h^A| >= hk - h^2 + 1
  kCauchyDavenport,  // |hA| >= min(p, hk - h + 1)
  kErdosHeilbronn,   // |h^A| >= min(p, hk - h^2 + 1)
};

std::string to_string(BoundKind kind);

/// One instance checked against one lower bound. slack < 0 disproves it.
struct BoundReport {
  BoundKind kind;
  GroundSet set;
  std::int64_t h;
  std::int64_t r;
  std::int64_t computed_cardinality;
  std::int64_t bound_value;

  std::int64_t slack() const { return computed_cardinality - bound_value; }
  bool equality() const { return slack() == 0; }
  bool violated() const { return slack() < 0; }
};

/// |h^(r)A| against the direct bound: the integer form for integer A
/// (needs 1 <= h <= rk), the min(p, .) form for modular A (needs
/// 1 <= r <= h <= rk). Throws DomainError naming the failed hypothesis.
BoundReport check_direct_bound(const GroundSet& a, const SumParams& params);

/// |hA| against hk - h + 1 (integers) or Cauchy-Davenport (mod p).
BoundReport check_sumset_bound(const GroundSet& a, std::int64_t h);

/// |h^A| against hk - h^2 + 1 (integers) or Erdos-Heilbronn (mod p).
BoundReport check_restricted_bound(const GroundSet& a, std::int64_t h);

struct ComplementReport {
  SumParams params;
  std::int64_t complement_h;  // rk - h
  std::size_t cardinality;
  std::size_t complement_cardinality;
  bool holds() const { return cardinality == complement_cardinality; }
};

/// |h^(r)A| versus |(rk - h)^(r)A|. Requires 1 <= h <= rk - 1.
ComplementReport check_complement_identity(const GroundSet& a, const SumParams& params);

enum class CheckStatus { kPassed, kFailed, kNotApplicable };

std::string to_string(CheckStatus status);

struct InclusionCheck {
  std::string name;
  CheckStatus status = CheckStatus::kNotApplicable;
  std::string note;                  // why not applicable, or what failed
  std::size_t subset_cardinality = 0;
  std::vector<Element> missing;      // subset elements absent from h^(r)A
};

/// One witness family (S or T) on one side (low end, or high end via the
/// reflection A -> -A).
struct WitnessFamilyCheck {
  std::string family;   // "S" or "T"
  std::string side;     // "low" or "high"
  std::int64_t sumset_h = 0;  // the h the family was built for
  CheckStatus status = CheckStatus::kNotApplicable;
  std::string note;
  std::vector<Element> witnesses;  // in the displayed chain order
  bool all_members = true;
  bool strictly_increasing = true;
  bool interval_ok = true;         // all but the last lie in [min, min B - 1]
  std::size_t gap_count = 0;       // |h^(r)A ∩ [min, min B - 1]|
  std::size_t required_gap_count = 0;
};

struct WitnessReport {
  SumParams params;
  std::string proof_case;  // "eps=0", "case1", "case2-complement", "case2-direct"
  InclusionCheck prefix_inclusion;  // (m+1)^A + (h-m-1)^(r-1)A ⊆ h^(r)A
  InclusionCheck b_inclusion;       // the case's set B ⊆ h^(r)A
  std::optional<ComplementReport> complement;
  std::vector<WitnessFamilyCheck> families;

  bool failed() const;
};

/// Checks the inclusions and witness families behind the direct bound for
/// an integer set with eps >= 1. Inapplicable pieces are reported as
/// kNotApplicable rather than thrown.
WitnessReport check_inclusions_and_witnesses(const GroundSet& a, const SumParams& params);

/// (m+1)^A + (h-m-1)^(r-1)A ⊆ h^(r)A alone; valid in any group, so modular
/// sets are accepted.
InclusionCheck check_prefix_inclusion(const GroundSet& a, const SumParams& params);

}  // namespace sumset
