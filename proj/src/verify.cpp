#include "sumset/verify.hpp"

#include <algorithm>

#include "sumset/bounds.hpp"
#include "sumset/errors.hpp"

namespace sumset {
namespace {

// h^(r)A with the convention 0^(r)A = {0}.
SumsetResult sumset_or_zero(const GroundSet& a, std::int64_t h, std::int64_t r) {
  if (h == 0) return SumsetResult({0}, a.modulus());
  return generalized_sumset(a, SumParams(h, r));
}

// j (m^A), with m = 0 or j = 0 giving {0}.
SumsetResult iterated_restricted(const GroundSet& a, std::int64_t j, std::int64_t m) {
  if (j == 0 || m == 0) return SumsetResult({0}, a.modulus());
  return classical_sumset(restricted_sumset(a, m).as_ground_set(), j);
}

InclusionCheck compare(std::string name, const SumsetResult& subset, const SumsetResult& whole) {
  InclusionCheck c;
  c.name = std::move(name);
  c.subset_cardinality = subset.cardinality();
  std::set_difference(subset.values().begin(), subset.values().end(), whole.values().begin(),
                      whole.values().end(), std::back_inserter(c.missing));
  c.status = c.missing.empty() ? CheckStatus::kPassed : CheckStatus::kFailed;
  if (!c.missing.empty()) c.note = std::to_string(c.missing.size()) + " elements missing";
  return c;
}

GroundSet reflect(const GroundSet& a) {
  std::vector<Element> neg;
  neg.reserve(a.size());
  for (Element x : a.elements()) neg.push_back(-x);
  return GroundSet(std::move(neg));
}

Element prefix_sum(const GroundSet& a, std::int64_t count) {
  Element s = 0;
  for (std::int64_t i = 0; i < count; ++i) s += a[i];
  return s;
}

// Shared tail of the S and T checks: `family` holds every generated element,
// `chain` the displayed increasing chain whose last entry is min B.
void finish_family(WitnessFamilyCheck& f, const SumsetResult& hs, Element lo, Element min_b,
                   const std::vector<Element>& family, std::vector<Element> chain,
                   std::size_t required) {
  f.required_gap_count = required;
  for (Element x : family) f.all_members = f.all_members && hs.contains(x);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0 && chain[i] <= chain[i - 1]) f.strictly_increasing = false;
    if (i + 1 < chain.size() && (chain[i] < lo || chain[i] > min_b - 1)) f.interval_ok = false;
  }
  f.gap_count = static_cast<std::size_t>(
      std::count_if(hs.values().begin(), hs.values().end(),
                    [&](Element v) { return v >= lo && v <= min_b - 1; }));
  f.witnesses = std::move(chain);
  const bool ok = f.all_members && f.strictly_increasing && f.interval_ok &&
                  f.gap_count >= f.required_gap_count;
  f.status = ok ? CheckStatus::kPassed : CheckStatus::kFailed;
  if (!ok) f.note = "witness membership, ordering, or interval count failed";
}

// S_{x,y} = r(a_1+..+a_m) + (a_{m+1}+..+a_{m+x}) + y a_{m+x} + (eps-x-y) a_{m+x+1}
// for x in [1, eps-1], y in [0, eps-x]. Requires m + eps <= k.
WitnessFamilyCheck s_family(const GroundSet& a, const SumParams& params, const SumsetResult& hs) {
  const auto m = params.m(), r = params.r(), eps = params.epsilon();
  WitnessFamilyCheck f;
  f.family = "S";
  f.side = "low";
  f.sumset_h = params.h();
  const Element base = r * prefix_sum(a, m);
  const Element lo = base + eps * a[m];
  Element min_b = base;
  for (std::int64_t i = m; i < m + eps; ++i) min_b += a[i];

  auto s_value = [&](std::int64_t x, std::int64_t y) {
    Element v = base;
    for (std::int64_t i = 1; i <= x; ++i) v += a[m + i - 1];
    v += y * a[m + x - 1];
    if (eps - x - y > 0) v += (eps - x - y) * a[m + x];
    return v;
  };

  std::vector<Element> family, chain;
  for (std::int64_t x = 1; x <= eps - 1; ++x) {
    for (std::int64_t y = 0; y <= eps - x; ++y) family.push_back(s_value(x, y));
    // For x >= 2, S_{x, eps-x} coincides with S_{x-1, 0} and is not repeated.
    const std::int64_t top = x == 1 ? eps - 1 : eps - x - 1;
    for (std::int64_t y = top; y >= 0; --y) chain.push_back(s_value(x, y));
  }
  finish_family(f, hs, lo, min_b, family, std::move(chain),
                static_cast<std::size_t>((eps * eps - eps) / 2));
  return f;
}

// T_{x,y} = (r-1)(a_1+..+a_m) + eps a_{m+1} + sum_{i=x..m, i!=y} a_i + x a_{m+1}
// for x in [1, m], y in [x, m]. Requires r - 1 > m + eps > k.
WitnessFamilyCheck t_family(const GroundSet& a, const SumParams& params, const SumsetResult& hs) {
  const auto m = params.m(), r = params.r(), eps = params.epsilon();
  WitnessFamilyCheck f;
  f.family = "T";
  f.side = "low";
  f.sumset_h = params.h();
  const Element base = (r - 1) * prefix_sum(a, m) + eps * a[m];
  const Element lo = r * prefix_sum(a, m) + eps * a[m];
  const Element min_b = (r - 1) * prefix_sum(a, m) + (m + eps) * a[m];

  std::vector<Element> chain{lo};
  for (std::int64_t x = 1; x <= m; ++x) {
    for (std::int64_t y = m; y >= x; --y) {
      Element v = base + x * a[m];
      for (std::int64_t i = x; i <= m; ++i)
        if (i != y) v += a[i - 1];
      chain.push_back(v);
    }
  }
  const std::vector<Element> family(chain.begin() + 1, chain.end());
  finish_family(f, hs, lo, min_b, family, chain, static_cast<std::size_t>((m * m + m) / 2));
  if (m == 0) {
    f.note = "m = 0: family is empty";
  }
  return f;
}

WitnessFamilyCheck mirrored(WitnessFamilyCheck f) {
  f.side = "high";
  for (Element& w : f.witnesses) w = -w;
  return f;
}

// B = (r-1)(m^A) + (m+eps)^A and the S family on both ends.
void case1(const GroundSet& a, const SumParams& params, WitnessReport& rep) {
  const auto m = params.m(), r = params.r(), eps = params.epsilon();
  const SumsetResult hs = generalized_sumset(a, params);
  const SumsetResult b = set_sum(iterated_restricted(a, r - 1, m), restricted_sumset(a, m + eps));
  rep.b_inclusion = compare("(r-1)(m^A) + (m+eps)^A", b, hs);

  rep.families.push_back(s_family(a, params, hs));
  const GroundSet neg = reflect(a);
  rep.families.push_back(mirrored(s_family(neg, params, generalized_sumset(neg, params))));
}

// B = (m+eps)((m+1)^A) + (r-1-m-eps)(m^A) and the T family on both ends.
void case2_direct(const GroundSet& a, const SumParams& params, WitnessReport& rep) {
  const auto m = params.m(), r = params.r(), eps = params.epsilon();
  const SumsetResult hs = generalized_sumset(a, params);
  const SumsetResult b =
      set_sum(iterated_restricted(a, m + eps, m + 1), iterated_restricted(a, r - 1 - m - eps, m));
  rep.b_inclusion = compare("(m+eps)((m+1)^A) + (r-1-m-eps)(m^A)", b, hs);

  rep.families.push_back(t_family(a, params, hs));
  const GroundSet neg = reflect(a);
  rep.families.push_back(mirrored(t_family(neg, params, generalized_sumset(neg, params))));
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kDirectIntegers: return "direct";
    case BoundKind::kDirectModP: return "direct-mod-p";
    case BoundKind::kSumsetIntegers: return "sumset";
    case BoundKind::kRestrictedIntegers: return "restricted";
    case BoundKind::kCauchyDavenport: return "cauchy-davenport";
    case BoundKind::kErdosHeilbronn: return "erdos-heilbronn";
  }
  return "unknown";
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPassed: return "passed";
    case CheckStatus::kFailed: return "failed";
    case CheckStatus::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

BoundReport check_direct_bound(const GroundSet& a, const SumParams& params) {
  const auto k = static_cast<std::int64_t>(a.size());
  const bool modular = a.is_modular();
  const std::int64_t bound = modular ? bound_direct_mod_p(params, k, *a.modulus())
                                     : bound_direct_integers(params, k);
  const auto card = static_cast<std::int64_t>(generalized_sumset(a, params).cardinality());
  return {modular ? BoundKind::kDirectModP : BoundKind::kDirectIntegers,
          a, params.h(), params.r(), card, bound};
}

BoundReport check_sumset_bound(const GroundSet& a, std::int64_t h) {
  const auto k = static_cast<std::int64_t>(a.size());
  const bool modular = a.is_modular();
  const std::int64_t bound =
      modular ? bound_cauchy_davenport(h, k, *a.modulus()) : bound_sumset_integers(h, k);
  const auto card = static_cast<std::int64_t>(classical_sumset(a, h).cardinality());
  return {modular ? BoundKind::kCauchyDavenport : BoundKind::kSumsetIntegers, a, h, h, card, bound};
}

BoundReport check_restricted_bound(const GroundSet& a, std::int64_t h) {
  const auto k = static_cast<std::int64_t>(a.size());
  const bool modular = a.is_modular();
  const std::int64_t bound =
      modular ? bound_erdos_heilbronn(h, k, *a.modulus()) : bound_restricted_integers(h, k);
  const auto card = static_cast<std::int64_t>(restricted_sumset(a, h).cardinality());
  return {modular ? BoundKind::kErdosHeilbronn : BoundKind::kRestrictedIntegers, a, h, 1, card,
          bound};
}

ComplementReport check_complement_identity(const GroundSet& a, const SumParams& params) {
  const auto rk = params.r() * static_cast<std::int64_t>(a.size());
  if (params.h() > rk - 1) {
    throw DomainError("1 <= h <= r*k - 1 violated (h = " + std::to_string(params.h()) +
                      ", r*k = " + std::to_string(rk) + ")");
  }
  const SumParams other(rk - params.h(), params.r());
  return {params, other.h(), generalized_sumset(a, params).cardinality(),
          generalized_sumset(a, other).cardinality()};
}

InclusionCheck check_prefix_inclusion(const GroundSet& a, const SumParams& params) {
  const auto h = params.h(), r = params.r(), m = params.m();
  const auto k = static_cast<std::int64_t>(a.size());
  InclusionCheck c;
  c.name = "(m+1)^A + (h-m-1)^(r-1)A";
  if (params.epsilon() < 1) {
    c.note = "needs eps >= 1";
    return c;
  }
  if (k < m + 1) {
    c.note = "needs k >= m+1";
    return c;
  }
  if (h - m - 1 > (r - 1) * k) {
    c.note = "needs h-m-1 <= (r-1)k";
    return c;
  }
  const SumsetResult lhs = set_sum(restricted_sumset(a, m + 1), sumset_or_zero(a, h - m - 1, r - 1));
  return compare(c.name, lhs, generalized_sumset(a, params));
}

bool WitnessReport::failed() const {
  if (prefix_inclusion.status == CheckStatus::kFailed) return true;
  if (b_inclusion.status == CheckStatus::kFailed) return true;
  if (complement && !complement->holds()) return true;
  return std::any_of(families.begin(), families.end(),
                     [](const auto& f) { return f.status == CheckStatus::kFailed; });
}

WitnessReport check_inclusions_and_witnesses(const GroundSet& a, const SumParams& params) {
  if (a.is_modular()) throw DomainError("witness checks are defined for integer sets only");
  require_nonempty_sumset(a.size(), params);

  WitnessReport rep{params, "", {}, {}, std::nullopt, {}};
  rep.b_inclusion.name = "B";
  const auto m = params.m(), r = params.r(), eps = params.epsilon();
  const auto k = static_cast<std::int64_t>(a.size());

  rep.prefix_inclusion = check_prefix_inclusion(a, params);
  if (eps == 0) {
    rep.proof_case = "eps=0";
    rep.b_inclusion.note = "eps = 0 is handled by the m^A decomposition";
    return rep;
  }

  if (m + eps <= k) {
    rep.proof_case = "case1";
    case1(a, params, rep);
  } else if (r - 1 <= m + eps) {
    // |h^(r)A| = |(rk-h)^(r)A| and rk - h = r(k-m-1) + (r-eps) falls in case 1.
    rep.proof_case = "case2-complement";
    rep.complement = check_complement_identity(a, params);
    const SumParams mirror(r * k - params.h(), r);
    if (mirror.m() + mirror.epsilon() > k)
      throw InvariantViolation("complement parameters do not satisfy m + eps <= k");
    case1(a, mirror, rep);
  } else {
    rep.proof_case = "case2-direct";
    case2_direct(a, params, rep);
  }
  return rep;
}

}  // namespace sumset
