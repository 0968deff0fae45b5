#include "sumset/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sumset/errors.hpp"

namespace sumset {

MultiplicityVector::MultiplicityVector(std::vector<std::int64_t> counts, std::int64_t cap)
    : counts_(std::move(counts)), cap_(cap), total_(0) {
  if (cap_ < 1) throw DomainError("r >= 1 violated for multiplicity cap");
  for (auto c : counts_) {
    if (c < 0 || c > cap_) {
      throw DomainError("0 <= r_i <= r violated (r_i = " + std::to_string(c) +
                        ", r = " + std::to_string(cap_) + ")");
    }
    total_ += c;
  }
}

Element MultiplicityVector::evaluate(const GroundSet& a) const {
  if (a.size() != counts_.size())
    throw DomainError("multiplicity vector length does not match k");
  __int128 sum = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) sum += static_cast<__int128>(counts_[i]) * a[i];
  if (a.modulus()) {
    const auto p = static_cast<__int128>(*a.modulus());
    sum %= p;
    if (sum < 0) sum += p;
  }
  return static_cast<Element>(sum);
}

std::vector<MultiplicityVector> enumerate_multiplicity_vectors(std::size_t k, std::int64_t cap,
                                                               std::int64_t total) {
  std::vector<MultiplicityVector> out;
  std::vector<std::int64_t> counts(k, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == k) {
      if (left <= cap) {
        counts[i] = left;
        out.emplace_back(counts, cap);
      }
      return;
    }
    const auto room = cap * static_cast<std::int64_t>(k - i - 1);
    for (std::int64_t c = std::max<std::int64_t>(0, left - room); c <= std::min(cap, left); ++c) {
      counts[i] = c;
      self(self, i + 1, left - c);
    }
  };
  if (k > 0 && total >= 0) rec(rec, 0, total);
  return out;
}

Decomposition greedy_decompose(const GroundSet& a, const MultiplicityVector& mult) {
  const auto k = a.size();
  if (mult.size() != k) {
    throw DomainError("multiplicity vector has " + std::to_string(mult.size()) +
                      " entries but k = " + std::to_string(k));
  }
  const auto r = mult.cap();
  const auto h = mult.total();
  if (h < 1) throw DomainError("h >= 1 violated (counts sum to 0)");
  if (h % r != 0) {
    throw DomainError("h = m*r violated (h = " + std::to_string(h) + ", r = " +
                      std::to_string(r) + "); only eps = 0 is decomposable");
  }
  require_nonempty_sumset(k, SumParams(h, r));

  Decomposition d;
  d.m = h / r;
  d.r = r;
  d.total = mult.evaluate(a);

  std::vector<std::int64_t> counts(mult.counts().begin(), mult.counts().end());
  std::vector<std::size_t> order(k);
  for (std::int64_t j = 1; j <= r; ++j) {
    DecompositionStep step;
    step.step = j;
    step.counts_before = counts;
    step.positive_before = std::count_if(counts.begin(), counts.end(), [](auto c) { return c >= 1; });
    if (step.positive_before < d.m) {
      throw InvariantViolation("step " + std::to_string(j) + ": only " +
                               std::to_string(step.positive_before) +
                               " positive counts remain, need m = " + std::to_string(d.m));
    }

    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return counts[x] > counts[y]; });
    step.chosen.assign(order.begin(), order.begin() + d.m);
    std::sort(step.chosen.begin(), step.chosen.end());

    __int128 part_sum = 0;
    for (auto i : step.chosen) {
      --counts[i];
      part_sum += a[i];
    }
    if (a.modulus()) part_sum %= static_cast<__int128>(*a.modulus());

    step.counts_after = counts;
    step.max_after = *std::max_element(counts.begin(), counts.end());
    if (step.max_after > r - j) {
      throw InvariantViolation("step " + std::to_string(j) + ": max remaining count " +
                               std::to_string(step.max_after) + " exceeds r - j = " +
                               std::to_string(r - j));
    }
    d.parts.push_back(step.chosen);
    d.part_sums.push_back(static_cast<Element>(part_sum));
    d.trace.push_back(std::move(step));
  }
  return d;
}

Lemma1Report verify_lemma1(const GroundSet& a, std::int64_t m, std::int64_t r) {
  if (m < 1 || static_cast<std::size_t>(m) > a.size()) {
    throw DomainError("1 <= m <= k violated (m = " + std::to_string(m) +
                      ", k = " + std::to_string(a.size()) + ")");
  }
  const SumParams params(m * r, r);
  const SumsetResult direct = generalized_sumset(a, params);
  const SumsetResult iterated = classical_sumset(restricted_sumset(a, m).as_ground_set(), r);

  Lemma1Report rep;
  rep.m = m;
  rep.r = r;
  rep.generalized_cardinality = direct.cardinality();
  rep.iterated_cardinality = iterated.cardinality();
  std::set_symmetric_difference(direct.values().begin(), direct.values().end(),
                                iterated.values().begin(), iterated.values().end(),
                                std::back_inserter(rep.symmetric_difference));
  rep.equal = rep.symmetric_difference.empty();
  return rep;
}

}  // namespace sumset
