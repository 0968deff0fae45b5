#include "sumset/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

#include "sumset/bounds.hpp"
#include "sumset/errors.hpp"
#include "sumset/progression.hpp"
#include "sumset/sumset.hpp"

namespace sumset {
namespace {

struct ChunkResult {
  std::uint64_t candidates = 0;
  std::vector<GroundSet> equality;
  std::vector<GroundSet> violations;
};

// Calls f on every extension of `cur` by `remaining` increasing values in
// [lo, hi].
template <typename F>
void for_each_extension(std::vector<Element>& cur, Element lo, Element hi, std::size_t remaining,
                        F&& f) {
  if (remaining == 0) {
    f(cur);
    return;
  }
  for (Element v = lo; v + static_cast<Element>(remaining) - 1 <= hi; ++v) {
    cur.push_back(v);
    for_each_extension(cur, v + 1, hi, remaining - 1, f);
    cur.pop_back();
  }
}

// Evaluates chunks [0, n) on a thread pool; results are indexed by chunk so
// the merged output does not depend on scheduling.
template <typename Chunk>
std::vector<ChunkResult> run_chunks(std::size_t n, unsigned jobs, Chunk&& chunk) {
  std::vector<ChunkResult> results(n);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i; !failed && (i = next++) < n;) {
      try {
        results[i] = chunk(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

void merge(ScanReport& rep, std::vector<ChunkResult>&& chunks) {
  for (auto& c : chunks) {
    rep.candidates += c.candidates;
    for (auto& s : c.equality) rep.equality_sets.push_back(std::move(s));
    for (auto& s : c.violations) rep.bound_violations.push_back(std::move(s));
  }
  for (const auto& s : rep.equality_sets) {
    const bool ap = is_arithmetic_progression(s);
    rep.ap_verdicts.push_back(ap);
    if (!ap) rep.counterexamples.push_back(s);
  }
}

void check_cap(std::uint64_t count, const ScanOptions& options) {
  if (count > options.cap) {
    throw ResourceCapExceeded("scan would enumerate " + std::to_string(count) +
                                  " candidates, above the cap of " + std::to_string(options.cap),
                              count, options.cap);
  }
}

}  // namespace

bool ScanReport::failed() const {
  return !bound_violations.empty() || (within_hypothesis && !counterexamples.empty());
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(c);
}

ScanReport scan_extremal_integers(std::size_t k, std::int64_t h, std::int64_t r,
                                  std::int64_t max_diameter, const ScanOptions& options) {
  const SumParams params(h, r);
  if (k < 1) throw DomainError("k >= 1 violated");
  if (max_diameter < 0) throw DomainError("max_diameter >= 0 violated");
  const auto kk = static_cast<std::int64_t>(k);
  const std::int64_t target = bound_direct_integers(params, kk);

  ScanReport rep;
  rep.kind = "extremal";
  rep.k = k;
  rep.h = h;
  rep.r = r;
  rep.max_diameter = max_diameter;
  rep.target = target;
  rep.within_hypothesis = kk >= 5 && r >= 2 && r <= h && h <= r * kk - 2;
  check_cap(binomial(static_cast<std::uint64_t>(max_diameter), k - 1), options);

  auto evaluate = [&](const std::vector<Element>& elems, ChunkResult& out) {
    Element g = 0;
    for (Element x : elems) g = std::gcd(g, x);
    if (k > 1 && g != 1) return;
    ++out.candidates;
    GroundSet a(elems);
    const auto card = static_cast<std::int64_t>(generalized_sumset(a, params).cardinality());
    if (card == target) out.equality.push_back(std::move(a));
    else if (card < target) out.violations.push_back(std::move(a));
  };

  if (k == 1) {
    ChunkResult single;
    evaluate({0}, single);
    std::vector<ChunkResult> chunks;
    chunks.push_back(std::move(single));
    merge(rep, std::move(chunks));
    return rep;
  }
  // Chunk i fixes a_2 = i + 1.
  const std::int64_t chunks = std::max<std::int64_t>(0, max_diameter - kk + 2);
  merge(rep, run_chunks(static_cast<std::size_t>(chunks), options.jobs, [&](std::size_t i) {
          ChunkResult out;
          std::vector<Element> cur{0, static_cast<Element>(i) + 1};
          for_each_extension(cur, cur.back() + 1, max_diameter, k - 2,
                             [&](const std::vector<Element>& e) { evaluate(e, out); });
          return out;
        }));
  return rep;
}

ScanReport scan_inverse_eh_mod_p(std::uint64_t p, std::size_t k, std::int64_t h,
                                 const ScanOptions& options) {
  if (!is_prime(p)) throw DomainError("p prime violated (p = " + std::to_string(p) + ")");
  const auto kk = static_cast<std::int64_t>(k);
  const std::int64_t target = bound_erdos_heilbronn(h, kk, p);

  ScanReport rep;
  rep.kind = "inverse-eh";
  rep.k = k;
  rep.h = h;
  rep.r = 1;
  rep.p = p;
  rep.target = target;
  rep.within_hypothesis = h == 2 && kk >= 5 && static_cast<std::int64_t>(p) > 2 * kk - 3;
  check_cap(options.normalize ? binomial(p - 1, k - 1) : binomial(p, k), options);

  const SumParams params(h, 1);
  const auto top = static_cast<Element>(p) - 1;
  auto evaluate = [&](const std::vector<Element>& elems, ChunkResult& out) {
    ++out.candidates;
    GroundSet a(elems, p);
    const auto card = static_cast<std::int64_t>(generalized_sumset(a, params).cardinality());
    if (card == target) out.equality.push_back(std::move(a));
    else if (card < target) out.violations.push_back(std::move(a));
  };

  // Chunk i fixes the least element (unnormalized) or the second-least
  // element after 0 (normalized).
  const std::size_t fixed = options.normalize ? 1 : 0;
  if (k <= fixed) {
    ChunkResult single;
    evaluate({0}, single);
    std::vector<ChunkResult> chunks;
    chunks.push_back(std::move(single));
    merge(rep, std::move(chunks));
    return rep;
  }
  const Element first = options.normalize ? 1 : 0;
  const Element last = top - static_cast<Element>(k - fixed) + 1;
  const std::size_t chunks = last >= first ? static_cast<std::size_t>(last - first + 1) : 0;
  merge(rep, run_chunks(chunks, options.jobs, [&](std::size_t i) {
          ChunkResult out;
          std::vector<Element> cur;
          if (options.normalize) cur.push_back(0);
          cur.push_back(first + static_cast<Element>(i));
          for_each_extension(cur, cur.back() + 1, top, k - fixed - 1,
                             [&](const std::vector<Element>& e) { evaluate(e, out); });
          return out;
        }));
  return rep;
}

}  // namespace sumset
