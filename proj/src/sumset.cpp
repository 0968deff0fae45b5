#include "sumset/sumset.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sumset/errors.hpp"

namespace sumset {
namespace {

using u64 = std::uint64_t;

// Upper bound on (h + 1) * width bits held by the integer dynamic program.
constexpr u64 kMaxDpBits = u64{1} << 33;

// Fixed-width bit-vector with the two shift-or primitives the DP needs.
class BitRow {
 public:
  explicit BitRow(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= u64{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](u64 w) { return w == 0; });
  }

  // *this |= (src << shift), truncated to nbits.
  void or_shifted_left(const BitRow& src, std::size_t shift) {
    const std::size_t n = words_.size();
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    if (ws >= n) return;
    for (std::size_t i = n; i-- > ws;) {
      const std::size_t j = i - ws;
      u64 w = src.words_[j] << bs;
      if (bs && j > 0) w |= src.words_[j - 1] >> (64 - bs);
      words_[i] |= w;
    }
    trim();
  }

  // *this |= (src >> shift).
  void or_shifted_right(const BitRow& src, std::size_t shift) {
    const std::size_t n = words_.size();
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    for (std::size_t i = 0; i + ws < n; ++i) {
      const std::size_t j = i + ws;
      u64 w = src.words_[j] >> bs;
      if (bs && j + 1 < n) w |= src.words_[j + 1] << (64 - bs);
      words_[i] |= w;
    }
  }

  // *this |= rotate_left(src, shift) over a cycle of nbits positions.
  void or_rotated(const BitRow& src, std::size_t shift) {
    shift %= nbits_;
    if (shift == 0) {
      or_shifted_left(src, 0);
      return;
    }
    or_shifted_left(src, shift);
    or_shifted_right(src, nbits_ - shift);
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      u64 bits = words_[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void trim() {
    if (const unsigned rem = nbits_ % 64; rem != 0) words_.back() &= (u64{1} << rem) - 1;
  }

  std::size_t nbits_;
  std::vector<u64> words_;
};

// Runs the multiplicity DP over per-element shifts. `step(row, src, c)` ORs
// src shifted by c copies of the current element into row.
template <typename Step>
BitRow run_dp(std::size_t k, std::int64_t h, std::int64_t r, std::size_t nbits, Step&& step) {
  std::vector<BitRow> dp(static_cast<std::size_t>(h) + 1, BitRow(nbits));
  dp[0].set(0);
  std::int64_t reach = 0;  // largest total multiplicity attainable so far
  for (std::size_t i = 0; i < k; ++i) {
    reach = std::min(h, reach + r);
    for (std::int64_t t = reach; t >= 1; --t) {
      const std::int64_t cmax = std::min(r, t);
      for (std::int64_t c = 1; c <= cmax; ++c) step(i, dp[t], dp[t - c], c);
    }
  }
  return std::move(dp[h]);
}

}  // namespace

SumsetResult::SumsetResult(std::vector<Element> values, std::optional<u64> modulus)
    : values_(std::move(values)), modulus_(modulus) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

std::optional<Element> SumsetResult::min_value() const {
  if (modulus_ || values_.empty()) return std::nullopt;
  return values_.front();
}

std::optional<Element> SumsetResult::max_value() const {
  if (modulus_ || values_.empty()) return std::nullopt;
  return values_.back();
}

bool SumsetResult::contains(Element x) const {
  return std::binary_search(values_.begin(), values_.end(), x);
}

bool SumsetResult::includes(const SumsetResult& other) const {
  return std::includes(values_.begin(), values_.end(), other.values_.begin(),
                       other.values_.end());
}

GroundSet SumsetResult::as_ground_set() const { return GroundSet(values_, modulus_); }

void require_nonempty_sumset(std::size_t k, const SumParams& params) {
  const __int128 cap = static_cast<__int128>(params.r()) * static_cast<__int128>(k);
  if (params.h() > cap) {
    throw DomainError("h <= r*k violated (h = " + std::to_string(params.h()) +
                      ", r = " + std::to_string(params.r()) + ", k = " + std::to_string(k) +
                      "); the generalized sumset is empty");
  }
}

SumsetResult generalized_sumset(const GroundSet& a, const SumParams& params) {
  require_nonempty_sumset(a.size(), params);
  const auto h = params.h();
  const auto r = params.r();
  const auto k = a.size();

  if (a.modulus()) {
    const u64 p = *a.modulus();
    if (p > kMaxDpBits)
      throw ResourceCapExceeded("modulus too large for the bit-vector DP", p, kMaxDpBits);
    std::vector<u64> residues(a.elements().begin(), a.elements().end());
    BitRow row = run_dp(k, h, r, p, [&](std::size_t i, BitRow& dst, const BitRow& src,
                                        std::int64_t c) {
      const u64 shift = static_cast<u64>((static_cast<unsigned __int128>(c) * residues[i]) % p);
      dst.or_rotated(src, shift);
    });
    std::vector<Element> values;
    row.for_each_set([&](std::size_t s) { values.push_back(static_cast<Element>(s)); });
    return SumsetResult(std::move(values), p);
  }

  // h * max|a_i| must fit in a signed 64-bit sum.
  const __int128 extreme = std::max<__int128>(-static_cast<__int128>(a.min()), a.max());
  if (extreme * h > INT64_MAX)
    throw DomainError("h * max|a_i| overflows 64-bit integers");

  const __int128 width = static_cast<__int128>(a.max() - static_cast<__int128>(a.min())) * h + 1;
  if (width * (h + 1) > static_cast<__int128>(kMaxDpBits)) {
    throw ResourceCapExceeded("integer sum range too wide for the bit-vector DP",
                              static_cast<u64>(std::min<__int128>(width * (h + 1), UINT64_MAX)),
                              kMaxDpBits);
  }
  const Element base = a.min();
  std::vector<u64> offsets;
  offsets.reserve(k);
  for (Element x : a.elements()) offsets.push_back(static_cast<u64>(x - base));

  BitRow row = run_dp(k, h, r, static_cast<std::size_t>(width),
                      [&](std::size_t i, BitRow& dst, const BitRow& src, std::int64_t c) {
                        dst.or_shifted_left(src, static_cast<std::size_t>(c) * offsets[i]);
                      });
  std::vector<Element> values;
  const Element origin = base * h;
  row.for_each_set([&](std::size_t s) { values.push_back(origin + static_cast<Element>(s)); });
  return SumsetResult(std::move(values), std::nullopt);
}

SumsetResult classical_sumset(const GroundSet& a, std::int64_t h) {
  return generalized_sumset(a, SumParams(h, h));
}

SumsetResult restricted_sumset(const GroundSet& a, std::int64_t h) {
  if (h >= 1 && static_cast<std::size_t>(h) > a.size()) {
    throw DomainError("h <= k violated for the restricted sumset (h = " + std::to_string(h) +
                      ", k = " + std::to_string(a.size()) + ")");
  }
  return generalized_sumset(a, SumParams(h, 1));
}

SumsetResult set_sum(const SumsetResult& a, const SumsetResult& b) {
  if (a.modulus() != b.modulus()) throw DomainError("cannot add sets from different groups");
  std::vector<Element> out;
  out.reserve(a.cardinality() * b.cardinality());
  for (Element x : a.values()) {
    for (Element y : b.values()) {
      if (a.modulus()) {
        const auto p = static_cast<__int128>(*a.modulus());
        out.push_back(static_cast<Element>((static_cast<__int128>(x) + y) % p));
      } else {
        Element s;
        if (__builtin_add_overflow(x, y, &s)) throw DomainError("set sum overflows 64-bit integers");
        out.push_back(s);
      }
    }
  }
  return SumsetResult(std::move(out), a.modulus());
}

Extremes extremes_closed_form(const GroundSet& a, const SumParams& params) {
  if (a.is_modular()) throw DomainError("extremes are only defined for integer sets");
  require_nonempty_sumset(a.size(), params);
  const auto k = static_cast<std::int64_t>(a.size());
  const auto m = params.m();
  const auto r = params.r();
  const auto eps = params.epsilon();
  Element lo = 0, hi = 0;
  for (std::int64_t i = 0; i < m; ++i) {
    lo += r * a[i];
    hi += r * a[k - 1 - i];
  }
  if (eps > 0) {
    lo += eps * a[m];
    hi += eps * a[k - 1 - m];
  }
  return {lo, hi};
}

}  // namespace sumset
