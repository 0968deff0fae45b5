#include "sumset/bounds.hpp"

#include <algorithm>
#include <string>

#include "sumset/errors.hpp"

namespace sumset {
namespace {

void require(bool ok, const std::string& inequality) {
  if (!ok) throw DomainError(inequality + " violated");
}

void require_prime_and_k(std::int64_t k, std::uint64_t p) {
  require(is_prime(p), "p prime (p = " + std::to_string(p) + ")");
  require(k >= 1 && static_cast<std::uint64_t>(k) <= p,
          "1 <= k <= p (k = " + std::to_string(k) + ", p = " + std::to_string(p) + ")");
}

std::int64_t cap_at(std::uint64_t p, std::int64_t value) {
  return value >= 0 && static_cast<std::uint64_t>(value) > p ? static_cast<std::int64_t>(p) : value;
}

}  // namespace

std::int64_t bound_direct_integers(const SumParams& params, std::int64_t k) {
  const auto h = params.h(), r = params.r(), m = params.m(), eps = params.epsilon();
  require(k >= 1, "k >= 1");
  require(h <= r * k, "1 <= h <= r*k (h = " + std::to_string(h) + ", r*k = " +
                          std::to_string(r * k) + ")");
  return h * k - m * m * r + 1 - 2 * m * eps - eps;
}

std::int64_t bound_direct_mod_p(const SumParams& params, std::int64_t k, std::uint64_t p) {
  require_prime_and_k(k, p);
  require(params.r() <= params.h(), "1 <= r <= h (r = " + std::to_string(params.r()) +
                                        ", h = " + std::to_string(params.h()) + ")");
  return cap_at(p, bound_direct_integers(params, k));
}

std::int64_t bound_sumset_integers(std::int64_t h, std::int64_t k) {
  require(h >= 1, "h >= 1");
  require(k >= 1, "k >= 1");
  return h * k - h + 1;
}

std::int64_t bound_restricted_integers(std::int64_t h, std::int64_t k) {
  require(h >= 1 && h <= k,
          "1 <= h <= k (h = " + std::to_string(h) + ", k = " + std::to_string(k) + ")");
  return h * k - h * h + 1;
}

std::int64_t bound_cauchy_davenport(std::int64_t h, std::int64_t k, std::uint64_t p) {
  require(h >= 1, "h >= 1");
  require_prime_and_k(k, p);
  return cap_at(p, h * k - h + 1);
}

std::int64_t bound_erdos_heilbronn(std::int64_t h, std::int64_t k, std::uint64_t p) {
  require_prime_and_k(k, p);
  require(h >= 1 && h <= k,
          "1 <= h <= k (h = " + std::to_string(h) + ", k = " + std::to_string(k) + ")");
  return cap_at(p, h * k - h * h + 1);
}

}  // namespace sumset
