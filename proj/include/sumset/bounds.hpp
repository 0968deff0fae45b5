#pragma once

#include <cstdint>

#include "sumset/ground_set.hpp"

namespace sumset {

// Lower bounds on sumset cardinalities. Each function throws DomainError
// naming the violated hypothesis when called outside its range.

/// |h^(r)A| >= hk - m^2 r + 1 - 2m*eps - eps for integer A, 1 <= h <= rk.
std::int64_t bound_direct_integers(const SumParams& params, std::int64_t k);

/// min(p, bound_direct_integers) for A in Z/pZ; needs 1 <= r <= h <= rk and k <= p.
std::int64_t bound_direct_mod_p(const SumParams& params, std::int64_t k, std::uint64_t p);

/// |hA| >= hk - h + 1 for integer A.
std::int64_t bound_sumset_integers(std::int64_t h, std::int64_t k);

/// |h^A| >= hk - h^2 + 1 for integer A, 1 <= h <= k.
///
/// Commonly quoted with "=", but it is an inequality: {0,1,3} has
/// |2^A| = 3 while 2k - 4 + 1 = 3, and {0,1,3,7} has 6 > 5.
std::int64_t bound_restricted_integers(std::int64_t h, std::int64_t k);

/// Cauchy-Davenport: |hA| >= min(p, hk - h + 1) in Z/pZ, 1 <= k <= p.
std::int64_t bound_cauchy_davenport(std::int64_t h, std::int64_t k, std::uint64_t p);

/// Erdos-Heilbronn: |h^A| >= min(p, hk - h^2 + 1) in Z/pZ, 1 <= h <= k <= p.
std::int64_t bound_erdos_heilbronn(std::int64_t h, std::int64_t k, std::uint64_t p);

}  // namespace sumset
