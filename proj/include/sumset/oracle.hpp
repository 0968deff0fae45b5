#pragma once

#include "sumset/ground_set.hpp"
#include "sumset/sumset.hpp"

namespace sumset {

/// Reference h^(r)A by direct enumeration of every multiplicity vector.
/// Shares no code with the dynamic program; exponential in k.
SumsetResult brute_force_sumset(const GroundSet& a, const SumParams& params);

}  // namespace sumset
