#pragma once

#include <optional>

#include "sumset/ground_set.hpp"

namespace sumset {

/// True iff A = {c, c+d, ..., c+(k-1)d} for some d != 0 (mod p for modular
/// sets). Singletons count as progressions.
bool is_arithmetic_progression(const GroundSet& a);

/// A common difference witnessing is_arithmetic_progression, if any. For
/// modular sets the smallest d in [1, p-1] is returned.
std::optional<Element> progression_difference(const GroundSet& a);

/// Translate to least element 0 and divide by the gcd of the gaps.
/// Integer sets only.
GroundSet normalize(const GroundSet& a);

}  // namespace sumset
