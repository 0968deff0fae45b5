#include "sumset/progression.hpp"

#include <numeric>
#include <vector>

#include "sumset/errors.hpp"

namespace sumset {

std::optional<Element> progression_difference(const GroundSet& a) {
  const auto k = a.size();
  if (!a.modulus()) {
    if (k == 1) return Element{1};
    const Element d = a[1] - a[0];
    for (std::size_t i = 2; i < k; ++i)
      if (a[i] - a[i - 1] != d) return std::nullopt;
    return d;
  }

  const auto p = static_cast<Element>(*a.modulus());
  if (k == 1 || k == static_cast<std::size_t>(p)) return Element{1};
  // With difference d the progression has exactly one element whose
  // predecessor x - d is missing; walking forward from it must cover A.
  for (Element d = 1; d < p; ++d) {
    std::optional<Element> start;
    bool ok = true;
    for (Element x : a.elements()) {
      if (!a.contains((x - d + p) % p)) {
        if (start) {
          ok = false;
          break;
        }
        start = x;
      }
    }
    if (!ok || !start) continue;
    Element x = *start;
    std::size_t walked = 1;
    while (walked < k && a.contains((x + d) % p)) {
      x = (x + d) % p;
      ++walked;
    }
    if (walked == k) return d;
  }
  return std::nullopt;
}

bool is_arithmetic_progression(const GroundSet& a) { return progression_difference(a).has_value(); }

GroundSet normalize(const GroundSet& a) {
  if (a.is_modular()) throw DomainError("normalization applies to integer sets only");
  Element g = 0;
  for (std::size_t i = 1; i < a.size(); ++i) g = std::gcd(g, a[i] - a[0]);
  if (g == 0) g = 1;
  std::vector<Element> out;
  out.reserve(a.size());
  for (Element x : a.elements()) out.push_back((x - a.min()) / g);
  return GroundSet(std::move(out));
}

}  // namespace sumset
