#include "sumset/oracle.hpp"

#include <set>
#include <string>

#include "sumset/errors.hpp"

namespace sumset {
namespace {

struct Enumerator {
  std::span<const Element> elems;
  std::int64_t cap;
  std::set<__int128> sums;

  void walk(std::size_t i, std::int64_t left, __int128 acc) {
    if (left == 0) {
      sums.insert(acc);
      return;
    }
    if (i == elems.size()) return;
    for (std::int64_t c = 0; c <= cap && c <= left; ++c)
      walk(i + 1, left - c, acc + static_cast<__int128>(c) * elems[i]);
  }
};

}  // namespace

SumsetResult brute_force_sumset(const GroundSet& a, const SumParams& params) {
  if (static_cast<__int128>(params.h()) > static_cast<__int128>(params.r()) * a.size())
    throw DomainError("h <= r*k violated; the generalized sumset is empty");

  Enumerator e{a.elements(), params.r(), {}};
  e.walk(0, params.h(), 0);

  std::vector<Element> values;
  values.reserve(e.sums.size());
  for (__int128 s : e.sums) {
    if (a.modulus()) {
      const auto p = static_cast<__int128>(*a.modulus());
      s %= p;
      if (s < 0) s += p;
    }
    values.push_back(static_cast<Element>(s));
  }
  return SumsetResult(std::move(values), a.modulus());
}

}  // namespace sumset
