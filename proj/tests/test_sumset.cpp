#include <doctest.h>

#include <random>

#include "sumset/errors.hpp"
#include "sumset/oracle.hpp"
#include "sumset/sumset.hpp"

using namespace sumset;

namespace {

std::vector<Element> vals(const SumsetResult& s) { return {s.values().begin(), s.values().end()}; }

GroundSet random_set(std::mt19937& rng, std::size_t k, Element lo, Element hi) {
  std::uniform_int_distribution<Element> dist(lo, hi);
  std::vector<Element> v;
  while (v.size() < k) {
    const Element x = dist(rng);
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  }
  return GroundSet(v);
}

}  // namespace

TEST_CASE("generalized_sumset examples") {
  const auto s = generalized_sumset(GroundSet({0, 1, 2}), SumParams(3, 2));
  CHECK(vals(s) == std::vector<Element>{1, 2, 3, 4, 5});
  CHECK(s.cardinality() == 5);
  CHECK(s.min_value() == 1);
  CHECK(s.max_value() == 5);

  const GroundSet a({-3, 4, 10, 11});
  for (std::int64_t r = 1; r <= 3; ++r)
    CHECK(vals(generalized_sumset(a, SumParams(1, r))) == std::vector<Element>{-3, 4, 10, 11});

  const auto z5 = generalized_sumset(GroundSet({0, 1, 2, 3, 4}, 5), SumParams(3, 2));
  CHECK(vals(z5) == std::vector<Element>{0, 1, 2, 3, 4});
  CHECK_FALSE(z5.min_value().has_value());
}

TEST_CASE("classical and restricted sumsets") {
  CHECK(vals(classical_sumset(GroundSet({0, 2}), 2)) == std::vector<Element>{0, 2, 4});
  CHECK(vals(classical_sumset(GroundSet({0}), 7)) == std::vector<Element>{0});
  CHECK(classical_sumset(GroundSet({0, 1, 2}), 2).cardinality() == 5);

  CHECK(vals(restricted_sumset(GroundSet({0, 1, 2, 3, 4}), 2)) ==
        std::vector<Element>{1, 2, 3, 4, 5, 6, 7});
  CHECK(vals(restricted_sumset(GroundSet({0, 1, 2, 3, 4, 5}), 6)) == std::vector<Element>{15});
  CHECK(vals(restricted_sumset(GroundSet({0, 1, 3}), 2)) == std::vector<Element>{1, 3, 4});
  CHECK_THROWS_AS(restricted_sumset(GroundSet({0, 1, 3}), 4), DomainError);
}

TEST_CASE("domain and range guards") {
  CHECK_THROWS_WITH_AS(generalized_sumset(GroundSet({0, 1}), SumParams(5, 2)),
                       doctest::Contains("h <= r*k"), DomainError);
  CHECK_THROWS_AS(SumParams(0, 2), DomainError);

  const Element big = INT64_MAX / 4;
  CHECK_THROWS_AS(generalized_sumset(GroundSet({0, big}), SumParams(5, 5)), DomainError);
  CHECK_THROWS_AS(generalized_sumset(GroundSet({0, Element{1} << 40}), SumParams(3, 3)),
                  ResourceCapExceeded);
  // Widely spaced but tiny sets still work.
  CHECK(generalized_sumset(GroundSet({0, 1'000'000}), SumParams(2, 1)).cardinality() == 1);
}

TEST_CASE("modular reduction keeps cardinality <= p") {
  const GroundSet a({1, 5, 9, 12}, 13);
  for (std::int64_t r = 1; r <= 4; ++r) {
    for (std::int64_t h = 1; h <= r * 4; ++h) {
      const auto s = generalized_sumset(a, SumParams(h, r));
      CHECK(s.cardinality() <= 13);
      CHECK(s == brute_force_sumset(a, SumParams(h, r)));
    }
  }
  // Large residues exercise the rotation across word boundaries.
  const GroundSet wide({0, 3, 70, 101, 126}, 127);
  for (std::int64_t h = 1; h <= 6; ++h)
    CHECK(generalized_sumset(wide, SumParams(h, 2)) == brute_force_sumset(wide, SumParams(h, 2)));
}

TEST_CASE("nesting identities") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto k = 1 + trial % 6;
    const GroundSet a = random_set(rng, k, -20, 40);
    for (std::int64_t h = 1; h <= 6; ++h) {
      CHECK(generalized_sumset(a, SumParams(h, h)) == classical_sumset(a, h));
      if (h <= static_cast<std::int64_t>(k))
        CHECK(generalized_sumset(a, SumParams(h, 1)) == restricted_sumset(a, h));
      for (std::int64_t r = h; r <= h + 2; ++r)
        CHECK(generalized_sumset(a, SumParams(h, r)) == classical_sumset(a, h));
    }
  }
}

TEST_CASE("translation and dilation covariance") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto k = 2 + trial % 5;
    const GroundSet a = random_set(rng, k, -10, 25);
    const Element c = std::uniform_int_distribution<Element>(-50, 50)(rng);
    const Element d = std::uniform_int_distribution<Element>(1, 6)(rng);
    std::vector<Element> moved;
    for (Element x : a.elements()) moved.push_back(c + d * x);
    const GroundSet b(moved);
    for (std::int64_t r = 1; r <= 3; ++r) {
      for (std::int64_t h = 1; h <= std::min<std::int64_t>(r * k, 7); ++h) {
        const SumParams p(h, r);
        const auto sa = generalized_sumset(a, p);
        const auto sb = generalized_sumset(b, p);
        REQUIRE(sa.cardinality() == sb.cardinality());
        for (std::size_t i = 0; i < sa.cardinality(); ++i)
          CHECK(sb.values()[i] == h * c + d * sa.values()[i]);
      }
    }
  }
}

TEST_CASE("monotone in r") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto k = 2 + trial % 5;
    const GroundSet a = random_set(rng, k, 0, 30);
    for (std::int64_t h = 1; h <= 8; ++h) {
      for (std::int64_t r = 1; r <= 4; ++r) {
        if (h > r * static_cast<std::int64_t>(k)) continue;
        CHECK(generalized_sumset(a, SumParams(h, r + 1)).includes(generalized_sumset(a, SumParams(h, r))));
      }
    }
  }
}

TEST_CASE("extremes_closed_form") {
  CHECK(extremes_closed_form(GroundSet({0, 1, 2, 3, 4}), SumParams(3, 2)) == Extremes{1, 11});
  CHECK(extremes_closed_form(GroundSet({0, 1, 2, 3}), SumParams(6, 3)) == Extremes{3, 15});
  for (std::int64_t r = 1; r <= 4; ++r)
    CHECK(extremes_closed_form(GroundSet({5}), SumParams(r, r)) == Extremes{5 * r, 5 * r});
  CHECK_THROWS_AS(extremes_closed_form(GroundSet({0, 1}, 5), SumParams(1, 1)), DomainError);

  std::mt19937 rng(19);
  for (int trial = 0; trial < 80; ++trial) {
    const auto k = 1 + trial % 6;
    const GroundSet a = random_set(rng, k, -30, 30);
    for (std::int64_t r = 1; r <= 4; ++r) {
      for (std::int64_t h = 1; h <= r * static_cast<std::int64_t>(k); ++h) {
        const SumParams p(h, r);
        const auto s = generalized_sumset(a, p);
        const auto e = extremes_closed_form(a, p);
        CHECK(e.min == *s.min_value());
        CHECK(e.max == *s.max_value());
      }
    }
  }
}

TEST_CASE("set_sum") {
  const SumsetResult a({0, 1}, std::nullopt), b({0, 10}, std::nullopt);
  CHECK(vals(set_sum(a, b)) == std::vector<Element>{0, 1, 10, 11});
  const SumsetResult c({3, 4}, 5), d({1, 2}, 5);
  CHECK(vals(set_sum(c, d)) == std::vector<Element>{0, 1, 4});
  CHECK_THROWS_AS(set_sum(a, c), DomainError);
}
