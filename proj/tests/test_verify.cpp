#include <doctest.h>

#include "sumset/errors.hpp"
#include "sumset/verify.hpp"

using namespace sumset;

TEST_CASE("check_direct_bound") {
  auto rep = check_direct_bound(GroundSet({0, 1, 2, 3, 4}), SumParams(3, 2));
  CHECK(rep.kind == BoundKind::kDirectIntegers);
  CHECK(rep.computed_cardinality == 11);
  CHECK(rep.bound_value == 11);
  CHECK(rep.equality());

  rep = check_direct_bound(GroundSet({0, 1, 2, 4, 8}), SumParams(3, 2));
  CHECK(rep.bound_value == 11);
  CHECK(rep.computed_cardinality == 18);  // [1, 20] without 15 and 19
  CHECK(rep.slack() == 7);

  rep = check_direct_bound(GroundSet({0, 1, 2, 3, 4}, 5), SumParams(3, 2));
  CHECK(rep.kind == BoundKind::kDirectModP);
  CHECK(rep.computed_cardinality == 5);
  CHECK(rep.bound_value == 5);
  CHECK(rep.equality());

  // Mod p requires r <= h; the integer statement does not.
  CHECK_NOTHROW(check_direct_bound(GroundSet({0, 1, 2}), SumParams(1, 2)));
  CHECK_THROWS_WITH_AS(check_direct_bound(GroundSet({0, 1, 2}, 5), SumParams(1, 2)),
                       doctest::Contains("r <= h"), DomainError);
}

TEST_CASE("classical bound checks") {
  auto rep = check_sumset_bound(GroundSet({0, 1, 2}, 7), 2);
  CHECK(rep.kind == BoundKind::kCauchyDavenport);
  CHECK(rep.bound_value == 5);
  CHECK(rep.equality());
  rep = check_restricted_bound(GroundSet({0, 1, 2, 3, 4}, 11), 2);
  CHECK(rep.kind == BoundKind::kErdosHeilbronn);
  CHECK(rep.equality());
  rep = check_restricted_bound(GroundSet({0, 1, 3, 7}), 2);
  CHECK(rep.kind == BoundKind::kRestrictedIntegers);
  CHECK(rep.slack() == 1);
}

TEST_CASE("BoundReport verdicts") {
  BoundReport rep{BoundKind::kDirectIntegers, GroundSet({0}), 1, 1, 4, 5};
  CHECK(rep.violated());
  CHECK_FALSE(rep.equality());
}

TEST_CASE("check_complement_identity") {
  auto rep = check_complement_identity(GroundSet({0, 1, 2}), SumParams(4, 2));
  CHECK(rep.complement_h == 2);
  CHECK(rep.cardinality == 5);
  CHECK(rep.complement_cardinality == 5);
  CHECK(rep.holds());

  rep = check_complement_identity(GroundSet({0, 1, 3, 7}), SumParams(4, 2));
  CHECK(rep.complement_h == 4);
  CHECK(rep.holds());

  rep = check_complement_identity(GroundSet({0, 1, 3, 7}), SumParams(5, 2));
  CHECK(rep.complement_h == 3);
  CHECK(rep.holds());

  CHECK(check_complement_identity(GroundSet({1, 4, 6}, 11), SumParams(5, 3)).holds());
  CHECK_THROWS_AS(check_complement_identity(GroundSet({0, 1, 2}), SumParams(6, 2)), DomainError);
}

TEST_CASE("inclusions and witnesses: case 1") {
  SUBCASE("eps = 1 leaves the S family empty") {
    const auto rep = check_inclusions_and_witnesses(GroundSet({0, 1, 2, 3, 4}), SumParams(3, 2));
    CHECK(rep.proof_case == "case1");
    CHECK(rep.prefix_inclusion.status == CheckStatus::kPassed);
    CHECK(rep.prefix_inclusion.subset_cardinality == 11);  // 2^A + A for an AP of length 5
    CHECK(rep.b_inclusion.status == CheckStatus::kPassed);
    REQUIRE(rep.families.size() == 2);
    for (const auto& f : rep.families) {
      CHECK(f.status == CheckStatus::kPassed);
      CHECK(f.witnesses.empty());
      CHECK(f.required_gap_count == 0);
    }
    CHECK_FALSE(rep.failed());
  }
  SUBCASE("h = 7, r = 3") {
    const auto rep = check_inclusions_and_witnesses(GroundSet({0, 1, 2, 3, 4, 5}), SumParams(7, 3));
    CHECK(rep.proof_case == "case1");
    CHECK(rep.b_inclusion.status == CheckStatus::kPassed);
    CHECK_FALSE(rep.failed());
  }
  SUBCASE("eps = 3 chain") {
    // m = 2, eps = 3: S_{1,2} < S_{1,1} < S_{1,0} < S_{2,0} = min B.
    const auto rep = check_inclusions_and_witnesses(GroundSet({0, 1, 2, 3, 4, 5, 6}), SumParams(11, 4));
    REQUIRE(rep.families.size() == 2);
    const auto& low = rep.families[0];
    CHECK(low.witnesses == std::vector<Element>{10, 11, 12, 13});
    CHECK(low.required_gap_count == 3);
    CHECK(low.gap_count == 3);
    const auto& high = rep.families[1];
    CHECK(high.side == "high");
    CHECK(high.witnesses == std::vector<Element>{56, 55, 54, 53});
    CHECK_FALSE(rep.failed());
  }
  SUBCASE("non-progression, eps = 3") {
    const auto rep = check_inclusions_and_witnesses(GroundSet({0, 1, 4, 9, 10, 15}), SumParams(7, 4));
    CHECK(rep.proof_case == "case1");
    CHECK(rep.families[0].witnesses.size() == 4);
    CHECK_FALSE(rep.failed());
  }
}

TEST_CASE("inclusions and witnesses: case 2") {
  SUBCASE("via the complement") {
    // k = 3, h = 8, r = 3: m = 2, eps = 2, m + eps > k, r - 1 <= m + eps.
    const auto rep = check_inclusions_and_witnesses(GroundSet({0, 1, 5}), SumParams(8, 3));
    CHECK(rep.proof_case == "case2-complement");
    REQUIRE(rep.complement.has_value());
    CHECK(rep.complement->complement_h == 1);
    CHECK(rep.complement->holds());
    CHECK(rep.families[0].sumset_h == 1);
    CHECK_FALSE(rep.failed());
  }
  SUBCASE("T family, m = 2") {
    // k = 3, r = 6, h = 14: m = 2, eps = 2, r - 1 = 5 > m + eps = 4 > k = 3.
    const GroundSet a({0, 1, 3});
    const auto rep = check_inclusions_and_witnesses(a, SumParams(14, 6));
    CHECK(rep.proof_case == "case2-direct");
    CHECK(rep.b_inclusion.status == CheckStatus::kPassed);
    REQUIRE(rep.families.size() == 2);
    const auto& low = rep.families[0];
    CHECK(low.family == "T");
    // least sum 6*1 + 2*3 = 12; T_{1,2} = 14, T_{1,1} = 15, T_{2,2} = min B = 17.
    CHECK(low.witnesses == std::vector<Element>{12, 14, 15, 17});
    CHECK(low.required_gap_count == 3);
    CHECK(low.gap_count == 4);
    CHECK(low.strictly_increasing);
    CHECK(low.interval_ok);
    CHECK_FALSE(rep.failed());
  }
  SUBCASE("T family, m = 1") {
    const auto rep = check_inclusions_and_witnesses(GroundSet({2, 9}), SumParams(7, 5));
    CHECK(rep.proof_case == "case2-direct");
    CHECK_FALSE(rep.failed());
  }
  SUBCASE("T family, larger r") {
    const auto rep = check_inclusions_and_witnesses(GroundSet({0, 2, 3, 7}), SumParams(27, 8));
    CHECK(rep.proof_case == "case2-direct");
    CHECK_FALSE(rep.failed());
  }
}

TEST_CASE("inclusions: applicability") {
  const auto rep = check_inclusions_and_witnesses(GroundSet({0, 1, 2}), SumParams(4, 2));
  CHECK(rep.proof_case == "eps=0");
  CHECK(rep.prefix_inclusion.status == CheckStatus::kNotApplicable);
  CHECK(rep.b_inclusion.status == CheckStatus::kNotApplicable);
  CHECK(rep.families.empty());
  CHECK_FALSE(rep.failed());

  CHECK_THROWS_AS(check_inclusions_and_witnesses(GroundSet({0, 1}, 5), SumParams(3, 2)), DomainError);
  CHECK_THROWS_AS(check_inclusions_and_witnesses(GroundSet({0, 1}), SumParams(5, 2)), DomainError);

  // The prefix inclusion alone works in any group.
  const auto inc = check_prefix_inclusion(GroundSet({0, 3, 4, 9}, 13), SumParams(5, 3));
  CHECK(inc.status == CheckStatus::kPassed);
  // h - m - 1 = 0 makes the second summand {0}.
  CHECK(check_prefix_inclusion(GroundSet({0, 3}), SumParams(1, 2)).status == CheckStatus::kPassed);
}

TEST_CASE("WitnessReport::failed sees every component") {
  WitnessReport rep{SumParams(3, 2), "case1", {}, {}, std::nullopt, {}};
  CHECK_FALSE(rep.failed());
  rep.families.push_back({});
  rep.families.back().status = CheckStatus::kFailed;
  CHECK(rep.failed());
  rep.families.clear();
  rep.complement = ComplementReport{SumParams(3, 2), 1, 4, 3};
  CHECK(rep.failed());
}
