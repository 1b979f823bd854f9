#include <doctest.h>

#include <algorithm>

#include "ringfill/sweep.hpp"

using namespace ringfill;

TEST_CASE("domain validation") {
  CHECK_NOTHROW(validate(SweepDomain{}));
  CHECK_THROWS_AS(validate(SweepDomain{0, 10, 4, 2, false}), InvalidParams);
  CHECK_THROWS_AS(validate(SweepDomain{5, 4, 4, 2, false}), InvalidParams);
  CHECK_THROWS_AS(validate(SweepDomain{1, 10, 0, 2, false}), InvalidParams);
  CHECK_THROWS_AS(validate(SweepDomain{1, 10, 4, 1, false}), InvalidParams);
  CHECK_THROWS_AS(sweep(SweepDomain{1, 10, 0, 2, false}), InvalidParams);
}

TEST_CASE("domain enumeration is complete and ordered") {
  const SweepDomain d{1, 6, 4, 2, false};
  const auto all = enumerate_domain(d);
  std::uint64_t expected = 0;
  for (std::uint64_t b = 1; b <= 6; ++b) {
    expected += b * b * (4 * b + 4) * b;  // C, f, T, B' choices
  }
  CHECK(all.size() == expected);
  CHECK(std::is_sorted(all.begin(), all.end(), sweep_less));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(all.front() == PlacementParams{0, 1, 1, 0, 2});
  CHECK(all.back() == PlacementParams{27, 6, 6, 5, 12});

  for (const auto& p : enumerate_domain(SweepDomain{1, 6, 4, 2, true})) {
    REQUIRE_FALSE(gap(p).present);
  }
}

TEST_CASE("sweep over small buckets") {
  const SweepDomain d{1, 6, 4, 2, false};
  const auto report = sweep_serial(d);

  CHECK(report.oracle_mismatches == 0);
  for (auto id : kAllRequirements) {
    if (id != RequirementId::R6) {
      CHECK(report.count(id) == 0);
      CHECK_FALSE(report.minimal(id));
    }
  }
  CHECK(report.count(RequirementId::R6) > 0);
  CHECK(report.count(RequirementId::R6) == report.violations.size());
  CHECK(report.minimal(RequirementId::R6) == std::optional<PlacementParams>{{3, 2, 2, 0, 3}});
  CHECK(report.violations.front().report.stage3.count_spread == 2);
  CHECK(report.violations.front().gap_present);
  CHECK(report.max_stage3_spread == 2);
  CHECK(report.stage3_residue_failures == 0);
  CHECK(report.stage3_spread_failures_without_gap == 0);
  CHECK(report.only_documented_violations());

  for (const auto& v : report.violations) {
    REQUIRE(v.gap_present);
    REQUIRE(evaluate_instance(v.params) == v);
  }

  SUBCASE("parallel sweep is identical for any thread count") {
    for (int threads : {1, 2, 3, 8}) {
      CAPTURE(threads);
      CHECK(sweep(d, threads) == report);
    }
  }
}

TEST_CASE("gap-free domain has no violations") {
  const auto report = sweep(SweepDomain{1, 7, 4, 3, true});
  CHECK(report.instances_checked > 0);
  CHECK(report.violations.empty());
  CHECK(report.only_documented_violations());
}

TEST_CASE("single-bucket family") {
  const auto report = sweep(SweepDomain{1, 1, 4, 2, false});
  CHECK(report.instances_checked == 8);
  CHECK(report.violations.empty());
}

TEST_CASE("unexpected violations are flagged") {
  SweepReport r;
  r.violation_counts[static_cast<std::size_t>(RequirementId::R2)] = 1;
  CHECK_FALSE(r.only_documented_violations());
  SweepReport s;
  s.max_stage3_spread = 3;
  CHECK_FALSE(s.only_documented_violations());
  SweepReport o;
  o.oracle_mismatches = 1;
  CHECK_FALSE(o.only_documented_violations());
}
