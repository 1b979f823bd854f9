#include <doctest.h>

#include "oracles.hpp"
#include "ringfill/lifecycle.hpp"
#include "ringfill/verifier.hpp"

using namespace ringfill;

namespace {

using Counts = std::vector<std::uint64_t>;

void retally(LifecycleTrace& t) {
  Counts s1, s2, s3;
  for (const auto& p : t.placements) {
    s1.push_back(p.stage1_bucket);
    s2.push_back(p.stage2_bucket);
    s3.push_back(p.stage3_bucket);
  }
  t.occupancy1 = oracle::histogram(s1, t.params.first_set_size);
  t.occupancy2 = oracle::histogram(s2, t.params.first_set_size);
  t.occupancy3 = oracle::histogram(s3, t.params.second_set_size);
}

std::vector<RequirementId> failing(const RequirementReport& r) {
  std::vector<RequirementId> out;
  for (const auto& e : r.entries) {
    if (!e.passed) {
      out.push_back(e.id);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("all requirements hold on a complete instance") {
  const auto report = check_requirements(run_lifecycle({10, 4, 2, 0, 5}));
  REQUIRE(report.entries.size() == 7);
  CHECK(report.all_passed());
  CHECK(report.stage3.residue_correct);
  CHECK(report.stage3.count_spread == 0);
  for (std::size_t i = 0; i < kAllRequirements.size(); ++i) {
    CHECK(report.entries[i].id == kAllRequirements[i]);
    CHECK_FALSE(report.entries[i].witness);
  }
}

TEST_CASE("gap instance fails only the second-set balance") {
  const PlacementParams params{5, 4, 3, 0, 5};
  const auto report = check_requirements(run_lifecycle(params));
  CHECK(failing(report) == std::vector<RequirementId>{RequirementId::R6});
  const auto& r6 = report.at(RequirementId::R6);
  REQUIRE(r6.witness);
  CHECK(r6.witness->params == params);
  CHECK(r6.witness->observed_spread == std::optional<std::uint64_t>{2});
  CHECK(r6.witness->histogram == Counts{1, 2, 1, 1, 0});
  CHECK(r6.witness->offending == Counts{4, 1});
  CHECK(report.stage3.residue_correct);
  CHECK(report.stage3.count_spread == 2);

  // Reproducible from the witness alone.
  CHECK(check_requirements(run_lifecycle(r6.witness->params)) == report);
}

TEST_CASE("empty instance passes vacuously") {
  for (const PlacementParams p : {PlacementParams{0, 4, 2, 0, 5}, PlacementParams{0, 1, 1, 0, 2},
                                  PlacementParams{0, 9, 3, 8, 17}}) {
    CHECK(check_requirements(run_lifecycle(p)).all_passed());
  }
}

TEST_CASE("tampered traces are caught") {
  const auto good = run_lifecycle({10, 4, 2, 0, 5});

  SUBCASE("duplicate label") {
    auto t = good;
    t.placements[3].label = t.placements[2].label;
    const auto r = check_requirements(t);
    CHECK_FALSE(r.passed(RequirementId::R1));
    CHECK(r.at(RequirementId::R1).witness->offending == Counts{2, 3});
  }
  SUBCASE("stage-1 token outside the window") {
    auto t = good;
    t.placements[2].stage1_bucket = 3;
    t.placements[2].moved_in_stage2 = false;
    retally(t);
    const auto r = check_requirements(t);
    CHECK_FALSE(r.passed(RequirementId::R2));
    CHECK(r.at(RequirementId::R2).witness->offending == Counts{2});
    CHECK_FALSE(r.passed(RequirementId::R4));
    CHECK_FALSE(r.passed(RequirementId::RC));
  }
  SUBCASE("unbalanced window") {
    auto t = good;
    // Token 8 is first cycle with stage1 = stage2 = 1; push it into bucket 0.
    t.placements[8].stage1_bucket = 0;
    t.placements[8].moved_in_stage2 = true;
    retally(t);
    const auto r = check_requirements(t);
    CHECK_FALSE(r.passed(RequirementId::R2));
    CHECK(r.at(RequirementId::R2).witness->observed_spread == std::optional<std::uint64_t>{2});
    CHECK(r.at(RequirementId::R2).witness->histogram == Counts{6, 4});
    CHECK(r.at(RequirementId::R2).witness->offending == Counts{1, 0});
  }
  SUBCASE("move between window buckets") {
    auto t = good;
    // Token 0: label 1, stage2 bucket 1. Start it in bucket 0 instead.
    t.placements[0].stage1_bucket = 0;
    t.placements[0].moved_in_stage2 = true;
    retally(t);
    const auto r = check_requirements(t);
    CHECK_FALSE(r.passed(RequirementId::R4));
    CHECK(r.at(RequirementId::R4).witness->offending == Counts{0});
  }
  SUBCASE("wrong move flag") {
    auto t = good;
    t.placements[2].moved_in_stage2 = false;
    CHECK(failing(check_requirements(t)) == std::vector<RequirementId>{RequirementId::R4});
  }
  SUBCASE("stage-2 bucket not the label residue") {
    auto t = good;
    t.placements[5].stage2_bucket = 3;
    retally(t);
    const auto r = check_requirements(t);
    CHECK_FALSE(r.passed(RequirementId::R5));
    CHECK(r.at(RequirementId::R5).witness->offending == Counts{5});
  }
  SUBCASE("stage-3 bucket not the label residue") {
    auto t = good;
    t.placements[5].stage3_bucket = (t.placements[5].stage3_bucket + 1) % 5;
    retally(t);
    const auto r = check_requirements(t);
    CHECK(failing(r) == std::vector<RequirementId>{RequirementId::R6});
    CHECK_FALSE(r.stage3.residue_correct);
  }
  SUBCASE("histogram disagrees with placements") {
    auto t = good;
    t.occupancy2 = Counts{4, 2, 2, 2};
    const auto r = check_requirements(t);
    CHECK(failing(r) == std::vector<RequirementId>{RequirementId::R5});
  }
  SUBCASE("second cycle out of order") {
    auto t = good;
    // Tokens 2 and 3 are the first two second-cycle tokens (offsets 0, 1).
    std::swap(t.placements[2].stage1_bucket, t.placements[3].stage1_bucket);
    const auto r = check_requirements(t);
    CHECK_FALSE(r.passed(RequirementId::RC));
    CHECK(r.at(RequirementId::RC).witness->offending == Counts{2});
  }
}

TEST_CASE("malformed traces are rejected") {
  auto t = run_lifecycle({6, 4, 2, 0, 5});
  SUBCASE("missing placement") {
    t.placements.pop_back();
    CHECK_THROWS_AS(check_requirements(t), std::invalid_argument);
  }
  SUBCASE("bucket out of range") {
    t.placements[0].stage3_bucket = 5;
    CHECK_THROWS_AS(check_requirements(t), std::invalid_argument);
  }
  SUBCASE("histogram size") {
    t.occupancy3.pop_back();
    CHECK_THROWS_AS(check_requirements(t), std::invalid_argument);
  }
  SUBCASE("token order") {
    std::swap(t.placements[0], t.placements[1]);
    CHECK_THROWS_AS(check_requirements(t), std::invalid_argument);
  }
  SUBCASE("invalid params") {
    t.params.second_set_size = 4;
    CHECK_THROWS_AS(check_requirements(t), InvalidParams);
  }
}

TEST_CASE("residue histogram and spread") {
  const auto trace = run_lifecycle({10, 4, 2, 0, 5});
  const auto h = ResidueHistogram::of_labels(trace.placements, 4);
  CHECK(h.counts == Counts{3, 3, 2, 2});
  CHECK(h.spread() == 1);
  CHECK(spread({}) == 0);
  CHECK(spread({7}) == 0);
  CHECK(spread({0, 3, 1}) == 3);
}

TEST_CASE("requirement ids round-trip through their names") {
  for (auto id : kAllRequirements) {
    CHECK(requirement_from_string(to_string(id)) == std::optional<RequirementId>{id});
  }
  CHECK_FALSE(requirement_from_string("R7"));
}

TEST_CASE("prose oracle") {
  CHECK(prose_oracle_stage1({4, 4, 2, 0, 0}) ==
        Stage1Plan{{TokenId{0}, 1}, {TokenId{1}, 0}, {TokenId{2}, 0}, {TokenId{3}, 1}});
  const auto five = prose_oracle_stage1({5, 5, 2, 0, 0});
  CHECK(five == Stage1Plan{{TokenId{0}, 1},
                           {TokenId{1}, 0},
                           {TokenId{2}, 0},
                           {TokenId{3}, 1},
                           {TokenId{4}, 0}});
  for (const auto& a : prose_oracle_stage1({3, 3, 1, 2, 0})) {
    CHECK(a.bucket == 2);
  }
  CHECK_THROWS_AS(prose_oracle_stage1({3, 3, 4, 0, 0}), InvalidParams);
}

TEST_CASE("prose oracle agrees with the planner and the test oracle") {
  oracle::for_each_small_instance(8, [](const PlacementParams& p) {
    CAPTURE(to_string(p));
    const auto plan = prose_oracle_stage1(p);
    REQUIRE(plan == plan_stage1(p));
    const auto expected = oracle::stage1_buckets(p);
    for (std::size_t i = 0; i < plan.size(); ++i) {
      REQUIRE(plan[i].bucket == expected[i]);
    }
  });
}
