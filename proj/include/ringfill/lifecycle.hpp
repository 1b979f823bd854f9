#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ringfill/params.hpp"
#include "ringfill/placement.hpp"

namespace ringfill {

/// Where one token sits in each of the three stages.
struct TokenPlacement {
  TokenId token;
  Label label;
  BucketIndex stage1_bucket = 0;
  BucketIndex stage2_bucket = 0;
  BucketIndex stage3_bucket = 0;
  bool moved_in_stage2 = false;

  friend bool operator==(const TokenPlacement&, const TokenPlacement&) = default;
};

/// Full three-stage run. occupancy1 and occupancy2 are indexed by first-set
/// bucket (size B, occupancy1 is zero outside the fill window); occupancy3 by
/// second-set bucket (size B').
struct LifecycleTrace {
  PlacementParams params;
  std::vector<TokenPlacement> placements;
  std::vector<std::uint64_t> occupancy1;
  std::vector<std::uint64_t> occupancy2;
  std::vector<std::uint64_t> occupancy3;

  friend bool operator==(const LifecycleTrace&, const LifecycleTrace&) = default;
};

/// z: stage-1 bucket of the last second-cycle token. y: stage-1 bucket of the
/// last first-cycle token.
struct Stage1EndState {
  std::optional<BucketIndex> last_second_cycle_bucket;
  std::optional<BucketIndex> last_first_cycle_bucket;

  friend bool operator==(const Stage1EndState&, const Stage1EndState&) = default;
};

/// Shape of the stage-1 window occupancy when the run ends inside a first
/// cycle. Offsets are window offsets, runs are inclusive [run_first, run_last].
struct EndPattern {
  enum class Kind {
    NotApplicable,  // last token is second-cycle, or landed in bucket f
    Equal,          // z + 1 == y
    DeficitRun,     // z + 1 < y: offsets strictly between z and y hold one less
    SurplusRun,     // z + 1 > y: offsets y..z hold one more
  };
  Kind kind = Kind::NotApplicable;
  std::uint64_t run_first = 0;
  std::uint64_t run_last = 0;

  friend bool operator==(const EndPattern&, const EndPattern&) = default;
};

const char* to_string(EndPattern::Kind kind);

/// Serial reference: drives a Stage1Planner and the closed-form stage-2/3
/// maps. Throws InvalidParams unless validate(params) holds.
LifecycleTrace run_lifecycle(const PlacementParams& params);

/// OpenMP kernel producing the same trace as run_lifecycle. The stage-1
/// counter is derived in closed form from the number of earlier second-cycle
/// tokens, so tokens are independent.
LifecycleTrace run_lifecycle_parallel(const PlacementParams& params);

Stage1EndState end_state(const LifecycleTrace& trace);

/// Predicts the stage-1 occupancy pattern from the z/y end state. When no
/// second-cycle token exists the counter still sits at 0, which behaves as
/// z = C - 1.
EndPattern end_pattern(const LifecycleTrace& trace);

/// Histogram of `values` reduced mod `modulus`.
std::vector<std::uint64_t> tally(const std::vector<std::uint64_t>& values, std::uint64_t modulus);

}  // namespace ringfill
