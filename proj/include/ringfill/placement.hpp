#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ringfill/params.hpp"

namespace ringfill {

/// Which of the two interleaved stage-1 round-robin streams a token joins.
/// FirstCycle tokens walk the window downwards and never move in stage 2;
/// SecondCycle tokens walk it upwards and are moved once.
enum class CycleClass { FirstCycle, SecondCycle };

const char* to_string(CycleClass c);

struct Stage1Assignment {
  TokenId token;
  BucketIndex bucket = 0;

  friend bool operator==(const Stage1Assignment&, const Stage1Assignment&) = default;
};

using Stage1Plan = std::vector<Stage1Assignment>;

/// Contiguous run of labels that no token receives because the run stopped
/// in the middle of a first cycle. `round` and `offset` decompose the last
/// label as first_bucket + round * B + offset.
struct GapDescriptor {
  bool present = false;
  std::uint64_t gap_start = 0;
  std::uint64_t gap_length = 0;
  std::uint64_t round = 0;
  std::uint64_t offset = 0;

  friend bool operator==(const GapDescriptor&, const GapDescriptor&) = default;
};

// The functions below require validate_first_set(params) to hold and
// throw std::out_of_range for t >= T.

CycleClass cycle_class(const PlacementParams& params, TokenId t);

/// f + t + C - 1 - 2 (t mod B) for first-cycle tokens, f + t otherwise.
Label label(const PlacementParams& params, TokenId t);

/// label(t) mod B.
BucketIndex stage2_bucket(const PlacementParams& params, TokenId t);

/// label(t) mod B'. Requires validate(params).
BucketIndex stage3_bucket(const PlacementParams& params, TokenId t);

GapDescriptor gap(const PlacementParams& params);

/// Emits stage-1 buckets one token at a time in increasing t.
///
/// First-cycle tokens go to label mod B. Second-cycle tokens go to the window
/// slot (f + r) mod B, after which the counter r advances by one mod C. The
/// counter is never reset between rounds. An instance is single-owner.
class Stage1Planner {
 public:
  explicit Stage1Planner(const PlacementParams& params);

  /// Assignment for the next token, or nullopt once all T tokens are out.
  std::optional<Stage1Assignment> next();

  std::uint64_t counter() const { return counter_; }
  std::uint64_t tokens_emitted() const { return emitted_; }
  bool done() const { return emitted_ == params_.token_count; }

 private:
  PlacementParams params_;
  std::uint64_t counter_ = 0;
  std::uint64_t emitted_ = 0;
};

/// Drains a fresh Stage1Planner.
Stage1Plan plan_stage1(const PlacementParams& params);

}  // namespace ringfill
