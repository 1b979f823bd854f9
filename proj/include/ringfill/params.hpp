#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringfill {

using BucketIndex = std::uint64_t;

/// Position of a token in arrival order.
struct TokenId {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(TokenId, TokenId) = default;
};

/// Integer permanently attached to a token. Never reduced: labels of
/// different rounds must not alias.
struct Label {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(Label, Label) = default;
};

/// One instance of the three-stage placement problem.
///
/// Stage 1 fills the `fill_width` consecutive buckets of a ring of
/// `first_set_size` buckets starting at `first_bucket`. Stage 2 spreads the
/// tokens over the whole first ring, stage 3 over `second_set_size` buckets.
/// `second_set_size` is 0 when only the first set is of interest (plans).
struct PlacementParams {
  std::uint64_t token_count = 0;
  std::uint64_t first_set_size = 1;
  std::uint64_t fill_width = 1;
  std::uint64_t first_bucket = 0;
  std::uint64_t second_set_size = 0;

  friend constexpr auto operator<=>(const PlacementParams&, const PlacementParams&) = default;
};

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks the first-set constraints (1 <= C <= B, f < B) and that every
/// label fits in a signed 64-bit integer. Throws InvalidParams.
void validate_first_set(const PlacementParams& params);

/// validate_first_set plus B < B'.
void validate(const PlacementParams& params);

/// Offset of `bucket` inside the fill window, i.e. (bucket - f) mod B.
constexpr std::uint64_t window_offset(const PlacementParams& params, BucketIndex bucket) {
  const auto b = params.first_set_size;
  return (bucket % b + b - params.first_bucket) % b;
}

/// Bucket at window offset `offset`, i.e. (f + offset) mod B.
constexpr BucketIndex window_bucket(const PlacementParams& params, std::uint64_t offset) {
  return (params.first_bucket + offset) % params.first_set_size;
}

constexpr bool in_window(const PlacementParams& params, BucketIndex bucket) {
  return bucket < params.first_set_size && window_offset(params, bucket) < params.fill_width;
}

std::string to_string(const PlacementParams& params);

}  // namespace ringfill
