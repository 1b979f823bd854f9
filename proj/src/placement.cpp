#include "ringfill/placement.hpp"

#include <stdexcept>
#include <string>

namespace ringfill {

namespace {

void check_token(const PlacementParams& params, TokenId t) {
  if (t.value >= params.token_count) {
    throw std::out_of_range("token " + std::to_string(t.value) + " out of range (T=" +
                            std::to_string(params.token_count) + ")");
  }
}

// Unchecked versions; callers guarantee t < T.
bool is_first_cycle(const PlacementParams& p, std::uint64_t t) {
  return t % p.first_set_size < p.fill_width;
}

std::uint64_t label_of(const PlacementParams& p, std::uint64_t t) {
  if (is_first_cycle(p, t)) {
    // t mod B <= t, so this never goes below f.
    return p.first_bucket + t + (p.fill_width - 1) - 2 * (t % p.first_set_size);
  }
  return p.first_bucket + t;
}

}  // namespace

const char* to_string(CycleClass c) {
  return c == CycleClass::FirstCycle ? "first" : "second";
}

CycleClass cycle_class(const PlacementParams& params, TokenId t) {
  check_token(params, t);
  return is_first_cycle(params, t.value) ? CycleClass::FirstCycle : CycleClass::SecondCycle;
}

Label label(const PlacementParams& params, TokenId t) {
  check_token(params, t);
  return Label{label_of(params, t.value)};
}

BucketIndex stage2_bucket(const PlacementParams& params, TokenId t) {
  return label(params, t).value % params.first_set_size;
}

BucketIndex stage3_bucket(const PlacementParams& params, TokenId t) {
  if (params.second_set_size == 0) {
    throw InvalidParams("second set size is not configured");
  }
  return label(params, t).value % params.second_set_size;
}

GapDescriptor gap(const PlacementParams& params) {
  GapDescriptor g;
  if (params.token_count == 0) {
    return g;
  }
  const auto b = params.first_set_size;
  const auto last = params.token_count - 1;
  const auto pos = last % b;
  g.round = last / b;
  g.offset = label_of(params, last) - (params.first_bucket + g.round * b);
  if (pos + 1 < params.fill_width) {
    g.present = true;
    g.gap_start = params.first_bucket + g.round * b;
    g.gap_length = params.fill_width - 1 - pos;
  }
  return g;
}

Stage1Planner::Stage1Planner(const PlacementParams& params) : params_(params) {
  validate_first_set(params_);
}

std::optional<Stage1Assignment> Stage1Planner::next() {
  if (done()) {
    return std::nullopt;
  }
  const auto t = emitted_++;
  if (is_first_cycle(params_, t)) {
    return Stage1Assignment{TokenId{t}, label_of(params_, t) % params_.first_set_size};
  }
  const auto bucket = window_bucket(params_, counter_);
  counter_ = (counter_ + 1) % params_.fill_width;
  return Stage1Assignment{TokenId{t}, bucket};
}

Stage1Plan plan_stage1(const PlacementParams& params) {
  Stage1Planner planner(params);
  Stage1Plan plan;
  plan.reserve(params.token_count);
  while (auto a = planner.next()) {
    plan.push_back(*a);
  }
  return plan;
}

}  // namespace ringfill
