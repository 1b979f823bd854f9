#include "ringfill/lifecycle.hpp"

namespace ringfill {

const char* to_string(EndPattern::Kind kind) {
  switch (kind) {
    case EndPattern::Kind::NotApplicable:
      return "not_applicable";
    case EndPattern::Kind::Equal:
      return "equal";
    case EndPattern::Kind::DeficitRun:
      return "deficit_run";
    case EndPattern::Kind::SurplusRun:
      return "surplus_run";
  }
  return "unknown";
}

LifecycleTrace run_lifecycle(const PlacementParams& params) {
  validate(params);

  LifecycleTrace trace;
  trace.params = params;
  trace.occupancy1.assign(params.first_set_size, 0);
  trace.occupancy2.assign(params.first_set_size, 0);
  trace.occupancy3.assign(params.second_set_size, 0);
  trace.placements.reserve(params.token_count);

  Stage1Planner planner(params);
  while (auto a = planner.next()) {
    TokenPlacement p;
    p.token = a->token;
    p.label = label(params, a->token);
    p.stage1_bucket = a->bucket;
    p.stage2_bucket = stage2_bucket(params, a->token);
    p.stage3_bucket = stage3_bucket(params, a->token);
    p.moved_in_stage2 = p.stage1_bucket != p.stage2_bucket;
    ++trace.occupancy1[p.stage1_bucket];
    ++trace.occupancy2[p.stage2_bucket];
    ++trace.occupancy3[p.stage3_bucket];
    trace.placements.push_back(p);
  }
  return trace;
}

Stage1EndState end_state(const LifecycleTrace& trace) {
  Stage1EndState s;
  for (auto it = trace.placements.rbegin(); it != trace.placements.rend(); ++it) {
    auto& slot = cycle_class(trace.params, it->token) == CycleClass::FirstCycle
                     ? s.last_first_cycle_bucket
                     : s.last_second_cycle_bucket;
    if (!slot) {
      slot = it->stage1_bucket;
    }
    if (s.last_first_cycle_bucket && s.last_second_cycle_bucket) {
      break;
    }
  }
  return s;
}

EndPattern end_pattern(const LifecycleTrace& trace) {
  const auto& params = trace.params;
  EndPattern pattern;
  if (trace.placements.empty()) {
    return pattern;
  }
  const auto& last = trace.placements.back();
  if (cycle_class(params, last.token) != CycleClass::FirstCycle ||
      last.stage1_bucket == params.first_bucket) {
    return pattern;
  }

  const auto state = end_state(trace);
  const auto y = window_offset(params, *state.last_first_cycle_bucket);
  const auto z = state.last_second_cycle_bucket
                     ? window_offset(params, *state.last_second_cycle_bucket)
                     : params.fill_width - 1;

  if (z + 1 == y) {
    pattern.kind = EndPattern::Kind::Equal;
  } else if (z + 1 < y) {
    pattern.kind = EndPattern::Kind::DeficitRun;
    pattern.run_first = z + 1;
    pattern.run_last = y - 1;
  } else {
    pattern.kind = EndPattern::Kind::SurplusRun;
    pattern.run_first = y;
    pattern.run_last = z;
  }
  return pattern;
}

std::vector<std::uint64_t> tally(const std::vector<std::uint64_t>& values, std::uint64_t modulus) {
  std::vector<std::uint64_t> counts(modulus, 0);
  for (auto v : values) {
    ++counts[v % modulus];
  }
  return counts;
}

}  // namespace ringfill
