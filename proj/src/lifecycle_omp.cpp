#include <cstddef>

#include <omp.h>

#include "ringfill/lifecycle.hpp"

namespace ringfill {

namespace {

__extension__ typedef unsigned __int128 Wide;

// Window offset the stage-1 counter holds when token t (second cycle) is
// emitted: the number of second-cycle tokens before t, mod C.
std::uint64_t counter_at(const PlacementParams& p, std::uint64_t t) {
  const auto b = p.first_set_size;
  const auto c = p.fill_width;
  const auto round = t / b;
  const auto pos = t % b;
  const auto full_rounds =
      static_cast<std::uint64_t>(static_cast<Wide>(round % c) * ((b - c) % c) % c);
  return (full_rounds + (pos - c) % c) % c;
}

void add_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] += src[i];
  }
}

}  // namespace

LifecycleTrace run_lifecycle_parallel(const PlacementParams& params) {
  validate(params);

  const auto n = static_cast<std::ptrdiff_t>(params.token_count);
  const auto b = params.first_set_size;
  const auto b2 = params.second_set_size;

  LifecycleTrace trace;
  trace.params = params;
  trace.placements.resize(params.token_count);
  trace.occupancy1.assign(b, 0);
  trace.occupancy2.assign(b, 0);
  trace.occupancy3.assign(b2, 0);

  TokenPlacement* out = trace.placements.data();

#pragma omp parallel
  {
    std::vector<std::uint64_t> occ1(b, 0);
    std::vector<std::uint64_t> occ2(b, 0);
    std::vector<std::uint64_t> occ3(b2, 0);

#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const TokenId t{static_cast<std::uint64_t>(i)};
      TokenPlacement& p = out[i];
      p.token = t;
      p.label = label(params, t);
      p.stage2_bucket = p.label.value % b;
      p.stage3_bucket = p.label.value % b2;
      p.stage1_bucket = cycle_class(params, t) == CycleClass::FirstCycle
                            ? p.stage2_bucket
                            : window_bucket(params, counter_at(params, t.value));
      p.moved_in_stage2 = p.stage1_bucket != p.stage2_bucket;
      ++occ1[p.stage1_bucket];
      ++occ2[p.stage2_bucket];
      ++occ3[p.stage3_bucket];
    }

#pragma omp critical
    {
      add_into(trace.occupancy1, occ1);
      add_into(trace.occupancy2, occ2);
      add_into(trace.occupancy3, occ3);
    }
  }
  return trace;
}

}  // namespace ringfill
