#include "ringfill/verifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ringfill {

namespace {

constexpr std::size_t kMaxOffending = 32;

RequirementEntry pass(RequirementId id) {
  return RequirementEntry{id, true, std::nullopt};
}

RequirementEntry fail(RequirementId id, const PlacementParams& params, std::string detail,
                      std::vector<std::uint64_t> offending = {},
                      std::optional<std::uint64_t> observed_spread = std::nullopt,
                      std::vector<std::uint64_t> histogram = {}) {
  if (offending.size() > kMaxOffending) {
    detail += " (first " + std::to_string(kMaxOffending) + " of " +
              std::to_string(offending.size()) + " listed)";
    offending.resize(kMaxOffending);
  }
  return RequirementEntry{
      id, false,
      Witness{params, std::move(detail), std::move(offending), observed_spread,
              std::move(histogram)}};
}

std::pair<std::uint64_t, std::uint64_t> argmin_argmax(const std::vector<std::uint64_t>& counts) {
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  return {static_cast<std::uint64_t>(lo - counts.begin()),
          static_cast<std::uint64_t>(hi - counts.begin())};
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << (i ? "," : "") << v[i];
  }
  os << ']';
  return os.str();
}

// Count-balance check on a histogram; offending = {emptiest, fullest}.
RequirementEntry balance(RequirementId id, const PlacementParams& params,
                         const std::string& what, const std::vector<std::uint64_t>& counts) {
  const auto s = spread(counts);
  if (s <= 1) {
    return pass(id);
  }
  const auto [lo, hi] = argmin_argmax(counts);
  return fail(id, params, what + " spread " + std::to_string(s) + " in " + join(counts),
              {lo, hi}, s, counts);
}

void check_well_formed(const LifecycleTrace& trace) {
  const auto& p = trace.params;
  validate(p);
  if (trace.placements.size() != p.token_count) {
    throw std::invalid_argument("trace holds " + std::to_string(trace.placements.size()) +
                                " placements, expected " + std::to_string(p.token_count));
  }
  if (trace.occupancy1.size() != p.first_set_size ||
      trace.occupancy2.size() != p.first_set_size ||
      trace.occupancy3.size() != p.second_set_size) {
    throw std::invalid_argument("occupancy histogram sizes do not match the bucket sets");
  }
  for (std::uint64_t t = 0; t < trace.placements.size(); ++t) {
    const auto& pl = trace.placements[t];
    if (pl.token.value != t) {
      throw std::invalid_argument("placement " + std::to_string(t) + " carries token " +
                                  std::to_string(pl.token.value));
    }
    if (pl.stage1_bucket >= p.first_set_size || pl.stage2_bucket >= p.first_set_size ||
        pl.stage3_bucket >= p.second_set_size) {
      throw std::invalid_argument("token " + std::to_string(t) + " placed outside its bucket set");
    }
  }
}

RequirementEntry check_injective(const LifecycleTrace& trace) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> by_label;
  by_label.reserve(trace.placements.size());
  for (const auto& pl : trace.placements) {
    by_label.emplace_back(pl.label.value, pl.token.value);
  }
  std::sort(by_label.begin(), by_label.end());
  for (std::size_t i = 1; i < by_label.size(); ++i) {
    if (by_label[i - 1].first == by_label[i].first) {
      return fail(RequirementId::R1, trace.params,
                  "tokens share label " + std::to_string(by_label[i].first),
                  {by_label[i - 1].second, by_label[i].second});
    }
  }
  return pass(RequirementId::R1);
}

RequirementEntry check_window_balance(const LifecycleTrace& trace) {
  const auto& p = trace.params;
  std::vector<std::uint64_t> outside;
  for (const auto& pl : trace.placements) {
    if (!in_window(p, pl.stage1_bucket)) {
      outside.push_back(pl.token.value);
    }
  }
  if (!outside.empty()) {
    return fail(RequirementId::R2, p, "stage-1 tokens outside the fill window", outside);
  }
  std::vector<std::uint64_t> stage1;
  stage1.reserve(trace.placements.size());
  for (const auto& pl : trace.placements) {
    stage1.push_back(pl.stage1_bucket);
  }
  if (tally(stage1, p.first_set_size) != trace.occupancy1) {
    return fail(RequirementId::R2, p, "occupancy1 disagrees with stage-1 placements", {},
                std::nullopt, trace.occupancy1);
  }
  std::vector<std::uint64_t> window(p.fill_width);
  for (std::uint64_t i = 0; i < p.fill_width; ++i) {
    window[i] = trace.occupancy1[window_bucket(p, i)];
  }
  auto entry = balance(RequirementId::R2, p, "fill-window occupancy (window order)", window);
  if (!entry.passed) {
    // Report buckets, not window offsets.
    for (auto& o : entry.witness->offending) {
      o = window_bucket(p, o);
    }
  }
  return entry;
}

RequirementEntry check_single_move(const LifecycleTrace& trace) {
  const auto& p = trace.params;
  std::vector<std::uint64_t> offending;
  for (const auto& pl : trace.placements) {
    const bool moved = pl.stage1_bucket != pl.stage2_bucket;
    const bool ok = in_window(p, pl.stage1_bucket) && moved == pl.moved_in_stage2 &&
                    (!moved || !in_window(p, pl.stage2_bucket));
    if (!ok) {
      offending.push_back(pl.token.value);
    }
  }
  if (offending.empty()) {
    return pass(RequirementId::R4);
  }
  return fail(RequirementId::R4, p,
              "tokens moved inside the fill window, started outside it, or carry a wrong move flag",
              std::move(offending));
}

RequirementEntry check_set(RequirementId id, const LifecycleTrace& trace, std::uint64_t modulus,
                           const std::vector<std::uint64_t>& occupancy,
                           BucketIndex TokenPlacement::*bucket, const char* name,
                           Stage3Breakdown* breakdown) {
  const auto& p = trace.params;
  std::vector<std::uint64_t> wrong;
  std::vector<std::uint64_t> buckets;
  buckets.reserve(trace.placements.size());
  for (const auto& pl : trace.placements) {
    buckets.push_back(pl.*bucket);
    if (pl.*bucket != pl.label.value % modulus) {
      wrong.push_back(pl.token.value);
    }
  }
  const auto counts = tally(buckets, modulus);
  if (breakdown) {
    breakdown->residue_correct = wrong.empty();
    breakdown->count_spread = spread(counts);
  }
  if (!wrong.empty()) {
    return fail(id, p, std::string(name) + " bucket differs from label residue", std::move(wrong));
  }
  if (counts != occupancy) {
    return fail(id, p, std::string(name) + " histogram disagrees with placements", {},
                std::nullopt, occupancy);
  }
  return balance(id, p, name, counts);
}

RequirementEntry check_direction(const LifecycleTrace& trace) {
  const auto& p = trace.params;
  std::uint64_t expected = 0;
  for (const auto& pl : trace.placements) {
    if (cycle_class(p, pl.token) != CycleClass::SecondCycle) {
      continue;
    }
    const auto offset = window_offset(p, pl.stage1_bucket);
    if (offset != expected) {
      return fail(RequirementId::RC, p,
                  "second-cycle token at window offset " + std::to_string(offset) +
                      ", expected " + std::to_string(expected),
                  {pl.token.value});
    }
    expected = (expected + 1) % p.fill_width;
  }
  return pass(RequirementId::RC);
}

}  // namespace

const char* to_string(RequirementId id) {
  switch (id) {
    case RequirementId::R1:
      return "R1";
    case RequirementId::R2:
      return "R2";
    case RequirementId::R3:
      return "R3";
    case RequirementId::R4:
      return "R4";
    case RequirementId::R5:
      return "R5";
    case RequirementId::R6:
      return "R6";
    case RequirementId::RC:
      return "RC";
  }
  return "?";
}

std::optional<RequirementId> requirement_from_string(const std::string& s) {
  for (auto id : kAllRequirements) {
    if (s == to_string(id)) {
      return id;
    }
  }
  return std::nullopt;
}

std::uint64_t spread(const std::vector<std::uint64_t>& counts) {
  if (counts.empty()) {
    return 0;
  }
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  return *hi - *lo;
}

ResidueHistogram ResidueHistogram::of_labels(const std::vector<TokenPlacement>& placements,
                                             std::uint64_t modulus) {
  ResidueHistogram h;
  h.modulus = modulus;
  h.counts.assign(modulus, 0);
  for (const auto& pl : placements) {
    ++h.counts[pl.label.value % modulus];
  }
  return h;
}

const RequirementEntry& RequirementReport::at(RequirementId id) const {
  for (const auto& e : entries) {
    if (e.id == id) {
      return e;
    }
  }
  throw std::out_of_range(std::string("report has no entry for ") + to_string(id));
}

bool RequirementReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed; });
}

RequirementReport check_requirements(const LifecycleTrace& trace) {
  check_well_formed(trace);
  const auto& p = trace.params;

  RequirementReport report;
  report.entries.reserve(kAllRequirements.size());
  report.entries.push_back(check_injective(trace));
  report.entries.push_back(check_window_balance(trace));
  report.entries.push_back(balance(RequirementId::R3, p, "label residues mod B",
                                   ResidueHistogram::of_labels(trace.placements,
                                                               p.first_set_size).counts));
  report.entries.push_back(check_single_move(trace));
  report.entries.push_back(check_set(RequirementId::R5, trace, p.first_set_size, trace.occupancy2,
                                     &TokenPlacement::stage2_bucket, "occupancy2", nullptr));
  report.entries.push_back(check_set(RequirementId::R6, trace, p.second_set_size,
                                     trace.occupancy3, &TokenPlacement::stage3_bucket,
                                     "occupancy3", &report.stage3));
  report.entries.push_back(check_direction(trace));
  return report;
}

Stage1Plan prose_oracle_stage1(const PlacementParams& params) {
  validate_first_set(params);
  const auto b = params.first_set_size;
  const auto c = params.fill_width;

  std::set<BucketIndex> window;
  for (std::uint64_t i = 0; i < c; ++i) {
    window.insert((params.first_bucket + i) % b);
  }

  std::uint64_t down = c - 1;  // clockwise pointer, first cycle
  std::uint64_t up = 0;        // counter-clockwise pointer, second cycle
  Stage1Plan plan;
  plan.reserve(params.token_count);
  for (std::uint64_t t = 0; t < params.token_count; ++t) {
    if (window.count((params.first_bucket + t) % b)) {
      plan.push_back({TokenId{t}, (params.first_bucket + down) % b});
      down = down == 0 ? c - 1 : down - 1;
    } else {
      plan.push_back({TokenId{t}, (params.first_bucket + up) % b});
      up = up + 1 == c ? 0 : up + 1;
    }
  }
  return plan;
}

}  // namespace ringfill
