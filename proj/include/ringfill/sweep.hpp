#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ringfill/params.hpp"
#include "ringfill/verifier.hpp"

namespace ringfill {

/// Finite parameter domain: B in [min_buckets, max_buckets], C in [1, B],
/// f in [0, B), T in [0, max_rounds * B + 3], B' in (B, target_span * B].
/// With gap_free_only, instances whose label set has a gap are skipped.
struct SweepDomain {
  std::uint64_t min_buckets = 1;
  std::uint64_t max_buckets = 10;
  std::uint64_t max_rounds = 4;
  std::uint64_t target_span = 2;
  bool gap_free_only = false;

  friend bool operator==(const SweepDomain&, const SweepDomain&) = default;
};

/// Throws InvalidParams for empty or inverted ranges.
void validate(const SweepDomain& domain);

/// Sweep order: lexicographic on (B, C, f, T, B').
bool sweep_less(const PlacementParams& a, const PlacementParams& b);

/// Every instance of the domain, in sweep order.
std::vector<PlacementParams> enumerate_domain(const SweepDomain& domain);

struct InstanceResult {
  PlacementParams params;
  RequirementReport report;
  bool oracle_match = true;
  bool gap_present = false;

  bool violated() const { return !oracle_match || !report.all_passed(); }

  friend bool operator==(const InstanceResult&, const InstanceResult&) = default;
};

/// Runs the lifecycle, the requirement checks and the oracle comparison.
InstanceResult evaluate_instance(const PlacementParams& params);

struct SweepReport {
  SweepDomain domain;
  std::uint64_t instances_checked = 0;
  std::vector<InstanceResult> violations;  // failing instances, sweep order

  std::array<std::uint64_t, kAllRequirements.size()> violation_counts{};
  std::array<std::optional<PlacementParams>, kAllRequirements.size()> minimal_violation{};
  std::uint64_t oracle_mismatches = 0;
  std::optional<PlacementParams> minimal_oracle_mismatch;

  std::uint64_t stage3_residue_failures = 0;
  std::uint64_t stage3_spread_failures_without_gap = 0;
  std::uint64_t max_stage3_spread = 0;

  std::uint64_t count(RequirementId id) const;
  const std::optional<PlacementParams>& minimal(RequirementId id) const;

  /// True when every violation is an R6 count-spread failure on an instance
  /// whose label set has a gap (residues correct, spread at most 2).
  bool only_documented_violations() const;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Serial reference sweep.
SweepReport sweep_serial(const SweepDomain& domain);

/// OpenMP sweep. `threads` = 0 uses the runtime default. The report is
/// identical to sweep_serial regardless of thread count or scheduling.
SweepReport sweep(const SweepDomain& domain, int threads = 0);

/// Folds failing instances (already in sweep order) into a report.
SweepReport summarize(const SweepDomain& domain, std::uint64_t instances_checked,
                      std::vector<InstanceResult> violations);

}  // namespace ringfill
