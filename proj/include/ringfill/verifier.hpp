#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringfill/lifecycle.hpp"
#include "ringfill/params.hpp"
#include "ringfill/placement.hpp"

namespace ringfill {

/// R1 label injectivity, R2 window count balance, R3 label residue balance,
/// R4 single move, R5 first-set balance and residue, R6 second-set balance
/// and residue, RC ascending second cycle.
enum class RequirementId { R1, R2, R3, R4, R5, R6, RC };

inline constexpr std::array<RequirementId, 7> kAllRequirements = {
    RequirementId::R1, RequirementId::R2, RequirementId::R3, RequirementId::R4,
    RequirementId::R5, RequirementId::R6, RequirementId::RC};

const char* to_string(RequirementId id);
std::optional<RequirementId> requirement_from_string(const std::string& s);

/// max - min of a histogram, 0 for an empty one.
std::uint64_t spread(const std::vector<std::uint64_t>& counts);

/// Number of labels per residue q = label mod modulus.
struct ResidueHistogram {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> counts;

  static ResidueHistogram of_labels(const std::vector<TokenPlacement>& placements,
                                    std::uint64_t modulus);
  std::uint64_t spread() const { return ringfill::spread(counts); }
};

/// Evidence for a failed requirement. `offending` holds token indices or
/// bucket indices depending on the requirement (see `detail`).
struct Witness {
  PlacementParams params;
  std::string detail;
  std::vector<std::uint64_t> offending;
  std::optional<std::uint64_t> observed_spread;
  std::vector<std::uint64_t> histogram;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct RequirementEntry {
  RequirementId id = RequirementId::R1;
  bool passed = true;
  std::optional<Witness> witness;

  friend bool operator==(const RequirementEntry&, const RequirementEntry&) = default;
};

/// The two halves of R6, which hold under different conditions.
struct Stage3Breakdown {
  bool residue_correct = true;
  std::uint64_t count_spread = 0;

  friend bool operator==(const Stage3Breakdown&, const Stage3Breakdown&) = default;
};

struct RequirementReport {
  std::vector<RequirementEntry> entries;  // one per kAllRequirements, same order
  Stage3Breakdown stage3;

  const RequirementEntry& at(RequirementId id) const;
  bool passed(RequirementId id) const { return at(id).passed; }
  bool all_passed() const;

  friend bool operator==(const RequirementReport&, const RequirementReport&) = default;
};

/// Checks every requirement against the data in `trace`. Occupancy
/// histograms stored in the trace are cross-checked against the placements.
/// Throws std::invalid_argument when the trace is structurally malformed
/// (wrong token order, bucket outside its set, histogram of wrong size).
RequirementReport check_requirements(const LifecycleTrace& trace);

/// Literal two-pointer simulation of stage 1: a descending pointer for
/// tokens with (f + t) mod B in the window, an ascending one for the rest.
/// Shares no code with the label formula.
Stage1Plan prose_oracle_stage1(const PlacementParams& params);

}  // namespace ringfill
