#pragma once

#include <ostream>

#include <json.hpp>

#include "ringfill/lifecycle.hpp"
#include "ringfill/placement.hpp"
#include "ringfill/sweep.hpp"
#include "ringfill/verifier.hpp"

namespace ringfill {

// Insertion-ordered so that emitted reports are byte-stable.
using Json = nlohmann::ordered_json;

Json params_to_json(const PlacementParams& params, bool with_second_set = true);
PlacementParams params_from_json(const Json& j);

Json gap_to_json(const GapDescriptor& gap);
Json requirements_to_json(const RequirementReport& report);
RequirementReport requirements_from_json(const Json& j);

/// {params, placements[{token, label, stage1_bucket}]}
Json plan_to_json(const PlacementParams& params, const Stage1Plan& plan);

/// {params, placements[], occupancy1[], occupancy2[], occupancy3[], gap,
///  requirements[]}
Json trace_to_json(const LifecycleTrace& trace, const RequirementReport& report);

/// Reads the params, placements and occupancy fields of a trace report.
/// Throws std::invalid_argument on missing or mistyped fields.
LifecycleTrace trace_from_json(const Json& j);

Json verify_to_json(const PlacementParams& params, const RequirementReport& report);
Json sweep_to_json(const SweepReport& report, bool list_violations);

void write_plan_csv(std::ostream& os, const PlacementParams& params, const Stage1Plan& plan);
void write_trace_csv(std::ostream& os, const LifecycleTrace& trace);
void write_requirements_csv(std::ostream& os, const RequirementReport& report);
void write_sweep_csv(std::ostream& os, const SweepReport& report);

void write_plan_table(std::ostream& os, const PlacementParams& params, const Stage1Plan& plan);
void write_trace_table(std::ostream& os, const LifecycleTrace& trace,
                       const RequirementReport& report);
void write_requirements_table(std::ostream& os, const RequirementReport& report);
void write_sweep_table(std::ostream& os, const SweepReport& report, bool list_violations);

}  // namespace ringfill
