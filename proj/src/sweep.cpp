#include "ringfill/sweep.hpp"

#include <tuple>

#include "ringfill/lifecycle.hpp"

namespace ringfill {

namespace {

std::size_t slot(RequirementId id) {
  return static_cast<std::size_t>(id);
}

}  // namespace

void validate(const SweepDomain& d) {
  if (d.min_buckets == 0) {
    throw InvalidParams("--min-buckets must be at least 1");
  }
  if (d.max_buckets < d.min_buckets) {
    throw InvalidParams("bucket range is empty (max-buckets < min-buckets)");
  }
  if (d.max_rounds == 0) {
    throw InvalidParams("--max-rounds must be at least 1");
  }
  if (d.target_span < 2) {
    throw InvalidParams("--target-span must be at least 2 so that B < B' <= span*B is non-empty");
  }
  // Keep T and B' comfortably inside the label range.
  if (d.max_buckets > (1ull << 20) || d.max_rounds > (1ull << 20) || d.target_span > (1ull << 20)) {
    throw InvalidParams("sweep ranges too large");
  }
}

bool sweep_less(const PlacementParams& a, const PlacementParams& b) {
  return std::tie(a.first_set_size, a.fill_width, a.first_bucket, a.token_count,
                  a.second_set_size) < std::tie(b.first_set_size, b.fill_width, b.first_bucket,
                                                b.token_count, b.second_set_size);
}

std::vector<PlacementParams> enumerate_domain(const SweepDomain& d) {
  validate(d);
  std::vector<PlacementParams> out;
  for (std::uint64_t b = d.min_buckets; b <= d.max_buckets; ++b) {
    for (std::uint64_t c = 1; c <= b; ++c) {
      for (std::uint64_t f = 0; f < b; ++f) {
        for (std::uint64_t t = 0; t <= d.max_rounds * b + 3; ++t) {
          for (std::uint64_t b2 = b + 1; b2 <= d.target_span * b; ++b2) {
            PlacementParams p{t, b, c, f, b2};
            if (d.gap_free_only && gap(p).present) {
              continue;
            }
            out.push_back(p);
          }
        }
      }
    }
  }
  return out;
}

InstanceResult evaluate_instance(const PlacementParams& params) {
  InstanceResult r;
  r.params = params;
  r.report = check_requirements(run_lifecycle(params));
  r.oracle_match = plan_stage1(params) == prose_oracle_stage1(params);
  r.gap_present = gap(params).present;
  return r;
}

std::uint64_t SweepReport::count(RequirementId id) const {
  return violation_counts[slot(id)];
}

const std::optional<PlacementParams>& SweepReport::minimal(RequirementId id) const {
  return minimal_violation[slot(id)];
}

bool SweepReport::only_documented_violations() const {
  if (oracle_mismatches != 0 || stage3_residue_failures != 0 ||
      stage3_spread_failures_without_gap != 0 || max_stage3_spread > 2) {
    return false;
  }
  for (auto id : kAllRequirements) {
    if (id != RequirementId::R6 && count(id) != 0) {
      return false;
    }
  }
  return true;
}

SweepReport summarize(const SweepDomain& domain, std::uint64_t instances_checked,
                      std::vector<InstanceResult> violations) {
  SweepReport report;
  report.domain = domain;
  report.instances_checked = instances_checked;
  for (const auto& v : violations) {
    if (!v.oracle_match) {
      ++report.oracle_mismatches;
      if (!report.minimal_oracle_mismatch) {
        report.minimal_oracle_mismatch = v.params;
      }
    }
    for (const auto& e : v.report.entries) {
      if (e.passed) {
        continue;
      }
      ++report.violation_counts[slot(e.id)];
      if (!report.minimal_violation[slot(e.id)]) {
        report.minimal_violation[slot(e.id)] = v.params;
      }
    }
    const auto& s3 = v.report.stage3;
    if (!s3.residue_correct) {
      ++report.stage3_residue_failures;
    }
    if (s3.count_spread > 1 && !v.gap_present) {
      ++report.stage3_spread_failures_without_gap;
    }
    if (s3.count_spread > report.max_stage3_spread) {
      report.max_stage3_spread = s3.count_spread;
    }
  }
  report.violations = std::move(violations);
  return report;
}

SweepReport sweep_serial(const SweepDomain& domain) {
  const auto instances = enumerate_domain(domain);
  std::vector<InstanceResult> violations;
  for (const auto& p : instances) {
    auto r = evaluate_instance(p);
    if (r.violated()) {
      violations.push_back(std::move(r));
    }
  }
  return summarize(domain, instances.size(), std::move(violations));
}

}  // namespace ringfill
