#include "ringfill/report.hpp"

#include <iomanip>
#include <stdexcept>
#include <string>

namespace ringfill {

namespace {

std::string list(const std::vector<std::uint64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + std::to_string(v[i]);
  }
  return s + "]";
}

std::uint64_t as_u64(const Json& v) {
  if (!v.is_number_unsigned()) {
    throw std::invalid_argument("malformed report: expected a non-negative integer, got " +
                                v.dump());
  }
  return v.get<std::uint64_t>();
}

std::uint64_t u64(const Json& j, const char* key) {
  return as_u64(j.at(key));
}

std::vector<std::uint64_t> u64_array(const Json& j, const char* key) {
  const auto& arr = j.at(key);
  if (!arr.is_array()) {
    throw std::invalid_argument(std::string("malformed report: ") + key + " is not an array");
  }
  std::vector<std::uint64_t> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    out.push_back(as_u64(v));
  }
  return out;
}

template <class F>
auto rethrow_as_invalid(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

Json witness_to_json(const Witness& w) {
  Json j;
  j["params"] = params_to_json(w.params);
  j["detail"] = w.detail;
  j["offending"] = w.offending;
  j["observed_spread"] = w.observed_spread ? Json(*w.observed_spread) : Json(nullptr);
  j["histogram"] = w.histogram;
  return j;
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.params = params_from_json(j.at("params"));
  w.detail = j.at("detail").get<std::string>();
  w.offending = u64_array(j, "offending");
  if (!j.at("observed_spread").is_null()) {
    w.observed_spread = u64(j, "observed_spread");
  }
  w.histogram = u64_array(j, "histogram");
  return w;
}

std::string params_line(const PlacementParams& p, bool with_second_set) {
  std::string s = "T=" + std::to_string(p.token_count) + " B=" + std::to_string(p.first_set_size) +
                  " C=" + std::to_string(p.fill_width) + " f=" + std::to_string(p.first_bucket);
  if (with_second_set) {
    s += " B'=" + std::to_string(p.second_set_size);
  }
  return s;
}

std::string optional_bucket(const std::optional<BucketIndex>& b) {
  return b ? std::to_string(*b) : std::string("-");
}

}  // namespace

Json params_to_json(const PlacementParams& p, bool with_second_set) {
  Json j;
  j["token_count"] = p.token_count;
  j["first_set_size"] = p.first_set_size;
  j["fill_width"] = p.fill_width;
  j["first_bucket"] = p.first_bucket;
  if (with_second_set) {
    j["second_set_size"] = p.second_set_size;
  }
  return j;
}

PlacementParams params_from_json(const Json& j) {
  return rethrow_as_invalid([&] {
    PlacementParams p;
    p.token_count = u64(j, "token_count");
    p.first_set_size = u64(j, "first_set_size");
    p.fill_width = u64(j, "fill_width");
    p.first_bucket = u64(j, "first_bucket");
    p.second_set_size = j.contains("second_set_size") ? u64(j, "second_set_size") : 0;
    return p;
  });
}

Json gap_to_json(const GapDescriptor& g) {
  Json j;
  j["present"] = g.present;
  j["gap_start"] = g.gap_start;
  j["gap_length"] = g.gap_length;
  j["round"] = g.round;
  j["offset"] = g.offset;
  return j;
}

Json requirements_to_json(const RequirementReport& report) {
  Json arr = Json::array();
  for (const auto& e : report.entries) {
    Json j;
    j["id"] = to_string(e.id);
    j["status"] = e.passed ? "pass" : "fail";
    j["witness"] = e.witness ? witness_to_json(*e.witness) : Json(nullptr);
    if (e.id == RequirementId::R6) {
      j["residue_correct"] = report.stage3.residue_correct;
      j["count_spread"] = report.stage3.count_spread;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

RequirementReport requirements_from_json(const Json& arr) {
  return rethrow_as_invalid([&] {
    RequirementReport report;
    for (const auto& j : arr) {
      const auto name = j.at("id").get<std::string>();
      const auto id = requirement_from_string(name);
      if (!id) {
        throw std::invalid_argument("malformed report: unknown requirement id " + name);
      }
      RequirementEntry e;
      e.id = *id;
      e.passed = j.at("status").get<std::string>() == "pass";
      if (!j.at("witness").is_null()) {
        e.witness = witness_from_json(j.at("witness"));
      }
      if (e.id == RequirementId::R6) {
        report.stage3.residue_correct = j.at("residue_correct").get<bool>();
        report.stage3.count_spread = u64(j, "count_spread");
      }
      report.entries.push_back(std::move(e));
    }
    return report;
  });
}

Json plan_to_json(const PlacementParams& params, const Stage1Plan& plan) {
  Json j;
  j["params"] = params_to_json(params, false);
  Json rows = Json::array();
  for (const auto& a : plan) {
    Json r;
    r["token"] = a.token.value;
    r["label"] = label(params, a.token).value;
    r["stage1_bucket"] = a.bucket;
    rows.push_back(std::move(r));
  }
  j["placements"] = std::move(rows);
  return j;
}

Json trace_to_json(const LifecycleTrace& trace, const RequirementReport& report) {
  Json j;
  j["params"] = params_to_json(trace.params);
  Json rows = Json::array();
  for (const auto& p : trace.placements) {
    Json r;
    r["token"] = p.token.value;
    r["label"] = p.label.value;
    r["stage1_bucket"] = p.stage1_bucket;
    r["stage2_bucket"] = p.stage2_bucket;
    r["stage3_bucket"] = p.stage3_bucket;
    r["moved_in_stage2"] = p.moved_in_stage2;
    rows.push_back(std::move(r));
  }
  j["placements"] = std::move(rows);
  j["occupancy1"] = trace.occupancy1;
  j["occupancy2"] = trace.occupancy2;
  j["occupancy3"] = trace.occupancy3;
  j["gap"] = gap_to_json(gap(trace.params));
  j["requirements"] = requirements_to_json(report);
  return j;
}

LifecycleTrace trace_from_json(const Json& j) {
  return rethrow_as_invalid([&] {
    LifecycleTrace t;
    t.params = params_from_json(j.at("params"));
    for (const auto& r : j.at("placements")) {
      TokenPlacement p;
      p.token = TokenId{u64(r, "token")};
      p.label = Label{u64(r, "label")};
      p.stage1_bucket = u64(r, "stage1_bucket");
      p.stage2_bucket = u64(r, "stage2_bucket");
      p.stage3_bucket = u64(r, "stage3_bucket");
      p.moved_in_stage2 = r.at("moved_in_stage2").get<bool>();
      t.placements.push_back(p);
    }
    t.occupancy1 = u64_array(j, "occupancy1");
    t.occupancy2 = u64_array(j, "occupancy2");
    t.occupancy3 = u64_array(j, "occupancy3");
    return t;
  });
}

Json verify_to_json(const PlacementParams& params, const RequirementReport& report) {
  Json j;
  j["params"] = params_to_json(params);
  j["requirements"] = requirements_to_json(report);
  j["all_passed"] = report.all_passed();
  return j;
}

Json sweep_to_json(const SweepReport& r, bool list_violations) {
  Json j;
  Json domain;
  domain["min_buckets"] = r.domain.min_buckets;
  domain["max_buckets"] = r.domain.max_buckets;
  domain["max_rounds"] = r.domain.max_rounds;
  domain["target_span"] = r.domain.target_span;
  domain["gap_free_only"] = r.domain.gap_free_only;
  j["domain"] = std::move(domain);
  j["instances_checked"] = r.instances_checked;
  j["oracle_mismatches"] = r.oracle_mismatches;
  j["minimal_oracle_mismatch"] =
      r.minimal_oracle_mismatch ? params_to_json(*r.minimal_oracle_mismatch) : Json(nullptr);

  Json reqs = Json::array();
  for (auto id : kAllRequirements) {
    Json e;
    e["id"] = to_string(id);
    e["violations"] = r.count(id);
    e["minimal"] = r.minimal(id) ? params_to_json(*r.minimal(id)) : Json(nullptr);
    reqs.push_back(std::move(e));
  }
  j["requirements"] = std::move(reqs);

  Json s3;
  s3["residue_failures"] = r.stage3_residue_failures;
  s3["spread_failures_without_gap"] = r.stage3_spread_failures_without_gap;
  s3["max_spread"] = r.max_stage3_spread;
  j["stage3"] = std::move(s3);
  j["only_documented_violations"] = r.only_documented_violations();

  if (list_violations) {
    Json vs = Json::array();
    for (const auto& v : r.violations) {
      Json e;
      e["params"] = params_to_json(v.params);
      e["gap_present"] = v.gap_present;
      e["oracle_match"] = v.oracle_match;
      Json failed = Json::array();
      for (const auto& entry : v.report.entries) {
        if (!entry.passed) {
          failed.push_back(to_string(entry.id));
        }
      }
      e["failed"] = std::move(failed);
      e["stage3_spread"] = v.report.stage3.count_spread;
      vs.push_back(std::move(e));
    }
    j["violations"] = std::move(vs);
  }
  return j;
}

void write_plan_csv(std::ostream& os, const PlacementParams& params, const Stage1Plan& plan) {
  os << "token,label,stage1_bucket\n";
  for (const auto& a : plan) {
    os << a.token.value << ',' << label(params, a.token).value << ',' << a.bucket << '\n';
  }
}

void write_trace_csv(std::ostream& os, const LifecycleTrace& trace) {
  os << "token,label,stage1_bucket,stage2_bucket,stage3_bucket,moved\n";
  for (const auto& p : trace.placements) {
    os << p.token.value << ',' << p.label.value << ',' << p.stage1_bucket << ','
       << p.stage2_bucket << ',' << p.stage3_bucket << ',' << (p.moved_in_stage2 ? 1 : 0)
       << '\n';
  }
}

void write_requirements_csv(std::ostream& os, const RequirementReport& report) {
  os << "id,status,observed_spread,offending,detail\n";
  for (const auto& e : report.entries) {
    os << to_string(e.id) << ',' << (e.passed ? "pass" : "fail") << ',';
    if (e.witness) {
      const auto& w = *e.witness;
      if (w.observed_spread) {
        os << *w.observed_spread;
      }
      os << ",\"" << list(w.offending) << "\",\"" << w.detail << '"';
    } else {
      os << ",,";
    }
    os << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const SweepReport& r) {
  os << "id,violations,min_buckets,min_fill,min_first,min_tokens,min_target_buckets\n";
  auto row = [&](const char* id, std::uint64_t n, const std::optional<PlacementParams>& m) {
    os << id << ',' << n;
    if (m) {
      os << ',' << m->first_set_size << ',' << m->fill_width << ',' << m->first_bucket << ','
         << m->token_count << ',' << m->second_set_size;
    } else {
      os << ",,,,,";
    }
    os << '\n';
  };
  for (auto id : kAllRequirements) {
    row(to_string(id), r.count(id), r.minimal(id));
  }
  row("ORACLE", r.oracle_mismatches, r.minimal_oracle_mismatch);
}

void write_plan_table(std::ostream& os, const PlacementParams& params, const Stage1Plan& plan) {
  os << "plan " << params_line(params, false) << '\n';
  os << std::setw(8) << "token" << std::setw(10) << "label" << std::setw(8) << "stage1" << '\n';
  for (const auto& a : plan) {
    os << std::setw(8) << a.token.value << std::setw(10) << label(params, a.token).value
       << std::setw(8) << a.bucket << '\n';
  }
}

void write_requirements_table(std::ostream& os, const RequirementReport& report) {
  for (const auto& e : report.entries) {
    os << to_string(e.id) << ' ' << (e.passed ? "pass" : "FAIL");
    if (e.witness) {
      os << "  " << e.witness->detail;
      if (!e.witness->offending.empty()) {
        os << "; offending " << list(e.witness->offending);
      }
    }
    os << '\n';
  }
}

void write_trace_table(std::ostream& os, const LifecycleTrace& trace,
                       const RequirementReport& report) {
  os << "trace " << params_line(trace.params, true) << '\n';
  os << std::setw(8) << "token" << std::setw(10) << "label" << std::setw(8) << "stage1"
     << std::setw(8) << "stage2" << std::setw(8) << "stage3" << std::setw(7) << "moved" << '\n';
  for (const auto& p : trace.placements) {
    os << std::setw(8) << p.token.value << std::setw(10) << p.label.value << std::setw(8)
       << p.stage1_bucket << std::setw(8) << p.stage2_bucket << std::setw(8) << p.stage3_bucket
       << std::setw(7) << (p.moved_in_stage2 ? "yes" : "no") << '\n';
  }
  os << "occupancy1 " << list(trace.occupancy1) << '\n';
  os << "occupancy2 " << list(trace.occupancy2) << '\n';
  os << "occupancy3 " << list(trace.occupancy3) << '\n';
  const auto g = gap(trace.params);
  if (g.present) {
    os << "gap start=" << g.gap_start << " length=" << g.gap_length << '\n';
  } else {
    os << "gap none\n";
  }
  const auto s = end_state(trace);
  os << "end z=" << optional_bucket(s.last_second_cycle_bucket)
     << " y=" << optional_bucket(s.last_first_cycle_bucket)
     << " pattern=" << to_string(end_pattern(trace).kind) << '\n';
  write_requirements_table(os, report);
}

void write_sweep_table(std::ostream& os, const SweepReport& r, bool list_violations) {
  os << "sweep B=" << r.domain.min_buckets << ".." << r.domain.max_buckets
     << " T<=" << r.domain.max_rounds << "*B+3 B'<=" << r.domain.target_span << "*B"
     << (r.domain.gap_free_only ? " gap-free" : "") << '\n';
  os << "instances " << r.instances_checked << '\n';
  auto minimal = [](const std::optional<PlacementParams>& m) {
    return m ? "  minimal " + params_line(*m, true) : std::string();
  };
  for (auto id : kAllRequirements) {
    os << to_string(id) << " violations " << r.count(id) << minimal(r.minimal(id)) << '\n';
  }
  os << "oracle mismatches " << r.oracle_mismatches << minimal(r.minimal_oracle_mismatch)
     << '\n';
  os << "stage3 residue failures " << r.stage3_residue_failures
     << ", spread failures without gap " << r.stage3_spread_failures_without_gap
     << ", max spread " << r.max_stage3_spread << '\n';
  os << (r.only_documented_violations() ? "only gap-case R6 violations"
                                        : "UNEXPECTED violations")
     << '\n';
  if (list_violations) {
    for (const auto& v : r.violations) {
      os << "  " << params_line(v.params, true) << (v.gap_present ? " gap" : "")
         << (v.oracle_match ? "" : " oracle-mismatch") << " failed";
      for (const auto& e : v.report.entries) {
        if (!e.passed) {
          os << ' ' << to_string(e.id);
        }
      }
      os << '\n';
    }
  }
}

}  // namespace ringfill
