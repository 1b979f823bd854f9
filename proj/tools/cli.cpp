#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ringfill/lifecycle.hpp"
#include "ringfill/placement.hpp"
#include "ringfill/report.hpp"
#include "ringfill/sweep.hpp"
#include "ringfill/verifier.hpp"

namespace ringfill::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_decimal(const std::string& flag, const std::string& text) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  const bool digits = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (!digits || ec != std::errc() || ptr != last) {
    throw UsageError(flag + " expects a decimal non-negative integer, got '" + text + "'");
  }
  return value;
}

struct Flags {
  std::optional<std::string> tokens, buckets, fill, first, target;
  std::optional<std::string> min_buckets, max_buckets, max_rounds, target_span, threads;
  std::optional<std::string> input;
  std::string format = "table";
  std::string output;
  bool gap_free_only = false;
  bool list_violations = false;
};

std::uint64_t required(const std::optional<std::string>& v, const std::string& flag) {
  if (!v) {
    throw UsageError("missing required flag " + flag);
  }
  return parse_decimal(flag, *v);
}

std::uint64_t optional_or(const std::optional<std::string>& v, const std::string& flag,
                          std::uint64_t fallback) {
  return v ? parse_decimal(flag, *v) : fallback;
}

PlacementParams first_set_params(const Flags& f) {
  PlacementParams p;
  p.token_count = required(f.tokens, "--tokens");
  p.first_set_size = required(f.buckets, "--buckets");
  p.fill_width = required(f.fill, "--fill");
  p.first_bucket = required(f.first, "--first");
  validate_first_set(p);
  return p;
}

PlacementParams full_params(const Flags& f) {
  auto p = first_set_params(f);
  p.second_set_size = required(f.target, "--target-buckets");
  validate(p);
  return p;
}

void add_params_flags(CLI::App* cmd, Flags& f, bool with_target) {
  cmd->add_option("--tokens", f.tokens, "number of tokens T")->type_name("UINT");
  cmd->add_option("--buckets", f.buckets, "first set size B")->type_name("UINT");
  cmd->add_option("--fill", f.fill, "fill window width C (1 <= C <= B)")->type_name("UINT");
  cmd->add_option("--first", f.first, "first bucket of the window f (f < B)")->type_name("UINT");
  if (with_target) {
    cmd->add_option("--target-buckets", f.target, "second set size B' (B' > B)")->type_name("UINT");
  }
}

void add_output_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--output", f.output, "write the report here instead of stdout")
      ->type_name("FILE");
}

int cmd_plan(const Flags& f, std::ostream& os) {
  const auto params = first_set_params(f);
  const auto plan = plan_stage1(params);
  if (f.format == "json") {
    os << plan_to_json(params, plan).dump(2) << '\n';
  } else if (f.format == "csv") {
    write_plan_csv(os, params, plan);
  } else {
    write_plan_table(os, params, plan);
  }
  return kOk;
}

int cmd_trace(const Flags& f, std::ostream& os) {
  const auto params = full_params(f);
  const auto trace = run_lifecycle(params);
  const auto report = check_requirements(trace);
  if (f.format == "json") {
    os << trace_to_json(trace, report).dump(2) << '\n';
  } else if (f.format == "csv") {
    write_trace_csv(os, trace);
  } else {
    write_trace_table(os, trace, report);
  }
  return kOk;
}

LifecycleTrace load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open " + path);
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  return trace_from_json(j);
}

int cmd_verify(const Flags& f, std::ostream& os) {
  const auto trace = f.input ? load_trace(*f.input) : run_lifecycle(full_params(f));
  const auto report = check_requirements(trace);
  if (f.format == "json") {
    os << verify_to_json(trace.params, report).dump(2) << '\n';
  } else if (f.format == "csv") {
    write_requirements_csv(os, report);
  } else {
    write_requirements_table(os, report);
  }
  return report.all_passed() ? kOk : kViolation;
}

int cmd_sweep(const Flags& f, std::ostream& os) {
  SweepDomain d;
  d.min_buckets = optional_or(f.min_buckets, "--min-buckets", d.min_buckets);
  d.max_buckets = optional_or(f.max_buckets, "--max-buckets", d.max_buckets);
  d.max_rounds = optional_or(f.max_rounds, "--max-rounds", d.max_rounds);
  d.target_span = optional_or(f.target_span, "--target-span", d.target_span);
  d.gap_free_only = f.gap_free_only;
  validate(d);
  const auto threads = optional_or(f.threads, "--threads", 0);
  if (threads > 4096) {
    throw UsageError("--threads must be at most 4096");
  }

  const auto report = sweep(d, static_cast<int>(threads));
  if (f.format == "json") {
    os << sweep_to_json(report, f.list_violations).dump(2) << '\n';
  } else if (f.format == "csv") {
    write_sweep_csv(os, report);
  } else {
    write_sweep_table(os, report, f.list_violations);
  }
  return report.only_documented_violations() ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plan, trace and verify three-stage counter-rotating bucket placement", "ringfill"};
  app.require_subcommand(1);

  Flags flags;
  auto* plan = app.add_subcommand("plan", "stage-1 bucket for every token");
  add_params_flags(plan, flags, false);
  add_output_flags(plan, flags);

  auto* trace = app.add_subcommand("trace", "full three-stage placement with histograms");
  add_params_flags(trace, flags, true);
  add_output_flags(trace, flags);

  auto* verify = app.add_subcommand("verify", "check R1-R6 and RC on one instance");
  add_params_flags(verify, flags, true);
  verify->add_option("--input", flags.input, "re-verify a JSON trace report instead")
      ->type_name("FILE");
  add_output_flags(verify, flags);

  auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive check over a parameter domain");
  sweep_cmd->add_option("--min-buckets", flags.min_buckets, "smallest B (default 1)")->type_name("UINT");
  sweep_cmd->add_option("--max-buckets", flags.max_buckets, "largest B (default 10)")->type_name("UINT");
  sweep_cmd->add_option("--max-rounds", flags.max_rounds,
                        "T ranges over [0, rounds*B+3] (default 4)")->type_name("UINT");
  sweep_cmd->add_option("--target-span", flags.target_span,
                        "B' ranges over (B, span*B] (default 2)")->type_name("UINT");
  sweep_cmd->add_flag("--gap-free-only", flags.gap_free_only,
                      "skip instances whose label set has a gap");
  sweep_cmd->add_flag("--list-violations", flags.list_violations,
                      "include every failing instance in the report");
  sweep_cmd->add_option("--threads", flags.threads, "worker threads (default: all)")->type_name("UINT");
  add_output_flags(sweep_cmd, flags);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "ringfill: error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    std::ostringstream buffer;
    int code = kOk;
    if (*plan) {
      code = cmd_plan(flags, buffer);
    } else if (*trace) {
      code = cmd_trace(flags, buffer);
    } else if (*verify) {
      code = cmd_verify(flags, buffer);
    } else {
      code = cmd_sweep(flags, buffer);
    }
    if (flags.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(flags.output, std::ios::binary);
      if (!file || !(file << buffer.str())) {
        err << "ringfill: error: cannot write " << flags.output << '\n';
        return kInputError;
      }
    }
    return code;
  } catch (const std::invalid_argument& e) {
    err << "ringfill: error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "ringfill: error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace ringfill::cli
