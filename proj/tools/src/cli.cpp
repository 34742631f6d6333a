// Copyright 2026 The mbu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "mbu/errors.hpp"
#include "report.hpp"

namespace mbu::cli {
namespace {

struct RawOptions {
  std::string modulus;
  std::string multiplier = "auto";
  std::string x;
  std::string scheme = "all";
  std::string outcome;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "human";
  std::string out;
};

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InvalidArgument(std::string(what) + ": not a non-negative integer: '" +
                          std::string(text) + "'");
  }
  return value;
}

std::vector<std::uint64_t> parse_moduli(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_uint(item, "--N"));
  if (out.empty()) throw InvalidArgument("--N is required");
  return out;
}

RunConfig to_config(Subcommand sub, const RawOptions& raw) {
  RunConfig c;
  c.subcommand = sub;
  c.seed = raw.seed;
  c.format = raw.format == "json" ? Format::kJson : Format::kHuman;
  if (!raw.out.empty()) c.out_path = raw.out;
  c.moduli = parse_moduli(raw.modulus);
  if (raw.multiplier != "auto") c.multiplier = parse_uint(raw.multiplier, "--a");
  if (!raw.x.empty() && raw.x != "all") c.x = parse_uint(raw.x, "--x");

  if (raw.scheme != "all" && raw.scheme != "ALL") {
    c.schemes = {parse_scheme_kind(raw.scheme)};
  }

  std::string outcome = raw.outcome;
  if (outcome.empty()) outcome = sub == Subcommand::kRun ? "sampled" : "all";
  if (outcome == "all") {
    c.outcome_mode = OutcomeMode::kAll;
  } else if (outcome == "sampled") {
    c.outcome_mode = OutcomeMode::kSampled;
  } else {
    c.outcome_mode = OutcomeMode::kForced;
    c.forced_outcome = parse_bits(outcome);
  }
  return c;
}

void add_common(CLI::App& sub, RawOptions& raw, bool simulates) {
  sub.add_option("--N", raw.modulus,
                 "Odd modulus (compare accepts a comma-separated list)")
      ->required();
  sub.add_option("--a", raw.multiplier,
                 "Multiplier coprime to N, or 'auto' for the smallest a >= 2")
      ->capture_default_str();
  sub.add_option("--scheme", raw.scheme, "A, B, C or all")->capture_default_str();
  sub.add_option("--seed", raw.seed, "Seed for sampled measurement outcomes")
      ->capture_default_str();
  sub.add_option("--format", raw.format, "Standard output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  sub.add_option("--out", raw.out, "Write the JSON report to this path");
  if (simulates) {
    sub.add_option("--x", raw.x, "Input value (default: every x in [0, N))");
    sub.add_option("--outcome", raw.outcome,
                   "Scheme C outcomes: all, sampled, or a bit string (qubit 0 "
                   "first)");
  }
}

bool write_report(const nlohmann::json& report, const std::string& path,
                  std::ostream& err) {
  std::ofstream file(path);
  if (!file) {
    err << "mbu: cannot write report to " << path << '\n';
    return false;
  }
  file << report.dump(2) << '\n';
  return static_cast<bool>(file);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Controlled modular multiplication schemes: simulate, verify, "
               "count"};
  app.require_subcommand(1);
  RawOptions raw;
  CLI::App* run = app.add_subcommand("run", "Simulate schemes on chosen inputs");
  CLI::App* verify =
      app.add_subcommand("verify", "Sweep every input and outcome (N <= 63)");
  CLI::App* count = app.add_subcommand("count", "Gate counts per scheme");
  CLI::App* cmp =
      app.add_subcommand("compare", "Gate-count comparison across moduli");
  add_common(*run, raw, true);
  add_common(*verify, raw, true);
  add_common(*count, raw, false);
  add_common(*cmp, raw, false);

  auto fail_early = [&](const std::string& message) {
    nlohmann::json report = base_report();
    report["error"] = {{"kind", "invalid_input"}, {"message", message}};
    report["overall_pass"] = false;
    err << "mbu: " << message << '\n';
    if (raw.format == "json") out << report.dump(2) << '\n';
    if (!raw.out.empty()) write_report(report, raw.out, err);
    return kExitInvalidInput;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return fail_early(e.what());
  }

  Subcommand sub = Subcommand::kRun;
  if (*verify) sub = Subcommand::kVerify;
  if (*count) sub = Subcommand::kCount;
  if (*cmp) sub = Subcommand::kCompare;

  RunConfig config;
  try {
    config = to_config(sub, raw);
  } catch (const InvalidArgument& e) {
    return fail_early(e.what());
  }

  CommandResult result = execute(config);
  if (config.format == Format::kJson) {
    out << result.report.dump(2) << '\n';
  } else {
    out << result.human;
  }
  if (result.report.contains("error")) {
    err << "mbu: " << result.report["error"]["message"].get<std::string>()
        << '\n';
  }
  if (config.out_path && !write_report(result.report, *config.out_path, err)) {
    return result.exit_code == kExitPass ? kExitFailure : result.exit_code;
  }
  return result.exit_code;
}

}  // namespace mbu::cli
