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

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <tuple>

#include "cli.hpp"
#include "mbu/errors.hpp"
#include "mbu/modarith.hpp"
#include "mbu/resources.hpp"
#include "mbu/verify.hpp"
#include "report.hpp"

namespace mbu::cli {
namespace {

using nlohmann::json;

json counts_json(const ResourceCount& c) {
  return {{"toffoli", c.toffoli},
          {"cnot", c.cnot},
          {"cz", c.cz},
          {"single_qubit", c.single_qubit},
          {"cswap_native", c.cswap_native},
          {"measurements", c.measurements},
          {"classically_conditioned", c.classically_conditioned},
          {"total_gates", c.total_gates}};
}

json mean_json(const MeanCount& c) {
  return {{"toffoli", c.toffoli},
          {"cnot", c.cnot},
          {"cz", c.cz},
          {"single_qubit", c.single_qubit},
          {"cswap_native", c.cswap_native},
          {"classically_conditioned", c.classically_conditioned},
          {"total_gates", c.total_gates}};
}

json row_json(const SchemeParams& p, const ComparisonRow& row) {
  json j = {{"N", p.modulus},
            {"a", p.multiplier},
            {"width", p.width},
            {"scheme", std::string(to_string(row.scheme))},
            {"counts", counts_json(row.counts)},
            {"notes", row.notes}};
  if (row.worst_case_stage2) {
    j["worst_case_stage2"] = counts_json(*row.worst_case_stage2);
    j["worst_case_outcome"] = format_bits(row.worst_case_outcome);
  }
  if (row.mean_stage2) j["mean_stage2"] = mean_json(*row.mean_stage2);
  return j;
}

json savings_json(const SchemeParams& p, const SavingsSummary& s) {
  return {{"N", p.modulus},
          {"a", p.multiplier},
          {"width", s.width},
          {"toffoli_a", s.toffoli_a},
          {"toffoli_b", s.toffoli_b},
          {"toffoli_c", s.toffoli_c},
          {"b_minus_c", s.b_minus_c},
          {"cswap_toffoli", s.cswap_toffoli},
          {"oracle_toffoli", s.oracle_toffoli},
          {"identity_i", s.identity_i},
          {"a_minus_c", s.a_minus_c},
          {"cmac_minus_mac", s.cmac_minus_mac},
          {"ccopy_toffoli", s.ccopy_toffoli},
          {"expected_a_minus_c", s.expected_a_minus_c},
          {"identity_ii", s.identity_ii},
          {"a_minus_c_positive", s.a_minus_c_positive}};
}

json phase_json(const std::optional<int>& phase) {
  return phase ? json(*phase) : json(nullptr);
}

json config_json(const RunConfig& c) {
  json schemes = json::array();
  for (auto k : c.schemes) schemes.push_back(std::string(to_string(k)));
  json outcome = {{"mode", std::string(to_string(c.outcome_mode))}};
  if (c.outcome_mode == OutcomeMode::kForced) {
    outcome["bits"] = format_bits(c.forced_outcome);
  }
  return {{"subcommand", std::string(to_string(c.subcommand))},
          {"N", c.moduli},
          {"a", c.multiplier ? json(*c.multiplier) : json("auto")},
          {"x", c.x ? json(*c.x) : json("all")},
          {"scheme", schemes},
          {"outcome", outcome},
          {"seed", c.seed},
          {"format", c.format == Format::kJson ? "json" : "human"}};
}

SchemeParams resolve_params(std::uint64_t modulus,
                            const std::optional<std::uint64_t>& multiplier) {
  if (modulus < 3 || modulus % 2 == 0) {
    throw InvalidArgument("N must be odd and at least 3, got " +
                          std::to_string(modulus));
  }
  return SchemeParams::make(modulus,
                            multiplier ? *multiplier : auto_multiplier(modulus));
}

std::uint64_t single_modulus(const RunConfig& c) {
  if (c.moduli.size() != 1) {
    throw InvalidArgument(std::string(to_string(c.subcommand)) +
                          " takes exactly one N");
  }
  return c.moduli.front();
}

void require_at_most(std::uint64_t modulus, std::uint64_t limit,
                     std::string_view what) {
  if (modulus > limit) {
    throw GuardrailExceeded(std::string(what) + " is limited to N <= " +
                            std::to_string(limit) + ", got N = " +
                            std::to_string(modulus));
  }
}

struct CaseKey {
  std::string scheme;
  std::uint64_t x;
  std::string outcome;
  auto operator<=>(const CaseKey&) const = default;
};

CaseKey key_of(const json& c) {
  return {c["scheme"].get<std::string>(), c["x"].get<std::uint64_t>(),
          c["outcome"].get<std::string>()};
}

// Simulation for run and verify. Sampled cases draw their seeds, in sweep
// order, from one generator seeded by --seed.
bool simulate_cases(const RunConfig& c, const SchemeParams& p, json& report) {
  if (c.x && *c.x >= p.modulus) {
    throw InvalidArgument("x must be below N, got " + std::to_string(*c.x));
  }
  if (c.outcome_mode == OutcomeMode::kForced &&
      c.forced_outcome.size() != p.width) {
    throw InvalidArgument("forced outcome needs " + std::to_string(p.width) +
                          " bits, got " + std::to_string(c.forced_outcome.size()));
  }
  const bool with_correction = c.subcommand == Subcommand::kRun;
  std::mt19937_64 seeds(c.seed);
  bool all_pass = true;
  json cases = json::array();
  for (SchemeKind kind : c.schemes) {
    const SchemeVerifier verifier(kind, p);
    const std::uint64_t first = c.x ? *c.x : 0;
    const std::uint64_t last = c.x ? *c.x + 1 : p.modulus;
    for (std::uint64_t x = first; x < last; ++x) {
      VerifyMode mode = AllOutcomes{};
      std::optional<std::uint64_t> case_seed;
      if (kind == SchemeKind::kC) {
        if (c.outcome_mode == OutcomeMode::kSampled) {
          case_seed = seeds();
          mode = SampledOutcome{*case_seed};
        } else if (c.outcome_mode == OutcomeMode::kForced) {
          mode = ForcedOutcome{c.forced_outcome};
        }
      }
      const VerificationReport r = verifier.verify(x, mode);
      all_pass = all_pass && r.pass;
      if (r.outcomes.size() != r.expected_outcomes) {
        report["errors"].push_back(
            std::string(to_string(kind)) + " x=" + std::to_string(x) + ": " +
            std::to_string(r.outcomes.size()) + " of " +
            std::to_string(r.expected_outcomes) + " outcomes reachable");
      }
      for (const auto& o : r.outcomes) {
        json entry = {{"scheme", std::string(to_string(kind))},
                      {"x", x},
                      {"ax", (p.multiplier * x) % p.modulus},
                      {"outcome", format_bits(o.outcome)},
                      {"probability", o.probability},
                      {"max_deviation", o.max_deviation},
                      {"residual", o.residual},
                      {"state_ok", o.state_ok},
                      {"hygiene_ok", o.hygiene_ok},
                      {"probability_ok", o.probability_ok},
                      {"phase_law_ok", o.phase_law_ok},
                      {"raw_phase", phase_json(o.raw_phase)},
                      {"expected_phase", phase_json(o.expected_phase)},
                      {"pass", o.passed()}};
        if (case_seed) entry["seed"] = *case_seed;
        if (with_correction && kind == SchemeKind::kC) {
          json gates = json::array();
          const Circuit fix =
              build_correction(ParityMask(o.outcome), 0, verifier.layout());
          for (const Gate& g : fix.gates()) gates.push_back(describe(g));
          entry["correction"] = gates;
        }
        cases.push_back(std::move(entry));
      }
    }
  }
  std::stable_sort(cases.begin(), cases.end(), [](const json& a, const json& b) {
    return key_of(a) < key_of(b);
  });
  report["cases"] = std::move(cases);
  return all_pass;
}

bool check_oracles(std::size_t width, json& report) {
  json failed = json::array();
  const std::uint64_t masks = std::uint64_t{1} << width;
  for (std::uint64_t v = 0; v < masks; ++v) {
    const auto mask = ParityMask::from_value(v, width);
    if (!check_parity_oracle(mask).passed()) {
      failed.push_back(format_bits(mask.bits()));
    }
  }
  report["oracle_checks"] = {{"width", width},
                             {"masks_checked", masks},
                             {"failed", failed},
                             {"pass", failed.empty()}};
  return failed.empty();
}

void count_resources(const RunConfig& c, const SchemeParams& p, json& report) {
  const auto layout = RegisterLayout::make(p.width);
  json rows = json::array();
  for (SchemeKind kind : c.schemes) {
    rows.push_back(row_json(p, count_program(build_scheme(kind, p, layout), p, kind)));
  }
  report["resources"] = std::move(rows);
}

bool compare(const RunConfig& c, json& report) {
  if (c.moduli.empty()) throw InvalidArgument("compare needs at least one N");
  std::vector<SchemeParams> params;
  for (std::uint64_t n : c.moduli) {
    require_at_most(n, kCompareMaxModulus, "compare");
    params.push_back(resolve_params(n, c.multiplier));
  }
  std::vector<SchemeComparison> comparisons;
  json rows = json::array();
  json savings = json::array();
  bool pass = true;
  for (const auto& p : params) {
    comparisons.push_back(compare_schemes(p));
    const auto& cmp = comparisons.back();
    for (const auto& row : cmp.rows) rows.push_back(row_json(p, row));
    savings.push_back(savings_json(p, cmp.savings));
    pass = pass && cmp.savings.identity_i && cmp.savings.identity_ii &&
           cmp.savings.a_minus_c_positive;
  }
  const bool trend = savings_trend_holds(comparisons);
  report["resources"] = std::move(rows);
  report["savings"] = std::move(savings);
  report["savings_trend"] = trend;
  return pass && trend;
}

bool dispatch(const RunConfig& c, json& report) {
  if (c.schemes.empty()) throw InvalidArgument("no scheme selected");
  switch (c.subcommand) {
    case Subcommand::kRun: {
      const std::uint64_t n = single_modulus(c);
      require_at_most(n, kCompareMaxModulus, "run");
      const auto p = resolve_params(n, c.multiplier);
      report["resolved"] = {{"N", p.modulus}, {"a", p.multiplier}, {"width", p.width}};
      return simulate_cases(c, p, report);
    }
    case Subcommand::kVerify: {
      const std::uint64_t n = single_modulus(c);
      require_at_most(n, kVerifyMaxModulus, "verify");
      const auto p = resolve_params(n, c.multiplier);
      report["resolved"] = {{"N", p.modulus}, {"a", p.multiplier}, {"width", p.width}};
      bool pass = simulate_cases(c, p, report);
      pass = check_oracles(p.width, report) && pass;
      count_resources(c, p, report);
      return pass;
    }
    case Subcommand::kCount: {
      const std::uint64_t n = single_modulus(c);
      require_at_most(n, kCompareMaxModulus, "count");
      const auto p = resolve_params(n, c.multiplier);
      report["resolved"] = {{"N", p.modulus}, {"a", p.multiplier}, {"width", p.width}};
      count_resources(c, p, report);
      return true;
    }
    case Subcommand::kCompare:
      return compare(c, report);
  }
  throw std::logic_error("unknown subcommand");
}

}  // namespace

std::string_view to_string(Subcommand subcommand) {
  switch (subcommand) {
    case Subcommand::kRun: return "run";
    case Subcommand::kVerify: return "verify";
    case Subcommand::kCount: return "count";
    case Subcommand::kCompare: return "compare";
  }
  return "?";
}

std::string_view to_string(OutcomeMode mode) {
  switch (mode) {
    case OutcomeMode::kAll: return "all";
    case OutcomeMode::kSampled: return "sampled";
    case OutcomeMode::kForced: return "forced";
  }
  return "?";
}

std::uint64_t auto_multiplier(std::uint64_t modulus) {
  for (std::uint64_t a = 2; a < modulus; ++a) {
    if (gcd(a, modulus) == 1) return a;
  }
  return 1;
}

CommandResult execute(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  json& report = result.report;
  report = base_report();
  report["config"] = config_json(config);
  report["errors"] = json::array();
  bool pass = false;
  try {
    pass = dispatch(config, report);
    result.exit_code = pass ? kExitPass : kExitFailure;
  } catch (const GuardrailExceeded& e) {
    report["error"] = {{"kind", "guardrail"}, {"message", e.what()}};
    result.exit_code = kExitGuardrail;
  } catch (const InvalidArgument& e) {
    report["error"] = {{"kind", "invalid_input"}, {"message", e.what()}};
    result.exit_code = kExitInvalidInput;
  } catch (const NoInverseError& e) {
    report["error"] = {{"kind", "invalid_input"}, {"message", e.what()}};
    result.exit_code = kExitInvalidInput;
  } catch (const std::exception& e) {
    report["error"] = {{"kind", "failure"}, {"message", e.what()}};
    result.exit_code = kExitFailure;
  }
  pass = pass && report["errors"].empty();
  if (!pass && result.exit_code == kExitPass) result.exit_code = kExitFailure;
  report["overall_pass"] = pass;
  report["wall_clock_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  result.human = render_human(report);
  return result;
}

nlohmann::json strip_timing(nlohmann::json report) {
  report.erase("wall_clock_seconds");
  return report;
}

}  // namespace mbu::cli
