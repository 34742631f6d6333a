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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "mbu/schemes.hpp"
#include "mbu/simulator.hpp"

namespace mbu::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitGuardrail = 3;

// Full sweeps simulate every x and, for scheme C, every outcome.
inline constexpr std::uint64_t kVerifyMaxModulus = 63;
// compare only counts; the bound is the outcome-enumeration limit.
inline constexpr std::uint64_t kCompareMaxModulus = std::uint64_t{1} << 12;

inline constexpr std::uint64_t kDefaultSeed = 1;

enum class Subcommand { kRun, kVerify, kCount, kCompare };
enum class OutcomeMode { kAll, kSampled, kForced };
enum class Format { kHuman, kJson };

struct RunConfig {
  Subcommand subcommand = Subcommand::kRun;
  std::vector<std::uint64_t> moduli;
  std::optional<std::uint64_t> multiplier;  // nullopt: auto
  std::optional<std::uint64_t> x;           // nullopt: sweep
  std::vector<SchemeKind> schemes{std::begin(kAllSchemes), std::end(kAllSchemes)};
  OutcomeMode outcome_mode = OutcomeMode::kAll;
  Bits forced_outcome;
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::kHuman;
  std::optional<std::string> out_path;
};

std::string_view to_string(Subcommand subcommand);
std::string_view to_string(OutcomeMode mode);

// Smallest a >= 2 coprime to N (1 when N has no such a below it).
std::uint64_t auto_multiplier(std::uint64_t modulus);

struct CommandResult {
  nlohmann::json report;
  std::string human;
  int exit_code = kExitPass;
};

// Runs a parsed config. Never throws for bad parameters: errors become a
// report with an "error" entry and the matching exit code.
CommandResult execute(const RunConfig& config);

// Parses argv, executes, prints (human table or JSON on `out`, diagnostics on
// `err`), writes the report to --out when given, and returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

// Drops fields that legitimately differ between identical runs.
nlohmann::json strip_timing(nlohmann::json report);

}  // namespace mbu::cli
