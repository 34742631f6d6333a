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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "mbu/modarith.hpp"
#include "mbu/program.hpp"
#include "mbu/schemes.hpp"
#include "mbu/simulator.hpp"

namespace mbu {

inline constexpr double kVerifyTolerance = 1e-9;

struct AllOutcomes {};
struct SampledOutcome {
  std::uint64_t seed = 0;
};
struct ForcedOutcome {
  Bits bits;
};
using VerifyMode = std::variant<AllOutcomes, SampledOutcome, ForcedOutcome>;

// One simulated branch checked against the target state.
struct OutcomeCheck {
  Bits outcome;               // measured string; empty for A and B
  double probability = 1.0;   // of that string
  double max_deviation = 0.0; // phase-sensitive, vs expected_target_state
  double residual = 0.0;      // probability mass left on work + scratch
  bool state_ok = false;
  bool hygiene_ok = false;
  bool probability_ok = true;  // p == 2^-n (scheme C)
  // Scheme C: the +-1 relative phase between the |1> and |0> branches with
  // the correction oracle suppressed (0 if it is not a clean +-1), and
  // parity_phase(s, ax mod N).
  std::optional<int> raw_phase;
  std::optional<int> expected_phase;
  bool phase_law_ok = true;
  std::vector<MeasurementRecord> records;

  bool passed() const {
    return state_ok && hygiene_ok && probability_ok && phase_law_ok;
  }
};

struct VerificationReport {
  SchemeKind kind = SchemeKind::kA;
  SchemeParams params;
  std::uint64_t x = 0;
  std::size_t expected_outcomes = 1;
  std::vector<OutcomeCheck> outcomes;
  bool pass = false;
};

// Builds the scheme programs for (kind, params) once and checks any number
// of inputs against them.
class SchemeVerifier {
 public:
  SchemeVerifier(SchemeKind kind, const SchemeParams& params);

  VerificationReport verify(std::uint64_t x, const VerifyMode& mode) const;

  SchemeKind kind() const { return kind_; }
  const RegisterLayout& layout() const { return layout_; }
  const DynamicProgram& program() const { return program_; }

 private:
  OutcomeCheck check_branch(std::uint64_t x, const StateVector& expected,
                            const StateVector& final_state,
                            std::span<const MeasurementRecord> records) const;
  void check_phase_law(std::uint64_t x, OutcomeCheck& check) const;

  SchemeKind kind_;
  SchemeParams params_;
  RegisterLayout layout_;
  DynamicProgram program_;
  std::optional<DynamicProgram> uncorrected_;
};

VerificationReport verify_scheme(SchemeKind kind, const SchemeParams& params,
                                 std::uint64_t x, const VerifyMode& mode);

// Exhaustive check of build_parity_oracle on data (x) y for every y: the
// applied phase, no change on data = 0, self-inverse, and gate counts
// {toffoli: 1, cnot: 2(k-1)} (empty circuit for k = 0).
struct OracleCheck {
  ParityMask mask;
  bool phase_ok = false;
  bool data_zero_untouched = false;
  bool self_inverse = false;
  bool counts_ok = false;

  bool passed() const {
    return phase_ok && data_zero_untouched && self_inverse && counts_ok;
  }
};

OracleCheck check_parity_oracle(const ParityMask& mask);

}  // namespace mbu
