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
#include <string>
#include <vector>

#include "mbu/circuit.hpp"
#include "mbu/modarith.hpp"
#include "mbu/program.hpp"
#include "mbu/schemes.hpp"

namespace mbu {

// Gate tallies by traversal. total_gates = toffoli + cnot + cz + single_qubit
// + cswap_native; measurements and classically_conditioned are side tallies.
struct ResourceCount {
  std::size_t toffoli = 0;
  std::size_t cnot = 0;
  std::size_t cz = 0;
  std::size_t single_qubit = 0;  // X, H, Z
  std::size_t cswap_native = 0;
  std::size_t measurements = 0;
  std::size_t classically_conditioned = 0;
  std::size_t total_gates = 0;

  ResourceCount& operator+=(const ResourceCount& other);
  friend ResourceCount operator+(ResourceCount a, const ResourceCount& b) {
    return a += b;
  }
  friend bool operator==(const ResourceCount&, const ResourceCount&) = default;
};

struct MeanCount {
  double toffoli = 0;
  double cnot = 0;
  double cz = 0;
  double single_qubit = 0;
  double cswap_native = 0;
  double classically_conditioned = 0;
  double total_gates = 0;
};

ResourceCount count_circuit(const Circuit& circuit);

struct ComparisonRow {
  SchemeKind scheme = SchemeKind::kA;
  // Unitary stages + measurements + the worst-case synthesized stage.
  ResourceCount counts;
  // Synthesized stages only; set when the program has any.
  std::optional<ResourceCount> worst_case_stage2;
  std::optional<MeanCount> mean_stage2;
  Bits worst_case_outcome;
  std::string notes;
};

// Largest number of measured bits count_program will enumerate.
inline constexpr std::size_t kMaxEnumeratedBits = 12;

// Unitary stages are counted once; synthesis stages are counted for every
// combination of prior measurement outcomes, reporting the worst case (most
// Toffolis, then most gates) and the uniform mean. GuardrailExceeded past
// kMaxEnumeratedBits measured bits.
ComparisonRow count_program(const DynamicProgram& program,
                            const SchemeParams& params, SchemeKind scheme);

struct SavingsSummary {
  std::size_t width = 0;
  std::int64_t toffoli_a = 0;
  std::int64_t toffoli_b = 0;
  std::int64_t toffoli_c = 0;

  // (i) B - C = toffoli(C-Swap) - toffoli(worst oracle) = n - 1
  std::int64_t b_minus_c = 0;
  std::int64_t cswap_toffoli = 0;
  std::int64_t oracle_toffoli = 0;
  bool identity_i = false;

  // (ii) A - C = 2 [toffoli(C-U_M) - toffoli(U_M)] - toffoli(C-cp) - 1
  std::int64_t a_minus_c = 0;
  std::int64_t cmac_minus_mac = 0;
  std::int64_t ccopy_toffoli = 0;
  std::int64_t expected_a_minus_c = 0;
  bool identity_ii = false;

  // (iii) A - C > 0
  bool a_minus_c_positive = false;
};

struct SchemeComparison {
  SchemeParams params;
  std::vector<ComparisonRow> rows;  // A, B, C
  SavingsSummary savings;
};

SchemeComparison compare_schemes(const SchemeParams& params);

// True when every A - C delta is positive and the deltas never decrease as
// n grows (comparisons are ordered by n first).
bool savings_trend_holds(std::vector<SchemeComparison> comparisons);

}  // namespace mbu
