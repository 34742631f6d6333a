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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mbu/circuit.hpp"
#include "mbu/modarith.hpp"
#include "mbu/program.hpp"
#include "mbu/simulator.hpp"

namespace mbu {

// A: two controlled multiply-accumulates around a controlled swap.
// B: controlled copy, then uncontrolled multiply-accumulates and two swaps.
// C: B's first half, one more multiply-accumulate, then Walsh-Hadamard,
//    measurement of the work register and a synthesized parity correction.
enum class SchemeKind { kA, kB, kC };

inline constexpr SchemeKind kAllSchemes[] = {SchemeKind::kA, SchemeKind::kB,
                                             SchemeKind::kC};

std::string_view to_string(SchemeKind kind);
// Accepts "A", "B", "C" (case-insensitive).
SchemeKind parse_scheme_kind(std::string_view text);

// Selected bit positions of a measured string. bits[i] is work qubit i;
// positions lists the set bits in ascending order.
class ParityMask {
 public:
  ParityMask() = default;
  explicit ParityMask(Bits bits);
  static ParityMask from_string(std::string_view text) {
    return ParityMask(parse_bits(text));
  }
  static ParityMask from_value(std::uint64_t value, std::size_t width);

  const Bits& bits() const { return bits_; }
  const std::vector<std::size_t>& positions() const { return positions_; }
  std::size_t width() const { return bits_.size(); }
  bool empty() const { return positions_.empty(); }
  std::uint64_t value() const;

 private:
  Bits bits_;
  std::vector<std::size_t> positions_;
};

// (-1)^(s . y) with the dot product taken mod 2 over the mask positions.
int parity_phase(const ParityMask& mask, std::uint64_t y);

// Phase oracle |d>|y> -> (-1)^(d * s.y) |d>|y>, given the oracle qubit in
// (|0> - |1>)/sqrt2: CNOT chain over the mask positions, one Toffoli from
// (data, last position) onto the oracle qubit, then the chain mirrored.
Circuit build_parity_oracle(const ParityMask& mask, Qubit data,
                            std::span<const Qubit> target, Qubit oracle,
                            std::size_t num_qubits);

// Classical constants each scheme multiplies by, already reduced mod N.
struct SchemeConstants {
  std::uint64_t multiplier;            // a
  std::uint64_t multiplier_minus_one;  // a - 1
  std::uint64_t neg_inverse;           // -a^-1
  std::uint64_t neg_inverse_minus_one; // -(a^-1 - 1)

  static SchemeConstants make(const SchemeParams& params);
};

struct SchemeStep {
  std::string label;
  Circuit circuit;
};

// The unitary portion of a scheme as labelled steps. For C this ends with
// the Walsh-Hadamard on the work register.
std::vector<SchemeStep> scheme_steps(SchemeKind kind, const SchemeParams& params,
                                     const RegisterLayout& layout);

struct SchemeOptions {
  // Scheme C only: when false the synthesized stage resets the work register
  // but skips the phase oracle, exposing the raw (-1)^(s . ax) branch phase.
  bool apply_correction = true;
};

// Stage-2 circuit for measured string s. X on every measured-1 work qubit
// conditioned on its classical bit (classical_offset + i), then for nonempty
// s: oracle qubit X,H; parity oracle on the x register; H,X.
Circuit build_correction(const ParityMask& mask, std::size_t classical_offset,
                         const RegisterLayout& layout, bool apply_oracle = true);

DynamicProgram build_scheme_a(const SchemeParams& params,
                              const RegisterLayout& layout);
DynamicProgram build_scheme_b(const SchemeParams& params,
                              const RegisterLayout& layout);
DynamicProgram build_scheme_c(const SchemeParams& params,
                              const RegisterLayout& layout,
                              SchemeOptions options = {});
DynamicProgram build_scheme(SchemeKind kind, const SchemeParams& params,
                            const RegisterLayout& layout,
                            SchemeOptions options = {});

// |0>|x>|0>_w for the layout.
StateVector scheme_input_state(const SchemeParams& params, std::uint64_t x,
                               const RegisterLayout& layout);
// (|0>|x>|0>_w + |1>|ax mod N>|0>_w) / sqrt2, scratch zero.
StateVector expected_target_state(const SchemeParams& params, std::uint64_t x,
                                  const RegisterLayout& layout);

}  // namespace mbu
