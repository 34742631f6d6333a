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
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mbu/circuit.hpp"
#include "mbu/state_vector.hpp"

namespace mbu {

// A bit string; element i is '0' or '1' as 0 or 1.
using Bits = std::vector<std::uint8_t>;

// "0110" -> {0,1,1,0}. Throws InvalidArgument on other characters.
Bits parse_bits(std::string_view text);
std::string format_bits(std::span<const std::uint8_t> bits);

inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kZeroProbability = 1e-12;

// Character i of bitstring sets qubit i.
StateVector init_basis_state(std::size_t num_qubits, std::string_view bitstring,
                             Storage storage = Storage::kAdaptive);

// Applies gate, or leaves the state untouched when its classical condition
// refers to a 0 bit.
void apply_gate(StateVector& state, const Gate& gate,
                std::span<const std::uint8_t> classical_bits = {});
void apply_circuit(StateVector& state, const Circuit& circuit,
                   std::span<const std::uint8_t> classical_bits = {});

enum class MeasureMode { kSampled, kForced };

struct MeasurementRecord {
  std::vector<Qubit> qubits;
  Bits outcome;  // aligned with qubits
  double probability = 0.0;
  MeasureMode mode = MeasureMode::kSampled;
};

struct Sampled {
  std::uint64_t seed = 0;
};
struct Forced {
  Bits bits;
};
using MeasureSpec = std::variant<Sampled, Forced>;

struct MeasureResult {
  StateVector state;
  MeasurementRecord record;
};

// Uniform variate in [0, 1) from one 64-bit draw: (draw >> 11) * 2^-53.
double uniform_unit(std::mt19937_64& rng);

// Probability of reading `bits` on `qubits`.
double outcome_probability(const StateVector& state,
                           std::span<const Qubit> qubits,
                           std::span<const std::uint8_t> bits);

// Computational-basis measurement. Sampled mode draws from
// std::mt19937_64(seed); forced mode post-selects and reports the true
// pre-collapse probability, throwing ZeroProbabilityOutcome below 1e-12.
MeasureResult measure(StateVector state, std::span<const Qubit> qubits,
                      const MeasureSpec& spec);
// Sampled measurement that continues an existing generator stream.
MeasureResult measure(StateVector state, std::span<const Qubit> qubits,
                      std::mt19937_64& rng);

// Largest |a_i - b_i| over all basis states.
double max_amplitude_deviation(const StateVector& a, const StateVector& b);
// Same, after rotating b by the phase that aligns it with a on the first
// amplitude of a whose magnitude exceeds tolerance.
double max_amplitude_deviation_up_to_phase(const StateVector& a,
                                           const StateVector& b,
                                           double tolerance);

bool states_equal_exact(const StateVector& a, const StateVector& b,
                        double tolerance = kStateTolerance);
bool states_equal(const StateVector& a, const StateVector& b,
                  double tolerance = kStateTolerance);

// Probability mass on basis states where any listed qubit is 1.
double register_excitation(const StateVector& state,
                           std::span<const Qubit> qubits);
bool register_is_zero(const StateVector& state, std::span<const Qubit> qubits,
                      double tolerance = kStateTolerance);

}  // namespace mbu
