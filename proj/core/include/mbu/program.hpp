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
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mbu/circuit.hpp"
#include "mbu/simulator.hpp"
#include "mbu/state_vector.hpp"

namespace mbu {

struct UnitaryStage {
  std::string label;
  Circuit circuit;
};

struct MeasurementStage {
  std::string label;
  std::vector<Qubit> qubits;
};

// Receives every record produced so far (in order) and returns the circuit to
// run next. Classical bits are numbered across records in the same order.
using SynthesisFn =
    std::function<Circuit(std::span<const MeasurementRecord> records)>;

struct SynthesisStage {
  std::string label;
  SynthesisFn synthesize;
};

using Stage = std::variant<UnitaryStage, MeasurementStage, SynthesisStage>;

// A staged circuit with mid-circuit measurement and classically synthesized
// continuations. Immutable once built; copies share nothing mutable.
class DynamicProgram {
 public:
  explicit DynamicProgram(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Stage>& stages() const { return stages_; }
  std::size_t measurement_count() const;

  DynamicProgram& add_unitary(std::string label, Circuit circuit);
  DynamicProgram& add_measurement(std::string label, std::vector<Qubit> qubits);
  DynamicProgram& add_synthesis(std::string label, SynthesisFn fn);

 private:
  std::size_t num_qubits_;
  std::vector<Stage> stages_;
};

struct ProgramResult {
  StateVector state;
  std::vector<MeasurementRecord> records;
};

// Classical bit store implied by a record list.
Bits classical_bits(std::span<const MeasurementRecord> records);

// Runs every stage in order. Measurement j uses forced_outcomes[j] when
// j < forced_outcomes.size(); later ones are sampled from a single
// std::mt19937_64(seed) stream.
ProgramResult run_program(const DynamicProgram& program, StateVector initial,
                          std::uint64_t seed,
                          std::span<const Bits> forced_outcomes = {});

// Branches over every measurement outcome with probability >= 1e-12 and calls
// visit(final_state, records) once per leaf, in ascending outcome order.
using BranchVisitor = std::function<void(
    const StateVector& state, std::span<const MeasurementRecord> records)>;
void enumerate_outcomes(const DynamicProgram& program, const StateVector& initial,
                        const BranchVisitor& visit);

}  // namespace mbu
