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

#include "mbu/program.hpp"

#include <random>
#include <utility>

#include "mbu/errors.hpp"

namespace mbu {
namespace {

Circuit synthesize_checked(const SynthesisStage& stage, std::size_t num_qubits,
                           std::span<const MeasurementRecord> records) {
  Circuit c = stage.synthesize(records);
  if (c.num_qubits() != num_qubits) {
    throw InvalidArgument("synthesis stage '" + stage.label + "' returned a " +
                          std::to_string(c.num_qubits()) +
                          "-qubit circuit for a " + std::to_string(num_qubits) +
                          "-qubit program");
  }
  return c;
}

Bits outcome_from_index(std::uint64_t value, std::size_t width) {
  Bits bits(width);
  for (std::size_t k = 0; k < width; ++k) bits[k] = (value >> k) & 1U;
  return bits;
}

void branch(const DynamicProgram& program, std::size_t stage_index,
            StateVector state, std::vector<MeasurementRecord>& records,
            const BranchVisitor& visit) {
  const auto& stages = program.stages();
  for (; stage_index < stages.size(); ++stage_index) {
    const Stage& stage = stages[stage_index];
    if (const auto* u = std::get_if<UnitaryStage>(&stage)) {
      apply_circuit(state, u->circuit, classical_bits(records));
    } else if (const auto* s = std::get_if<SynthesisStage>(&stage)) {
      const Circuit c = synthesize_checked(*s, program.num_qubits(), records);
      apply_circuit(state, c, classical_bits(records));
    } else {
      const auto& m = std::get<MeasurementStage>(stage);
      const std::uint64_t outcomes = std::uint64_t{1} << m.qubits.size();
      for (std::uint64_t v = 0; v < outcomes; ++v) {
        Bits bits = outcome_from_index(v, m.qubits.size());
        if (outcome_probability(state, m.qubits, bits) < kZeroProbability) {
          continue;
        }
        auto result = measure(state, m.qubits, Forced{std::move(bits)});
        records.push_back(std::move(result.record));
        branch(program, stage_index + 1, std::move(result.state), records,
               visit);
        records.pop_back();
      }
      return;
    }
  }
  visit(state, records);
}

}  // namespace

std::size_t DynamicProgram::measurement_count() const {
  std::size_t n = 0;
  for (const auto& s : stages_) n += std::holds_alternative<MeasurementStage>(s);
  return n;
}

DynamicProgram& DynamicProgram::add_unitary(std::string label, Circuit circuit) {
  if (circuit.num_qubits() != num_qubits_) {
    throw InvalidArgument("stage '" + label + "' has width " +
                          std::to_string(circuit.num_qubits()) + ", program has " +
                          std::to_string(num_qubits_));
  }
  stages_.emplace_back(UnitaryStage{std::move(label), std::move(circuit)});
  return *this;
}

DynamicProgram& DynamicProgram::add_measurement(std::string label,
                                                std::vector<Qubit> qubits) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] >= num_qubits_) {
      throw InvalidArgument("stage '" + label + "' measures qubit " +
                            std::to_string(qubits[i]) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) {
        throw InvalidArgument("stage '" + label + "' measures qubit " +
                              std::to_string(qubits[i]) + " twice");
      }
    }
  }
  stages_.emplace_back(MeasurementStage{std::move(label), std::move(qubits)});
  return *this;
}

DynamicProgram& DynamicProgram::add_synthesis(std::string label, SynthesisFn fn) {
  if (!fn) throw InvalidArgument("stage '" + label + "' has no synthesis function");
  stages_.emplace_back(SynthesisStage{std::move(label), std::move(fn)});
  return *this;
}

Bits classical_bits(std::span<const MeasurementRecord> records) {
  Bits bits;
  for (const auto& r : records) {
    bits.insert(bits.end(), r.outcome.begin(), r.outcome.end());
  }
  return bits;
}

ProgramResult run_program(const DynamicProgram& program, StateVector initial,
                          std::uint64_t seed,
                          std::span<const Bits> forced_outcomes) {
  if (initial.num_qubits() != program.num_qubits()) {
    throw InvalidArgument("initial state has " +
                          std::to_string(initial.num_qubits()) +
                          " qubits, program expects " +
                          std::to_string(program.num_qubits()));
  }
  std::mt19937_64 rng(seed);
  ProgramResult result{std::move(initial), {}};
  Bits bits;
  for (const Stage& stage : program.stages()) {
    if (const auto* u = std::get_if<UnitaryStage>(&stage)) {
      apply_circuit(result.state, u->circuit, bits);
    } else if (const auto* s = std::get_if<SynthesisStage>(&stage)) {
      apply_circuit(result.state,
                    synthesize_checked(*s, program.num_qubits(), result.records),
                    bits);
    } else {
      const auto& m = std::get<MeasurementStage>(stage);
      const std::size_t j = result.records.size();
      auto measured =
          j < forced_outcomes.size()
              ? measure(std::move(result.state), m.qubits, Forced{forced_outcomes[j]})
              : measure(std::move(result.state), m.qubits, rng);
      result.state = std::move(measured.state);
      bits.insert(bits.end(), measured.record.outcome.begin(),
                  measured.record.outcome.end());
      result.records.push_back(std::move(measured.record));
    }
  }
  return result;
}

void enumerate_outcomes(const DynamicProgram& program, const StateVector& initial,
                        const BranchVisitor& visit) {
  if (initial.num_qubits() != program.num_qubits()) {
    throw InvalidArgument("initial state has " +
                          std::to_string(initial.num_qubits()) +
                          " qubits, program expects " +
                          std::to_string(program.num_qubits()));
  }
  std::vector<MeasurementRecord> records;
  branch(program, 0, initial, records, visit);
}

}  // namespace mbu
