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

#include "mbu/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mbu/errors.hpp"

namespace mbu {
namespace {

void check_measured_qubits(const StateVector& state,
                           std::span<const Qubit> qubits) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] >= state.num_qubits()) {
      throw InvalidArgument("measured qubit " + std::to_string(qubits[i]) +
                            " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) {
        throw InvalidArgument("measured qubit " + std::to_string(qubits[i]) +
                              " listed twice");
      }
    }
  }
}

bool matches(BasisIndex index, std::span<const Qubit> qubits,
             std::span<const std::uint8_t> bits) {
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if (((index >> qubits[k]) & 1U) != bits[k]) return false;
  }
  return true;
}

MeasureResult collapse(StateVector state, std::span<const Qubit> qubits,
                       Bits bits, MeasureMode mode) {
  const double p = outcome_probability(state, qubits, bits);
  if (p < kZeroProbability) {
    throw ZeroProbabilityOutcome("outcome " + format_bits(bits) +
                                 " has probability " + std::to_string(p));
  }
  const double factor = 1.0 / std::sqrt(p);
  state.project([&](BasisIndex i) { return matches(i, qubits, bits); }, factor);
  MeasurementRecord record{{qubits.begin(), qubits.end()}, std::move(bits), p,
                           mode};
  return {std::move(state), std::move(record)};
}

}  // namespace

Bits parse_bits(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("not a bit string: '" + std::string(text) + "'");
    }
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

std::string format_bits(std::span<const std::uint8_t> bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

StateVector init_basis_state(std::size_t num_qubits, std::string_view bitstring,
                             Storage storage) {
  if (bitstring.size() != num_qubits) {
    throw InvalidArgument("bit string of length " +
                          std::to_string(bitstring.size()) + " for " +
                          std::to_string(num_qubits) + " qubits");
  }
  const Bits bits = parse_bits(bitstring);
  BasisIndex index = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    index |= BasisIndex{bits[q]} << q;
  }
  return StateVector::basis(num_qubits, index, storage);
}

void apply_gate(StateVector& state, const Gate& gate,
                std::span<const std::uint8_t> classical_bits) {
  validate_gate(gate, state.num_qubits());
  if (gate.classical_condition) {
    const std::size_t c = *gate.classical_condition;
    if (c >= classical_bits.size()) {
      throw InvalidArgument("classical bit " + std::to_string(c) +
                            " does not exist");
    }
    if (!classical_bits[c]) return;
  }
  state.apply(gate);
}

void apply_circuit(StateVector& state, const Circuit& circuit,
                   std::span<const std::uint8_t> classical_bits) {
  if (circuit.num_qubits() != state.num_qubits()) {
    throw InvalidArgument("circuit width " +
                          std::to_string(circuit.num_qubits()) +
                          " does not match state width " +
                          std::to_string(state.num_qubits()));
  }
  for (const Gate& g : circuit.gates()) apply_gate(state, g, classical_bits);
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double outcome_probability(const StateVector& state,
                           std::span<const Qubit> qubits,
                           std::span<const std::uint8_t> bits) {
  check_measured_qubits(state, qubits);
  if (bits.size() != qubits.size()) {
    throw InvalidArgument("outcome has " + std::to_string(bits.size()) +
                          " bits for " + std::to_string(qubits.size()) +
                          " qubits");
  }
  double p = 0.0;
  state.for_each_nonzero([&](BasisIndex i, Amplitude a) {
    if (matches(i, qubits, bits)) p += std::norm(a);
  });
  return p;
}

MeasureResult measure(StateVector state, std::span<const Qubit> qubits,
                      const MeasureSpec& spec) {
  if (const auto* forced = std::get_if<Forced>(&spec)) {
    check_measured_qubits(state, qubits);
    if (forced->bits.size() != qubits.size()) {
      throw InvalidArgument("forced outcome has " +
                            std::to_string(forced->bits.size()) + " bits for " +
                            std::to_string(qubits.size()) + " qubits");
    }
    return collapse(std::move(state), qubits, forced->bits, MeasureMode::kForced);
  }
  std::mt19937_64 rng(std::get<Sampled>(spec).seed);
  return measure(std::move(state), qubits, rng);
}

MeasureResult measure(StateVector state, std::span<const Qubit> qubits,
                      std::mt19937_64& rng) {
  check_measured_qubits(state, qubits);
  // Inverse-CDF walk over nonzero amplitudes in ascending index order.
  const double total = state.norm() * state.norm();
  const double threshold = uniform_unit(rng) * total;
  double cumulative = 0.0;
  BasisIndex chosen = 0;
  bool found = false;
  state.for_each_nonzero([&](BasisIndex i, Amplitude a) {
    if (found) return;
    cumulative += std::norm(a);
    chosen = i;
    if (cumulative > threshold) found = true;
  });
  Bits bits(qubits.size());
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    bits[k] = static_cast<std::uint8_t>((chosen >> qubits[k]) & 1U);
  }
  return collapse(std::move(state), qubits, std::move(bits),
                  MeasureMode::kSampled);
}

double max_amplitude_deviation(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw InvalidArgument("cannot compare states of " +
                          std::to_string(a.num_qubits()) + " and " +
                          std::to_string(b.num_qubits()) + " qubits");
  }
  double worst = 0.0;
  a.for_each_nonzero([&](BasisIndex i, Amplitude x) {
    worst = std::max(worst, std::abs(x - b.amplitude(i)));
  });
  b.for_each_nonzero([&](BasisIndex i, Amplitude y) {
    if (a.amplitude(i) == Amplitude{}) worst = std::max(worst, std::abs(y));
  });
  return worst;
}

double max_amplitude_deviation_up_to_phase(const StateVector& a,
                                           const StateVector& b,
                                           double tolerance) {
  if (a.num_qubits() != b.num_qubits()) {
    throw InvalidArgument("cannot compare states of " +
                          std::to_string(a.num_qubits()) + " and " +
                          std::to_string(b.num_qubits()) + " qubits");
  }
  bool have_pivot = false;
  BasisIndex pivot = 0;
  a.for_each_nonzero([&](BasisIndex i, Amplitude x) {
    if (!have_pivot && std::abs(x) > tolerance) {
      have_pivot = true;
      pivot = i;
    }
  });
  if (!have_pivot) return max_amplitude_deviation(a, b);
  const Amplitude pa = a.amplitude(pivot);
  const Amplitude pb = b.amplitude(pivot);
  if (std::abs(pb) <= tolerance) return std::numeric_limits<double>::infinity();
  const Amplitude rotation = (pa / std::abs(pa)) / (pb / std::abs(pb));
  double worst = 0.0;
  a.for_each_nonzero([&](BasisIndex i, Amplitude x) {
    worst = std::max(worst, std::abs(x - rotation * b.amplitude(i)));
  });
  b.for_each_nonzero([&](BasisIndex i, Amplitude y) {
    if (a.amplitude(i) == Amplitude{}) worst = std::max(worst, std::abs(y));
  });
  return worst;
}

bool states_equal_exact(const StateVector& a, const StateVector& b,
                        double tolerance) {
  return max_amplitude_deviation(a, b) < tolerance;
}

bool states_equal(const StateVector& a, const StateVector& b,
                  double tolerance) {
  return max_amplitude_deviation_up_to_phase(a, b, tolerance) < tolerance;
}

double register_excitation(const StateVector& state,
                           std::span<const Qubit> qubits) {
  BasisIndex mask = 0;
  for (Qubit q : qubits) {
    if (q >= state.num_qubits()) {
      throw InvalidArgument("qubit " + std::to_string(q) + " out of range");
    }
    mask |= BasisIndex{1} << q;
  }
  double mass = 0.0;
  state.for_each_nonzero([&](BasisIndex i, Amplitude a) {
    if (i & mask) mass += std::norm(a);
  });
  return mass;
}

bool register_is_zero(const StateVector& state, std::span<const Qubit> qubits,
                      double tolerance) {
  return register_excitation(state, qubits) < tolerance;
}

}  // namespace mbu
