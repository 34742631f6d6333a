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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mbu {

using Qubit = std::size_t;
using BasisIndex = std::uint64_t;

enum class GateKind { kX, kH, kZ, kCnot, kCz, kToffoli, kCswap };

std::size_t arity(GateKind kind);
std::string_view to_string(GateKind kind);

// Operand order by kind:
//   X/H/Z     {target}
//   CNOT      {control, target}
//   CZ        {a, b}
//   TOFFOLI   {control, control, target}
//   CSWAP     {control, a, b}
struct Gate {
  GateKind kind = GateKind::kX;
  std::array<Qubit, 3> qubits{};
  // When set, the gate only fires if this classical bit is 1.
  std::optional<std::size_t> classical_condition;

  std::span<const Qubit> operands() const {
    return {qubits.data(), arity(kind)};
  }

  static Gate x(Qubit q) { return {GateKind::kX, {q, 0, 0}, {}}; }
  static Gate h(Qubit q) { return {GateKind::kH, {q, 0, 0}, {}}; }
  static Gate z(Qubit q) { return {GateKind::kZ, {q, 0, 0}, {}}; }
  static Gate cnot(Qubit control, Qubit target) {
    return {GateKind::kCnot, {control, target, 0}, {}};
  }
  static Gate cz(Qubit a, Qubit b) { return {GateKind::kCz, {a, b, 0}, {}}; }
  static Gate toffoli(Qubit c1, Qubit c2, Qubit target) {
    return {GateKind::kToffoli, {c1, c2, target}, {}};
  }
  static Gate cswap(Qubit control, Qubit a, Qubit b) {
    return {GateKind::kCswap, {control, a, b}, {}};
  }

  Gate conditioned_on(std::size_t classical_bit) const {
    Gate g = *this;
    g.classical_condition = classical_bit;
    return g;
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

// Throws InvalidArgument unless every operand is < num_qubits and distinct.
void validate_gate(const Gate& gate, std::size_t num_qubits);

std::string describe(const Gate& gate);

class Circuit {
 public:
  explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  Circuit& add(const Gate& gate);
  Circuit& append(const Circuit& other);

  // Every supported gate is an involution, so the inverse is the reversed list.
  Circuit inverse() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
};

}  // namespace mbu
