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

#include "mbu/circuit.hpp"

#include <sstream>

#include "mbu/errors.hpp"

namespace mbu {

std::size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::kX:
    case GateKind::kH:
    case GateKind::kZ:
      return 1;
    case GateKind::kCnot:
    case GateKind::kCz:
      return 2;
    case GateKind::kToffoli:
    case GateKind::kCswap:
      return 3;
  }
  return 0;
}

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kX:
      return "X";
    case GateKind::kH:
      return "H";
    case GateKind::kZ:
      return "Z";
    case GateKind::kCnot:
      return "CNOT";
    case GateKind::kCz:
      return "CZ";
    case GateKind::kToffoli:
      return "TOFFOLI";
    case GateKind::kCswap:
      return "CSWAP";
  }
  return "?";
}

void validate_gate(const Gate& gate, std::size_t num_qubits) {
  const auto ops = gate.operands();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i] >= num_qubits) {
      throw InvalidArgument(describe(gate) + ": qubit " +
                            std::to_string(ops[i]) + " out of range for " +
                            std::to_string(num_qubits) + " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (ops[i] == ops[j]) {
        throw InvalidArgument(describe(gate) + ": duplicate qubit " +
                              std::to_string(ops[i]));
      }
    }
  }
}

std::string describe(const Gate& gate) {
  std::ostringstream out;
  out << to_string(gate.kind) << '(';
  const auto ops = gate.operands();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (i) out << ',';
    out << ops[i];
  }
  out << ')';
  if (gate.classical_condition) out << " if c[" << *gate.classical_condition << ']';
  return out.str();
}

Circuit& Circuit::add(const Gate& gate) {
  validate_gate(gate, num_qubits_);
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw InvalidArgument("cannot append a " + std::to_string(other.num_qubits_) +
                          "-qubit circuit to a " + std::to_string(num_qubits_) +
                          "-qubit circuit");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(num_qubits_);
  out.gates_.assign(gates_.rbegin(), gates_.rend());
  return out;
}

}  // namespace mbu
