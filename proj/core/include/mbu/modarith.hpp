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
#include <vector>

#include "mbu/circuit.hpp"

namespace mbu {

// Modulus, multiplier and register width of a controlled modular
// multiplication by a constant.
struct SchemeParams {
  std::uint64_t modulus = 0;     // N: odd, >= 3
  std::uint64_t multiplier = 0;  // a: in [1, N), gcd(a, N) = 1
  std::size_t width = 0;         // n = ceil(log2 N)

  // Validates N and a; throws InvalidArgument or NoInverseError.
  static SchemeParams make(std::uint64_t modulus, std::uint64_t multiplier);

  std::uint64_t inverse() const;  // a^-1 mod N
};

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

// ceil(log2 N) for N >= 2.
std::size_t register_width(std::uint64_t modulus);

// Qubit assignment shared by every builder. Registers store their least
// significant bit at the lowest listed qubit.
struct RegisterLayout {
  // Scratch used by the modular adder; all of it starts and ends at |0>.
  struct AdderScratch {
    Qubit overflow = 0;  // bit n of the (n+1)-bit view of the target
    Qubit flag = 0;      // "no reduction happened" comparison flag
    Qubit carry = 0;     // ripple-carry input ancilla
    Qubit control_and = 0;  // AND of two controls for doubly-controlled adds
    std::vector<Qubit> constant;  // n qubits holding the loaded constant
  };

  Qubit data = 0;
  std::vector<Qubit> xreg;
  std::vector<Qubit> work;
  AdderScratch scratch;
  Qubit oracle = 0;  // aliases work[0]
  std::size_t total = 0;

  // data | xreg (n) | work (n) | overflow, flag, carry, control_and |
  // constant (n). Total 3n + 5.
  static RegisterLayout make(std::size_t width);

  std::size_t width() const { return xreg.size(); }
  std::vector<Qubit> adder_ancilla() const;
  // work followed by adder_ancilla; every qubit that must end at |0>.
  std::vector<Qubit> clean_qubits() const;

  // Basis index with data bit, xreg = x, work = w, scratch zero.
  BasisIndex index_of(bool data_bit, std::uint64_t x, std::uint64_t w) const;
  // Integer held by a register in a basis index.
  static std::uint64_t read(BasisIndex index, std::span<const Qubit> reg);
};

// Throws InvalidArgument unless the layout's ranges are disjoint, in range,
// and account for exactly `total` qubits.
void validate_layout(const RegisterLayout& layout);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
// b in (0, N) with a*b = 1 mod N, by extended Euclid. NoInverseError if
// gcd(a, N) != 1.
std::uint64_t modinv(std::uint64_t a, std::uint64_t modulus);
// c mod N in [0, N).
std::uint64_t norm_const(std::int64_t c, std::uint64_t modulus);
// (y + c*x) mod N.
std::uint64_t classical_mac(std::uint64_t c, std::uint64_t x, std::uint64_t y,
                            std::uint64_t modulus);

// Entry i is (c * 2^i) mod N, for i in [0, n).
struct ConstantSchedule {
  std::vector<std::uint64_t> constants;

  static ConstantSchedule make(std::uint64_t c, const SchemeParams& params);
};

// Cuccaro ripple-carry adder on the (n+1)-bit value target + 2^n * overflow:
// adds the n-bit addend register modulo 2^(n+1). `carry` must be |0> and is
// returned clean; addend is restored. The inverse subtracts.
Circuit build_register_adder(std::size_t num_qubits,
                             std::span<const Qubit> addend,
                             std::span<const Qubit> target, Qubit overflow,
                             Qubit carry);

// |b>|y> -> |b>|(y + b*c) mod N> for y in [0, N); scratch returned clean.
// c must already be reduced into [0, N).
Circuit build_cmodadd_const(std::uint64_t c, Qubit control,
                            std::span<const Qubit> target,
                            const SchemeParams& params,
                            const RegisterLayout& layout);

// U_M: |x>|y> -> |x>|(y + c*x) mod N>, n controlled constant additions.
// c is reduced modulo N first, so negative multipliers are accepted.
Circuit build_mac(std::int64_t c, std::span<const Qubit> src,
                  std::span<const Qubit> dst, const SchemeParams& params,
                  const RegisterLayout& layout);

// C-U_M: U_M iff extra_control = 1. Each addition's control is the AND of
// extra_control and the source bit, computed into scratch.control_and.
Circuit build_cmac(std::int64_t c, Qubit extra_control,
                   std::span<const Qubit> src, std::span<const Qubit> dst,
                   const SchemeParams& params, const RegisterLayout& layout);

// C-cp: |b>|x>|0> -> |b>|x>|b*x>, one Toffoli per bit.
Circuit build_ccopy(std::size_t num_qubits, Qubit control,
                    std::span<const Qubit> src, std::span<const Qubit> dst);

// C-Swap: per bit pair CNOT(b->a), TOFFOLI(control, a -> b), CNOT(b->a).
Circuit build_cswap_registers(std::size_t num_qubits, Qubit control,
                              std::span<const Qubit> reg_a,
                              std::span<const Qubit> reg_b);

}  // namespace mbu
