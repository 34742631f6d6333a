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

#include "mbu/modarith.hpp"

#include <algorithm>
#include <bit>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>

#include "mbu/errors.hpp"

namespace mbu {
namespace {

void require_width(std::span<const Qubit> reg, std::size_t width,
                   const char* what) {
  if (reg.size() != width) {
    throw InvalidArgument(std::string(what) + " register has " +
                          std::to_string(reg.size()) + " qubits, expected " +
                          std::to_string(width));
  }
}

// Throws if any qubit appears twice across the given groups.
void require_disjoint(std::initializer_list<std::span<const Qubit>> groups,
                      const char* what) {
  std::vector<Qubit> all;
  for (auto g : groups) all.insert(all.end(), g.begin(), g.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InvalidArgument(std::string(what) + ": registers overlap");
  }
}

// CNOT(control -> constant_i) for every set bit of value; with no control,
// X gates. Applying it twice unloads.
void load_constant(Circuit& circuit, std::uint64_t value,
                   std::span<const Qubit> constant_reg,
                   std::optional<Qubit> control) {
  for (std::size_t i = 0; i < constant_reg.size(); ++i) {
    if (!((value >> i) & 1U)) continue;
    circuit.add(control ? Gate::cnot(*control, constant_reg[i])
                        : Gate::x(constant_reg[i]));
  }
}

}  // namespace

std::size_t register_width(std::uint64_t modulus) {
  if (modulus < 2) throw InvalidArgument("modulus must be >= 2");
  return static_cast<std::size_t>(std::bit_width(modulus - 1));
}

SchemeParams SchemeParams::make(std::uint64_t modulus, std::uint64_t multiplier) {
  if (modulus < 3 || modulus % 2 == 0) {
    throw InvalidArgument("modulus N=" + std::to_string(modulus) +
                          " must be odd and >= 3");
  }
  if (modulus >= kMaxModulus) {
    throw InvalidArgument("modulus N=" + std::to_string(modulus) +
                          " is too large");
  }
  if (multiplier < 1 || multiplier >= modulus) {
    throw InvalidArgument("multiplier a=" + std::to_string(multiplier) +
                          " must lie in [1, N)");
  }
  SchemeParams p{modulus, multiplier, register_width(modulus)};
  (void)p.inverse();
  return p;
}

std::uint64_t SchemeParams::inverse() const { return modinv(multiplier, modulus); }

std::vector<Qubit> RegisterLayout::adder_ancilla() const {
  std::vector<Qubit> out{scratch.overflow, scratch.flag, scratch.carry,
                         scratch.control_and};
  out.insert(out.end(), scratch.constant.begin(), scratch.constant.end());
  return out;
}

std::vector<Qubit> RegisterLayout::clean_qubits() const {
  std::vector<Qubit> out = work;
  const auto anc = adder_ancilla();
  out.insert(out.end(), anc.begin(), anc.end());
  return out;
}

RegisterLayout RegisterLayout::make(std::size_t width) {
  if (width == 0) throw InvalidArgument("register width must be positive");
  RegisterLayout l;
  Qubit next = 0;
  l.data = next++;
  for (std::size_t i = 0; i < width; ++i) l.xreg.push_back(next++);
  for (std::size_t i = 0; i < width; ++i) l.work.push_back(next++);
  l.scratch.overflow = next++;
  l.scratch.flag = next++;
  l.scratch.carry = next++;
  l.scratch.control_and = next++;
  for (std::size_t i = 0; i < width; ++i) l.scratch.constant.push_back(next++);
  l.oracle = l.work.front();
  l.total = next;
  return l;
}

BasisIndex RegisterLayout::index_of(bool data_bit, std::uint64_t x,
                                    std::uint64_t w) const {
  BasisIndex index = data_bit ? BasisIndex{1} << data : 0;
  for (std::size_t i = 0; i < xreg.size(); ++i) {
    if ((x >> i) & 1U) index |= BasisIndex{1} << xreg[i];
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    if ((w >> i) & 1U) index |= BasisIndex{1} << work[i];
  }
  return index;
}

std::uint64_t RegisterLayout::read(BasisIndex index, std::span<const Qubit> reg) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    v |= ((index >> reg[i]) & 1U) << i;
  }
  return v;
}

void validate_layout(const RegisterLayout& layout) {
  const std::size_t n = layout.width();
  if (n == 0) throw InvalidArgument("layout has an empty x register");
  require_width(layout.work, n, "work");
  require_width(layout.scratch.constant, n, "constant scratch");
  const Qubit singles[] = {layout.data, layout.scratch.overflow,
                           layout.scratch.flag, layout.scratch.carry,
                           layout.scratch.control_and};
  require_disjoint({singles, layout.xreg, layout.work, layout.scratch.constant},
                   "layout");
  const std::size_t count = 5 + 3 * n;
  if (count != layout.total) {
    throw InvalidArgument("layout total " + std::to_string(layout.total) +
                          " does not match its " + std::to_string(count) +
                          " assigned qubits");
  }
  for (auto reg : {std::span<const Qubit>(singles), std::span<const Qubit>(layout.xreg),
                   std::span<const Qubit>(layout.work),
                   std::span<const Qubit>(layout.scratch.constant)}) {
    for (Qubit q : reg) {
      if (q >= layout.total) {
        throw InvalidArgument("layout qubit " + std::to_string(q) +
                              " out of range");
      }
    }
  }
  if (std::find(layout.work.begin(), layout.work.end(), layout.oracle) ==
      layout.work.end()) {
    throw InvalidArgument("oracle qubit must be drawn from the work register");
  }
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t modinv(std::uint64_t a, std::uint64_t modulus) {
  if (modulus < 2) throw InvalidArgument("modulus must be >= 2");
  if (modulus >= kMaxModulus) throw InvalidArgument("modulus is too large");
  a %= modulus;
  // Extended Euclid; all magnitudes stay below the modulus.
  std::int64_t r0 = static_cast<std::int64_t>(modulus);
  std::int64_t r1 = static_cast<std::int64_t>(a);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0 != 1) {
    throw NoInverseError("a=" + std::to_string(a) + " has no inverse modulo " +
                         std::to_string(modulus) + " (gcd " +
                         std::to_string(r0) + ")");
  }
  if (t0 < 0) t0 += static_cast<std::int64_t>(modulus);
  return static_cast<std::uint64_t>(t0);
}

std::uint64_t norm_const(std::int64_t c, std::uint64_t modulus) {
  if (modulus < 1 || modulus >= kMaxModulus) {
    throw InvalidArgument("modulus out of range");
  }
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = c % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t classical_mac(std::uint64_t c, std::uint64_t x, std::uint64_t y,
                            std::uint64_t modulus) {
  if (modulus < 1 || modulus >= kMaxModulus) {
    throw InvalidArgument("modulus out of range");
  }
  // Operands reduced below 2^32 keep the product inside 64 bits.
  return ((c % modulus) * (x % modulus) % modulus + y % modulus) % modulus;
}

ConstantSchedule ConstantSchedule::make(std::uint64_t c, const SchemeParams& params) {
  ConstantSchedule s;
  std::uint64_t term = c % params.modulus;
  for (std::size_t i = 0; i < params.width; ++i) {
    s.constants.push_back(term);
    term = (term * 2) % params.modulus;
  }
  return s;
}

Circuit build_register_adder(std::size_t num_qubits,
                             std::span<const Qubit> addend,
                             std::span<const Qubit> target, Qubit overflow,
                             Qubit carry) {
  const std::size_t m = target.size();
  if (m == 0) throw InvalidArgument("adder needs a non-empty target");
  require_width(addend, m, "addend");
  const Qubit singles[] = {overflow, carry};
  require_disjoint({addend, target, singles}, "register adder");

  Circuit c(num_qubits);
  auto maj = [&](Qubit x, Qubit y, Qubit z) {
    c.add(Gate::cnot(z, y));
    c.add(Gate::cnot(z, x));
    c.add(Gate::toffoli(x, y, z));
  };
  auto uma = [&](Qubit x, Qubit y, Qubit z) {
    c.add(Gate::toffoli(x, y, z));
    c.add(Gate::cnot(z, x));
    c.add(Gate::cnot(x, y));
  };
  maj(carry, target[0], addend[0]);
  for (std::size_t i = 1; i < m; ++i) maj(addend[i - 1], target[i], addend[i]);
  c.add(Gate::cnot(addend[m - 1], overflow));
  for (std::size_t i = m - 1; i >= 1; --i) uma(addend[i - 1], target[i], addend[i]);
  uma(carry, target[0], addend[0]);
  return c;
}

Circuit build_cmodadd_const(std::uint64_t c, Qubit control,
                            std::span<const Qubit> target,
                            const SchemeParams& params,
                            const RegisterLayout& layout) {
  if (c >= params.modulus) {
    throw InvalidArgument("constant " + std::to_string(c) +
                          " must be reduced below N=" +
                          std::to_string(params.modulus));
  }
  require_width(target, params.width, "target");
  const auto& s = layout.scratch;
  require_width(s.constant, params.width, "constant scratch");
  const Qubit singles[] = {control, s.overflow, s.flag, s.carry};
  require_disjoint({target, singles, s.constant}, "controlled modular adder");

  const Circuit add = build_register_adder(layout.total, s.constant, target,
                                           s.overflow, s.carry);
  const Circuit sub = add.inverse();

  Circuit out(layout.total);
  // y + b*c over n+1 bits.
  load_constant(out, c, s.constant, control);
  out.append(add);
  load_constant(out, c, s.constant, control);
  // Subtract N; the overflow bit is the sign, set iff y + b*c < N.
  load_constant(out, params.modulus, s.constant, std::nullopt);
  out.append(sub);
  load_constant(out, params.modulus, s.constant, std::nullopt);
  out.add(Gate::cnot(s.overflow, s.flag));
  // Undo the subtraction where it went negative.
  load_constant(out, params.modulus, s.constant, s.flag);
  out.append(add);
  load_constant(out, params.modulus, s.constant, s.flag);
  // Clear the flag: it equals [r >= b*c] for the reduced result r.
  load_constant(out, c, s.constant, control);
  out.append(sub);
  out.add(Gate::x(s.overflow));
  out.add(Gate::cnot(s.overflow, s.flag));
  out.add(Gate::x(s.overflow));
  out.append(add);
  load_constant(out, c, s.constant, control);
  return out;
}

Circuit build_mac(std::int64_t c, std::span<const Qubit> src,
                  std::span<const Qubit> dst, const SchemeParams& params,
                  const RegisterLayout& layout) {
  require_width(src, params.width, "source");
  require_width(dst, params.width, "destination");
  require_disjoint({src, dst}, "multiply-accumulate");
  const auto schedule =
      ConstantSchedule::make(norm_const(c, params.modulus), params);
  Circuit out(layout.total);
  for (std::size_t i = 0; i < params.width; ++i) {
    out.append(build_cmodadd_const(schedule.constants[i], src[i], dst, params,
                                   layout));
  }
  return out;
}

Circuit build_cmac(std::int64_t c, Qubit extra_control,
                   std::span<const Qubit> src, std::span<const Qubit> dst,
                   const SchemeParams& params, const RegisterLayout& layout) {
  require_width(src, params.width, "source");
  require_width(dst, params.width, "destination");
  const Qubit singles[] = {extra_control, layout.scratch.control_and};
  require_disjoint({src, dst, singles}, "controlled multiply-accumulate");
  const auto schedule =
      ConstantSchedule::make(norm_const(c, params.modulus), params);
  const Qubit both = layout.scratch.control_and;
  Circuit out(layout.total);
  for (std::size_t i = 0; i < params.width; ++i) {
    out.add(Gate::toffoli(extra_control, src[i], both));
    out.append(build_cmodadd_const(schedule.constants[i], both, dst, params,
                                   layout));
    out.add(Gate::toffoli(extra_control, src[i], both));
  }
  return out;
}

Circuit build_ccopy(std::size_t num_qubits, Qubit control,
                    std::span<const Qubit> src, std::span<const Qubit> dst) {
  require_width(dst, src.size(), "copy destination");
  const Qubit singles[] = {control};
  require_disjoint({src, dst, singles}, "controlled copy");
  Circuit out(num_qubits);
  for (std::size_t i = 0; i < src.size(); ++i) {
    out.add(Gate::toffoli(control, src[i], dst[i]));
  }
  return out;
}

Circuit build_cswap_registers(std::size_t num_qubits, Qubit control,
                              std::span<const Qubit> reg_a,
                              std::span<const Qubit> reg_b) {
  require_width(reg_b, reg_a.size(), "swap partner");
  const Qubit singles[] = {control};
  require_disjoint({reg_a, reg_b, singles}, "controlled swap");
  Circuit out(num_qubits);
  for (std::size_t i = 0; i < reg_a.size(); ++i) {
    out.add(Gate::cnot(reg_b[i], reg_a[i]));
    out.add(Gate::toffoli(control, reg_a[i], reg_b[i]));
    out.add(Gate::cnot(reg_b[i], reg_a[i]));
  }
  return out;
}

}  // namespace mbu
