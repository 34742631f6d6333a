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

#include "mbu/schemes.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <utility>

#include "mbu/errors.hpp"

namespace mbu {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_x(const SchemeParams& params, std::uint64_t x) {
  if (x >= params.modulus) {
    throw InvalidArgument("input x=" + std::to_string(x) + " must be below N=" +
                          std::to_string(params.modulus));
  }
}

void check_layout_width(const SchemeParams& params, const RegisterLayout& layout) {
  validate_layout(layout);
  if (layout.width() != params.width) {
    throw InvalidArgument("layout width " + std::to_string(layout.width()) +
                          " does not match n=" + std::to_string(params.width));
  }
}

Circuit hadamard_data(const RegisterLayout& layout) {
  Circuit c(layout.total);
  c.add(Gate::h(layout.data));
  return c;
}

Circuit walsh_hadamard(const RegisterLayout& layout) {
  Circuit c(layout.total);
  for (Qubit q : layout.work) c.add(Gate::h(q));
  return c;
}

}  // namespace

std::string_view to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kA:
      return "A";
    case SchemeKind::kB:
      return "B";
    case SchemeKind::kC:
      return "C";
  }
  return "?";
}

SchemeKind parse_scheme_kind(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A':
        return SchemeKind::kA;
      case 'B':
        return SchemeKind::kB;
      case 'C':
        return SchemeKind::kC;
    }
  }
  throw InvalidArgument("unknown scheme '" + std::string(text) + "'");
}

ParityMask::ParityMask(Bits bits) : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1) throw InvalidArgument("mask bits must be 0 or 1");
    if (bits_[i]) positions_.push_back(i);
  }
}

ParityMask ParityMask::from_value(std::uint64_t value, std::size_t width) {
  Bits bits(width);
  for (std::size_t i = 0; i < width; ++i) bits[i] = (value >> i) & 1U;
  return ParityMask(std::move(bits));
}

std::uint64_t ParityMask::value() const {
  std::uint64_t v = 0;
  for (auto p : positions_) v |= std::uint64_t{1} << p;
  return v;
}

int parity_phase(const ParityMask& mask, std::uint64_t y) {
  unsigned parity = 0;
  for (auto p : mask.positions()) parity ^= (y >> p) & 1U;
  return parity ? -1 : 1;
}

Circuit build_parity_oracle(const ParityMask& mask, Qubit data,
                            std::span<const Qubit> target, Qubit oracle,
                            std::size_t num_qubits) {
  if (target.size() != mask.width()) {
    throw InvalidArgument("mask width " + std::to_string(mask.width()) +
                          " does not match target width " +
                          std::to_string(target.size()));
  }
  if (std::find(target.begin(), target.end(), data) != target.end()) {
    throw InvalidArgument("data qubit lies inside the parity target register");
  }
  Circuit c(num_qubits);
  if (mask.empty()) return c;
  if (oracle == data ||
      std::find(target.begin(), target.end(), oracle) != target.end()) {
    throw InvalidArgument("oracle qubit conflicts with the data qubit or the "
                          "parity target register");
  }
  const auto& pos = mask.positions();
  for (std::size_t k = 1; k < pos.size(); ++k) {
    c.add(Gate::cnot(target[pos[k - 1]], target[pos[k]]));
  }
  c.add(Gate::toffoli(data, target[pos.back()], oracle));
  for (std::size_t k = pos.size() - 1; k >= 1; --k) {
    c.add(Gate::cnot(target[pos[k - 1]], target[pos[k]]));
  }
  return c;
}

SchemeConstants SchemeConstants::make(const SchemeParams& params) {
  const auto N = params.modulus;
  const auto a = static_cast<std::int64_t>(params.multiplier);
  const auto inv = static_cast<std::int64_t>(params.inverse());
  return {norm_const(a, N), norm_const(a - 1, N), norm_const(-inv, N),
          norm_const(-(inv - 1), N)};
}

std::vector<SchemeStep> scheme_steps(SchemeKind kind, const SchemeParams& params,
                                     const RegisterLayout& layout) {
  check_layout_width(params, layout);
  const auto k = SchemeConstants::make(params);
  const auto n_qubits = layout.total;
  const auto as_signed = [](std::uint64_t v) { return static_cast<std::int64_t>(v); };

  std::vector<SchemeStep> steps;
  steps.push_back({"H", hadamard_data(layout)});
  switch (kind) {
    case SchemeKind::kA:
      steps.push_back({"C-U_M(a)", build_cmac(as_signed(k.multiplier), layout.data,
                                              layout.xreg, layout.work, params,
                                              layout)});
      steps.push_back({"C-Swap", build_cswap_registers(n_qubits, layout.data,
                                                       layout.xreg, layout.work)});
      steps.push_back({"C-U_M(-a^-1)",
                       build_cmac(as_signed(k.neg_inverse), layout.data,
                                  layout.xreg, layout.work, params, layout)});
      break;
    case SchemeKind::kB:
    case SchemeKind::kC:
      steps.push_back({"C-cp", build_ccopy(n_qubits, layout.data, layout.xreg,
                                           layout.work)});
      steps.push_back({"U_M(a-1)", build_mac(as_signed(k.multiplier_minus_one),
                                             layout.work, layout.xreg, params,
                                             layout)});
      steps.push_back({"C-Swap", build_cswap_registers(n_qubits, layout.data,
                                                       layout.xreg, layout.work)});
      if (kind == SchemeKind::kB) {
        steps.push_back({"U_M(-a^-1)", build_mac(as_signed(k.neg_inverse),
                                                 layout.work, layout.xreg,
                                                 params, layout)});
        steps.push_back({"C-Swap", build_cswap_registers(n_qubits, layout.data,
                                                         layout.xreg,
                                                         layout.work)});
      } else {
        steps.push_back({"U_M(-(a^-1-1))",
                         build_mac(as_signed(k.neg_inverse_minus_one),
                                   layout.work, layout.xreg, params, layout)});
        steps.push_back({"WH", walsh_hadamard(layout)});
      }
      break;
  }
  return steps;
}

Circuit build_correction(const ParityMask& mask, std::size_t classical_offset,
                         const RegisterLayout& layout, bool apply_oracle) {
  if (mask.width() != layout.work.size()) {
    throw InvalidArgument("measured string width " + std::to_string(mask.width()) +
                          " does not match the work register");
  }
  Circuit c(layout.total);
  for (auto p : mask.positions()) {
    c.add(Gate::x(layout.work[p]).conditioned_on(classical_offset + p));
  }
  if (!apply_oracle || mask.empty()) return c;
  c.add(Gate::x(layout.oracle));
  c.add(Gate::h(layout.oracle));
  c.append(build_parity_oracle(mask, layout.data, layout.xreg, layout.oracle,
                               layout.total));
  c.add(Gate::h(layout.oracle));
  c.add(Gate::x(layout.oracle));
  return c;
}

DynamicProgram build_scheme_a(const SchemeParams& params,
                              const RegisterLayout& layout) {
  return build_scheme(SchemeKind::kA, params, layout);
}

DynamicProgram build_scheme_b(const SchemeParams& params,
                              const RegisterLayout& layout) {
  return build_scheme(SchemeKind::kB, params, layout);
}

DynamicProgram build_scheme_c(const SchemeParams& params,
                              const RegisterLayout& layout,
                              SchemeOptions options) {
  return build_scheme(SchemeKind::kC, params, layout, options);
}

DynamicProgram build_scheme(SchemeKind kind, const SchemeParams& params,
                            const RegisterLayout& layout, SchemeOptions options) {
  DynamicProgram program(layout.total);
  Circuit unitary(layout.total);
  for (const auto& step : scheme_steps(kind, params, layout)) {
    unitary.append(step.circuit);
  }
  program.add_unitary("scheme " + std::string(to_string(kind)),
                      std::move(unitary));
  if (kind != SchemeKind::kC) return program;

  program.add_measurement("measure work", layout.work);
  program.add_synthesis(
      "reset work and correct phase",
      [layout, options](std::span<const MeasurementRecord> records) {
        if (records.empty()) {
          throw InvalidArgument("phase correction needs the work measurement");
        }
        std::size_t offset = 0;
        for (std::size_t i = 0; i + 1 < records.size(); ++i) {
          offset += records[i].outcome.size();
        }
        return build_correction(ParityMask(records.back().outcome), offset,
                                layout, options.apply_correction);
      });
  return program;
}

StateVector scheme_input_state(const SchemeParams& params, std::uint64_t x,
                               const RegisterLayout& layout) {
  check_x(params, x);
  check_layout_width(params, layout);
  return StateVector::basis(layout.total, layout.index_of(false, x, 0));
}

StateVector expected_target_state(const SchemeParams& params, std::uint64_t x,
                                  const RegisterLayout& layout) {
  check_x(params, x);
  check_layout_width(params, layout);
  const std::uint64_t ax = classical_mac(params.multiplier, x, 0, params.modulus);
  const std::pair<BasisIndex, Amplitude> entries[] = {
      {layout.index_of(false, x, 0), Amplitude{kInvSqrt2, 0.0}},
      {layout.index_of(true, ax, 0), Amplitude{kInvSqrt2, 0.0}},
  };
  return StateVector::from_entries(layout.total, entries);
}

}  // namespace mbu
