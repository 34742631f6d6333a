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

#include "mbu/resources.hpp"

#include <algorithm>
#include <initializer_list>
#include <tuple>

#include "mbu/errors.hpp"

namespace mbu {
namespace {

void add_scaled(MeanCount& m, const ResourceCount& c, double w) {
  m.toffoli += w * static_cast<double>(c.toffoli);
  m.cnot += w * static_cast<double>(c.cnot);
  m.cz += w * static_cast<double>(c.cz);
  m.single_qubit += w * static_cast<double>(c.single_qubit);
  m.cswap_native += w * static_cast<double>(c.cswap_native);
  m.classically_conditioned += w * static_cast<double>(c.classically_conditioned);
  m.total_gates += w * static_cast<double>(c.total_gates);
}

struct Enumeration {
  std::size_t leaves = 0;
  ResourceCount worst;
  Bits worst_outcome;
  MeanCount sum;
};

void enumerate_synthesis(const DynamicProgram& program, std::size_t stage_index,
                         std::vector<MeasurementRecord>& records,
                         ResourceCount path, Enumeration& out) {
  const auto& stages = program.stages();
  for (; stage_index < stages.size(); ++stage_index) {
    const Stage& stage = stages[stage_index];
    if (const auto* s = std::get_if<SynthesisStage>(&stage)) {
      path += count_circuit(s->synthesize(records));
    } else if (const auto* m = std::get_if<MeasurementStage>(&stage)) {
      const std::uint64_t outcomes = std::uint64_t{1} << m->qubits.size();
      for (std::uint64_t v = 0; v < outcomes; ++v) {
        MeasurementRecord r;
        r.qubits = m->qubits;
        r.outcome.resize(m->qubits.size());
        for (std::size_t k = 0; k < m->qubits.size(); ++k) {
          r.outcome[k] = (v >> k) & 1U;
        }
        r.probability = 1.0 / static_cast<double>(outcomes);
        r.mode = MeasureMode::kForced;
        records.push_back(std::move(r));
        enumerate_synthesis(program, stage_index + 1, records, path, out);
        records.pop_back();
      }
      return;
    }
  }
  ++out.leaves;
  add_scaled(out.sum, path, 1.0);
  const auto key = [](const ResourceCount& c) {
    return std::tie(c.toffoli, c.total_gates);
  };
  if (out.leaves == 1 || key(path) > key(out.worst)) {
    out.worst = path;
    out.worst_outcome = classical_bits(records);
  }
}

std::int64_t signed_toffoli(const ResourceCount& c) {
  return static_cast<std::int64_t>(c.toffoli);
}

}  // namespace

ResourceCount& ResourceCount::operator+=(const ResourceCount& other) {
  toffoli += other.toffoli;
  cnot += other.cnot;
  cz += other.cz;
  single_qubit += other.single_qubit;
  cswap_native += other.cswap_native;
  measurements += other.measurements;
  classically_conditioned += other.classically_conditioned;
  total_gates += other.total_gates;
  return *this;
}

ResourceCount count_circuit(const Circuit& circuit) {
  ResourceCount c;
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::kX:
      case GateKind::kH:
      case GateKind::kZ:
        ++c.single_qubit;
        break;
      case GateKind::kCnot:
        ++c.cnot;
        break;
      case GateKind::kCz:
        ++c.cz;
        break;
      case GateKind::kToffoli:
        ++c.toffoli;
        break;
      case GateKind::kCswap:
        ++c.cswap_native;
        break;
    }
    if (g.classical_condition) ++c.classically_conditioned;
    ++c.total_gates;
  }
  return c;
}

ComparisonRow count_program(const DynamicProgram& program,
                            const SchemeParams& params, SchemeKind scheme) {
  ComparisonRow row;
  row.scheme = scheme;
  std::size_t measured_bits = 0;
  bool has_synthesis = false;
  for (const Stage& stage : program.stages()) {
    if (const auto* u = std::get_if<UnitaryStage>(&stage)) {
      row.counts += count_circuit(u->circuit);
    } else if (const auto* m = std::get_if<MeasurementStage>(&stage)) {
      row.counts.measurements += m->qubits.size();
      measured_bits += m->qubits.size();
    } else {
      has_synthesis = true;
    }
  }
  if (!has_synthesis) return row;
  if (measured_bits > kMaxEnumeratedBits) {
    throw GuardrailExceeded(
        "refusing to enumerate 2^" + std::to_string(measured_bits) +
        " outcomes (n=" + std::to_string(params.width) + "); limit is 2^" +
        std::to_string(kMaxEnumeratedBits));
  }
  Enumeration e;
  std::vector<MeasurementRecord> records;
  enumerate_synthesis(program, 0, records, ResourceCount{}, e);
  const double inv = 1.0 / static_cast<double>(e.leaves);
  MeanCount mean = e.sum;
  for (double* f : {&mean.toffoli, &mean.cnot, &mean.cz, &mean.single_qubit,
                    &mean.cswap_native, &mean.classically_conditioned,
                    &mean.total_gates}) {
    *f *= inv;
  }

  row.worst_case_stage2 = e.worst;
  row.mean_stage2 = mean;
  row.worst_case_outcome = e.worst_outcome;
  row.counts += e.worst;
  row.notes =
      "classical feedback: the correction circuit is chosen from the measured "
      "string at run time; that classical work is not counted as gates";
  return row;
}

SchemeComparison compare_schemes(const SchemeParams& params) {
  const auto layout = RegisterLayout::make(params.width);
  SchemeComparison out{params, {}, {}};
  for (SchemeKind kind : kAllSchemes) {
    out.rows.push_back(
        count_program(build_scheme(kind, params, layout), params, kind));
  }
  auto& s = out.savings;
  s.width = params.width;
  s.toffoli_a = signed_toffoli(out.rows[0].counts);
  s.toffoli_b = signed_toffoli(out.rows[1].counts);
  s.toffoli_c = signed_toffoli(out.rows[2].counts);

  const auto a = static_cast<std::int64_t>(params.multiplier);
  const auto cswap = count_circuit(build_cswap_registers(
      layout.total, layout.data, layout.xreg, layout.work));
  const auto mac = count_circuit(build_mac(a, layout.xreg, layout.work, params, layout));
  const auto cmac = count_circuit(
      build_cmac(a, layout.data, layout.xreg, layout.work, params, layout));
  const auto ccopy = count_circuit(
      build_ccopy(layout.total, layout.data, layout.xreg, layout.work));

  s.b_minus_c = s.toffoli_b - s.toffoli_c;
  s.cswap_toffoli = signed_toffoli(cswap);
  s.oracle_toffoli = signed_toffoli(*out.rows[2].worst_case_stage2);
  s.identity_i = s.b_minus_c == s.cswap_toffoli - s.oracle_toffoli &&
                 s.b_minus_c == static_cast<std::int64_t>(params.width) - 1;

  s.a_minus_c = s.toffoli_a - s.toffoli_c;
  s.cmac_minus_mac = signed_toffoli(cmac) - signed_toffoli(mac);
  s.ccopy_toffoli = signed_toffoli(ccopy);
  s.expected_a_minus_c = 2 * s.cmac_minus_mac - s.ccopy_toffoli - 1;
  s.identity_ii = s.a_minus_c == s.expected_a_minus_c;
  s.a_minus_c_positive = s.a_minus_c > 0;
  return out;
}

bool savings_trend_holds(std::vector<SchemeComparison> comparisons) {
  std::stable_sort(comparisons.begin(), comparisons.end(),
                   [](const auto& x, const auto& y) {
                     return x.params.width < y.params.width;
                   });
  std::int64_t previous = 0;
  for (const auto& c : comparisons) {
    if (!c.savings.a_minus_c_positive) return false;
    if (c.savings.a_minus_c < previous) return false;
    previous = c.savings.a_minus_c;
  }
  return true;
}

}  // namespace mbu
