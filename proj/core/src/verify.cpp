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

#include "mbu/verify.hpp"

#include <cmath>
#include <utility>

#include "mbu/errors.hpp"
#include "mbu/resources.hpp"

namespace mbu {
namespace {

bool is_measured(SchemeKind kind) { return kind == SchemeKind::kC; }

}  // namespace

SchemeVerifier::SchemeVerifier(SchemeKind kind, const SchemeParams& params)
    : kind_(kind),
      params_(params),
      layout_(RegisterLayout::make(params.width)),
      program_(build_scheme(kind, params, layout_)) {
  if (is_measured(kind)) {
    uncorrected_ = build_scheme(kind, params, layout_,
                                SchemeOptions{.apply_correction = false});
  }
}

OutcomeCheck SchemeVerifier::check_branch(
    std::uint64_t x, const StateVector& expected, const StateVector& final_state,
    std::span<const MeasurementRecord> records) const {
  OutcomeCheck check;
  check.records.assign(records.begin(), records.end());
  check.max_deviation = max_amplitude_deviation(final_state, expected);
  check.state_ok = check.max_deviation < kVerifyTolerance;
  check.residual = register_excitation(final_state, layout_.clean_qubits());
  check.hygiene_ok = check.residual < kVerifyTolerance;
  if (is_measured(kind_) && !records.empty()) {
    check.outcome = records.back().outcome;
    check.probability = records.back().probability;
    const double uniform = std::ldexp(1.0, -static_cast<int>(params_.width));
    check.probability_ok = std::abs(check.probability - uniform) < kVerifyTolerance;
    check_phase_law(x, check);
  }
  return check;
}

void SchemeVerifier::check_phase_law(std::uint64_t x, OutcomeCheck& check) const {
  const Bits forced[] = {check.outcome};
  const auto raw = run_program(*uncorrected_, scheme_input_state(params_, x, layout_),
                               0, forced);
  const std::uint64_t ax = classical_mac(params_.multiplier, x, 0, params_.modulus);
  const Amplitude zero_branch = raw.state.amplitude(layout_.index_of(false, x, 0));
  const Amplitude one_branch = raw.state.amplitude(layout_.index_of(true, ax, 0));
  int sign = 0;
  if (std::abs(zero_branch) > kVerifyTolerance) {
    const Amplitude ratio = one_branch / zero_branch;
    if (std::abs(ratio - 1.0) < kVerifyTolerance) sign = 1;
    if (std::abs(ratio + 1.0) < kVerifyTolerance) sign = -1;
  }
  check.raw_phase = sign;
  check.expected_phase = parity_phase(ParityMask(check.outcome), ax);
  check.phase_law_ok = *check.raw_phase == *check.expected_phase;
}

VerificationReport SchemeVerifier::verify(std::uint64_t x,
                                          const VerifyMode& mode) const {
  VerificationReport report;
  report.kind = kind_;
  report.params = params_;
  report.x = x;
  const StateVector input = scheme_input_state(params_, x, layout_);
  const StateVector expected = expected_target_state(params_, x, layout_);

  if (!is_measured(kind_)) {
    const auto result = run_program(program_, input, 0);
    report.outcomes.push_back(check_branch(x, expected, result.state, result.records));
  } else if (std::holds_alternative<AllOutcomes>(mode)) {
    report.expected_outcomes = std::size_t{1} << params_.width;
    enumerate_outcomes(program_, input,
                       [&](const StateVector& state,
                           std::span<const MeasurementRecord> records) {
                         report.outcomes.push_back(
                             check_branch(x, expected, state, records));
                       });
  } else if (const auto* sampled = std::get_if<SampledOutcome>(&mode)) {
    const auto result = run_program(program_, input, sampled->seed);
    report.outcomes.push_back(check_branch(x, expected, result.state, result.records));
  } else {
    const Bits forced[] = {std::get<ForcedOutcome>(mode).bits};
    const auto result = run_program(program_, input, 0, forced);
    report.outcomes.push_back(check_branch(x, expected, result.state, result.records));
  }

  report.pass = report.outcomes.size() == report.expected_outcomes;
  for (const auto& o : report.outcomes) report.pass = report.pass && o.passed();
  return report;
}

VerificationReport verify_scheme(SchemeKind kind, const SchemeParams& params,
                                 std::uint64_t x, const VerifyMode& mode) {
  return SchemeVerifier(kind, params).verify(x, mode);
}

OracleCheck check_parity_oracle(const ParityMask& mask) {
  const std::size_t n = mask.width();
  if (n == 0) throw InvalidArgument("parity mask must have positive width");
  const Qubit data = 0;
  std::vector<Qubit> target;
  for (std::size_t i = 0; i < n; ++i) target.push_back(1 + i);
  const Qubit oracle = n + 1;
  const std::size_t total = n + 2;
  const Circuit circuit = build_parity_oracle(mask, data, target, oracle, total);

  OracleCheck check;
  check.mask = mask;
  check.phase_ok = check.data_zero_untouched = check.self_inverse = true;
  for (std::uint64_t d = 0; d < 2; ++d) {
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
      StateVector input = StateVector::basis(total, d | (y << 1));
      input.apply(Gate::x(oracle));
      input.apply(Gate::h(oracle));

      StateVector once = input;
      apply_circuit(once, circuit);
      const double sign = d ? parity_phase(mask, y) : 1;
      std::vector<std::pair<BasisIndex, Amplitude>> entries;
      input.for_each_nonzero(
          [&](BasisIndex i, Amplitude a) { entries.emplace_back(i, sign * a); });
      const auto expected = StateVector::from_entries(total, entries);
      check.phase_ok = check.phase_ok && states_equal_exact(once, expected, 1e-12);
      if (d == 0) {
        check.data_zero_untouched = check.data_zero_untouched &&
                                    max_amplitude_deviation(once, input) == 0.0;
      }
      StateVector twice = once;
      apply_circuit(twice, circuit);
      check.self_inverse = check.self_inverse && states_equal_exact(twice, input, 1e-12);
    }
  }
  const auto counts = count_circuit(circuit);
  const std::size_t k = mask.positions().size();
  check.counts_ok = k == 0 ? counts.total_gates == 0
                           : counts.toffoli == 1 && counts.cnot == 2 * (k - 1) &&
                                 counts.total_gates == 2 * k - 1;
  return check;
}

}  // namespace mbu
