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

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "mbu/errors.hpp"
#include "mbu/modarith.hpp"
#include "mbu/program.hpp"
#include "mbu/resources.hpp"
#include "mbu/schemes.hpp"
#include "mbu/simulator.hpp"
#include "mbu/verify.hpp"

namespace mbu {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<std::string> labels(const std::vector<SchemeStep>& steps) {
  std::vector<std::string> out;
  for (const auto& s : steps) out.push_back(s.label);
  return out;
}

StateVector run_forced(const DynamicProgram& program, const StateVector& input,
                       const Bits& outcome) {
  std::vector<Bits> forced;
  if (program.measurement_count() > 0) forced.push_back(outcome);
  return run_program(program, input, 0, forced).state;
}

TEST(ExpectedTargetState, Examples) {
  const auto p = SchemeParams::make(15, 7);
  const auto l = RegisterLayout::make(p.width);
  const auto s = expected_target_state(p, 3, l);
  EXPECT_NEAR(std::abs(s.amplitude(l.index_of(false, 3, 0)) - kInvSqrt2), 0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(l.index_of(true, 6, 0)) - kInvSqrt2), 0, 1e-15);
  EXPECT_NEAR(s.norm(), 1.0, 1e-12);

  const auto one = SchemeParams::make(15, 1);
  const auto t = expected_target_state(one, 4, l);
  EXPECT_NEAR(std::abs(t.amplitude(l.index_of(true, 4, 0)) - kInvSqrt2), 0, 1e-15);

  const auto z = expected_target_state(p, 0, l);
  EXPECT_NEAR(std::abs(z.amplitude(0) - kInvSqrt2), 0, 1e-15);
  EXPECT_NEAR(std::abs(z.amplitude(l.index_of(true, 0, 0)) - kInvSqrt2), 0, 1e-15);

  EXPECT_THROW(expected_target_state(p, 15, l), InvalidArgument);
}

TEST(SchemeSteps, SequencesAndLabels) {
  const auto p = SchemeParams::make(15, 7);
  const auto l = RegisterLayout::make(p.width);
  EXPECT_EQ(labels(scheme_steps(SchemeKind::kA, p, l)),
            (std::vector<std::string>{"H", "C-U_M(a)", "C-Swap", "C-U_M(-a^-1)"}));
  EXPECT_EQ(labels(scheme_steps(SchemeKind::kB, p, l)),
            (std::vector<std::string>{"H", "C-cp", "U_M(a-1)", "C-Swap",
                                      "U_M(-a^-1)", "C-Swap"}));
  EXPECT_EQ(labels(scheme_steps(SchemeKind::kC, p, l)),
            (std::vector<std::string>{"H", "C-cp", "U_M(a-1)", "C-Swap",
                                      "U_M(-(a^-1-1))", "WH"}));
}

TEST(SchemeConstants, Examples) {
  const auto k = SchemeConstants::make(SchemeParams::make(15, 7));
  EXPECT_EQ(k.multiplier, 7U);
  EXPECT_EQ(k.multiplier_minus_one, 6U);
  EXPECT_EQ(k.neg_inverse, 2U);
  EXPECT_EQ(k.neg_inverse_minus_one, 3U);
  EXPECT_EQ(norm_const(-static_cast<std::int64_t>(modinv(7, 15)), 15), 2U);
  EXPECT_EQ(norm_const(-(static_cast<std::int64_t>(modinv(7, 15)) - 1), 15), 3U);
}

TEST(SchemeB, IntermediateStateAfterFirstSwap) {
  const auto p = SchemeParams::make(15, 7);
  const auto l = RegisterLayout::make(p.width);
  const auto steps = scheme_steps(SchemeKind::kB, p, l);
  auto s = scheme_input_state(p, 3, l);
  for (std::size_t i = 0; i < 4; ++i) apply_circuit(s, steps[i].circuit);
  const std::pair<BasisIndex, Amplitude> entries[] = {
      {l.index_of(false, 3, 0), kInvSqrt2}, {l.index_of(true, 3, 6), kInvSqrt2}};
  const auto expected = StateVector::from_entries(l.total, entries);
  EXPECT_TRUE(states_equal(s, expected, kVerifyTolerance));
}

struct SchemeExample {
  std::uint64_t n;
  std::uint64_t a;
  std::uint64_t x;
  std::uint64_t ax;
};

TEST(SchemesAB, Examples) {
  const SchemeExample examples[] = {{15, 7, 1, 7}, {15, 1, 4, 4}, {21, 5, 17, 1}};
  for (SchemeKind kind : {SchemeKind::kA, SchemeKind::kB}) {
    for (const auto& e : examples) {
      const auto p = SchemeParams::make(e.n, e.a);
      const auto l = RegisterLayout::make(p.width);
      const auto program = build_scheme(kind, p, l);
      EXPECT_EQ(program.measurement_count(), 0U);
      const auto out = run_program(program, scheme_input_state(p, e.x, l), 0).state;
      const std::pair<BasisIndex, Amplitude> entries[] = {
          {l.index_of(false, e.x, 0), kInvSqrt2},
          {l.index_of(true, e.ax, 0), kInvSqrt2}};
      EXPECT_LT(max_amplitude_deviation(
                    out, StateVector::from_entries(l.total, entries)),
                kVerifyTolerance)
          << to_string(kind) << " N=" << e.n << " a=" << e.a << " x=" << e.x;
    }
  }
}

TEST(SchemeC, ZeroOutcomeSynthesizesResetOnly) {
  const auto p = SchemeParams::make(15, 7);
  const auto l = RegisterLayout::make(p.width);
  const Circuit correction = build_correction(ParityMask::from_string("0000"), 0, l);
  EXPECT_TRUE(correction.empty());
  const auto out = run_forced(build_scheme_c(p, l), scheme_input_state(p, 3, l),
                              parse_bits("0000"));
  EXPECT_TRUE(states_equal_exact(out, expected_target_state(p, 3, l), kVerifyTolerance));
}

TEST(SchemeC, OddParityOutcomeNeedsCorrection) {
  const auto p = SchemeParams::make(15, 7);
  const auto l = RegisterLayout::make(p.width);
  const auto input = scheme_input_state(p, 3, l);
  const Bits s = parse_bits("0010");
  EXPECT_EQ(parity_phase(ParityMask(s), 6), -1);

  SchemeOptions raw;
  raw.apply_correction = false;
  const auto uncorrected = run_forced(build_scheme_c(p, l, raw), input, s);
  const Amplitude ratio = uncorrected.amplitude(l.index_of(true, 6, 0)) /
                          uncorrected.amplitude(l.index_of(false, 3, 0));
  EXPECT_NEAR(ratio.real(), -1.0, 1e-12);
  EXPECT_NEAR(ratio.imag(), 0.0, 1e-12);

  const auto corrected = run_forced(build_scheme_c(p, l), input, s);
  EXPECT_TRUE(states_equal_exact(corrected, expected_target_state(p, 3, l),
                                 kVerifyTolerance));
}

TEST(SchemeC, CorrectionLayout) {
  const auto l = RegisterLayout::make(4);
  const Circuit c = build_correction(ParityMask::from_string("1011"), 2, l);
  const auto& g = c.gates();
  ASSERT_GE(g.size(), 3U);
  // resets first, one per measured-1 qubit, on classical bits 2 + i
  const std::size_t positions[] = {0, 2, 3};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(g[i].kind, GateKind::kX);
    EXPECT_EQ(g[i].qubits[0], l.work[positions[i]]);
    EXPECT_EQ(g[i].classical_condition, 2 + positions[i]);
  }
  EXPECT_EQ(g[3], Gate::x(l.oracle));
  EXPECT_EQ(g[4], Gate::h(l.oracle));
  EXPECT_EQ(g[g.size() - 2], Gate::h(l.oracle));
  EXPECT_EQ(g[g.size() - 1], Gate::x(l.oracle));
  const auto counts = count_circuit(c);
  EXPECT_EQ(counts.toffoli, 1U);
  EXPECT_EQ(counts.cnot, 4U);
  EXPECT_EQ(counts.classically_conditioned, 3U);
}

TEST(ParityPhase, Examples) {
  const auto s = ParityMask::from_string("10111");
  EXPECT_EQ(parity_phase(s, 0), 1);
  EXPECT_EQ(parity_phase(s, 1), -1);  // y = 10000 in qubit order
  EXPECT_EQ(parity_phase(s, 0b11101), 1);
  const auto zero = ParityMask::from_string("00000");
  for (std::uint64_t y = 0; y < 32; ++y) EXPECT_EQ(parity_phase(zero, y), 1);
}

TEST(ParityMask, PositionsAscendAndRoundTrip) {
  const auto s = ParityMask::from_string("10111");
  EXPECT_EQ(s.positions(), (std::vector<std::size_t>{0, 2, 3, 4}));
  EXPECT_EQ(s.width(), 5U);
  EXPECT_EQ(ParityMask::from_value(s.value(), 5).bits(), s.bits());
  EXPECT_TRUE(ParityMask::from_string("0000").empty());
  EXPECT_THROW(ParityMask::from_string("10a1"), InvalidArgument);
}

TEST(ParityOracle, GateSequenceFor10111) {
  const std::vector<Qubit> y{1, 2, 3, 4, 5};
  const Qubit data = 0, oracle = 6;
  const Circuit c =
      build_parity_oracle(ParityMask::from_string("10111"), data, y, oracle, 7);
  const std::vector<Gate> expected{
      Gate::cnot(y[0], y[2]), Gate::cnot(y[2], y[3]), Gate::cnot(y[3], y[4]),
      Gate::toffoli(data, y[4], oracle),
      Gate::cnot(y[3], y[4]), Gate::cnot(y[2], y[3]), Gate::cnot(y[0], y[2])};
  EXPECT_EQ(c.gates(), expected);
  const auto counts = count_circuit(c);
  EXPECT_EQ(counts.cnot, 6U);
  EXPECT_EQ(counts.toffoli, 1U);
  EXPECT_EQ(counts.total_gates, 7U);
}

TEST(ParityOracle, EdgeCases) {
  const std::vector<Qubit> y{1, 2, 3};
  EXPECT_TRUE(build_parity_oracle(ParityMask::from_string("000"), 0, y, 4, 5).empty());
  const Circuit single = build_parity_oracle(ParityMask::from_string("010"), 0, y, 4, 5);
  EXPECT_EQ(single.gates(), (std::vector<Gate>{Gate::toffoli(0, 2, 4)}));
  EXPECT_THROW(build_parity_oracle(ParityMask::from_string("10"), 0, y, 4, 5),
               InvalidArgument);
  EXPECT_THROW(build_parity_oracle(ParityMask::from_string("010"), 0, y, 2, 5),
               InvalidArgument);
  EXPECT_THROW(build_parity_oracle(ParityMask::from_string("010"), 0, y, 0, 5),
               InvalidArgument);
}

// Direct simulation, independent of check_parity_oracle.
TEST(ParityOracle, PhaseOnEveryBasisStateFor10111) {
  const auto mask = ParityMask::from_string("10111");
  const std::vector<Qubit> y{1, 2, 3, 4, 5};
  const Qubit oracle = 6;
  Circuit c(7);
  c.add(Gate::x(oracle));
  c.add(Gate::h(oracle));
  c.append(build_parity_oracle(mask, 0, y, oracle, 7));
  c.add(Gate::h(oracle));
  c.add(Gate::x(oracle));
  for (BasisIndex d = 0; d < 2; ++d) {
    for (std::uint64_t v = 0; v < 32; ++v) {
      const BasisIndex in = d | (v << 1);
      auto s = StateVector::basis(7, in);
      apply_circuit(s, c);
      const double sign = d ? parity_phase(mask, v) : 1;
      EXPECT_NEAR(std::abs(s.amplitude(in) - Amplitude(sign)), 0, 1e-12)
          << "d=" << d << " y=" << v;
      EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    }
  }
}

TEST(ParityOracle, PropertyChecksForAllMasks) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
      const auto check = check_parity_oracle(ParityMask::from_value(v, n));
      EXPECT_TRUE(check.passed()) << "n=" << n << " mask=" << v;
    }
  }
}

TEST(VerifyScheme, Examples) {
  const auto p = SchemeParams::make(15, 7);
  EXPECT_TRUE(verify_scheme(SchemeKind::kA, p, 3, AllOutcomes{}).pass);
  const auto c = verify_scheme(SchemeKind::kC, p, 3, AllOutcomes{});
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.outcomes.size(), 16U);
  EXPECT_EQ(c.expected_outcomes, 16U);
  EXPECT_THROW(SchemeParams::make(15, 6), NoInverseError);
  EXPECT_THROW(verify_scheme(SchemeKind::kA, p, 15, AllOutcomes{}), InvalidArgument);
}

TEST(VerifyScheme, SampledAndForcedModes) {
  const auto p = SchemeParams::make(15, 7);
  const auto a = verify_scheme(SchemeKind::kC, p, 3, SampledOutcome{42});
  const auto b = verify_scheme(SchemeKind::kC, p, 3, SampledOutcome{42});
  ASSERT_EQ(a.outcomes.size(), 1U);
  EXPECT_EQ(a.outcomes[0].outcome, b.outcomes[0].outcome);
  EXPECT_TRUE(a.pass);
  const auto f = verify_scheme(SchemeKind::kC, p, 3, ForcedOutcome{parse_bits("1111")});
  ASSERT_EQ(f.outcomes.size(), 1U);
  EXPECT_EQ(f.outcomes[0].outcome, parse_bits("1111"));
  EXPECT_TRUE(f.pass);
}

// Target state, flat outcome distribution, phase law and hygiene over the full
// small-modulus grid. Schemes A and B share the sweep with C so a regression
// in any one shows up with its parameters.
class SchemeInvariants : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SchemeInvariants, AllSchemesAllInputsAllOutcomes) {
  const std::uint64_t n = GetParam();
  for (std::uint64_t a = 1; a < n; ++a) {
    if (gcd(a, n) != 1) continue;
    const auto p = SchemeParams::make(n, a);
    for (SchemeKind kind : kAllSchemes) {
      const SchemeVerifier verifier(kind, p);
      for (std::uint64_t x = 0; x < n; ++x) {
        const auto report = verifier.verify(x, AllOutcomes{});
        ASSERT_TRUE(report.pass) << to_string(kind) << " N=" << n << " a=" << a
                                 << " x=" << x;
        const std::size_t branches =
            kind == SchemeKind::kC ? (std::size_t{1} << p.width) : 1;
        ASSERT_EQ(report.outcomes.size(), branches);
        for (const auto& o : report.outcomes) {
          EXPECT_LT(o.max_deviation, kVerifyTolerance);
          EXPECT_TRUE(o.hygiene_ok);
          if (kind == SchemeKind::kC) {
            EXPECT_NEAR(o.probability, 1.0 / static_cast<double>(branches),
                        kVerifyTolerance);
            ASSERT_TRUE(o.raw_phase && o.expected_phase);
            EXPECT_EQ(*o.raw_phase, *o.expected_phase);
            EXPECT_EQ(*o.expected_phase,
                      parity_phase(ParityMask(o.outcome), (a * x) % n));
          }
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallModuli, SchemeInvariants,
                         ::testing::Values(9, 15, 21));

}  // namespace
}  // namespace mbu
