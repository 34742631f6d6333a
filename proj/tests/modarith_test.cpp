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

#include <set>
#include <vector>

#include "mbu/errors.hpp"
#include "mbu/modarith.hpp"
#include "mbu/resources.hpp"
#include "mbu/schemes.hpp"
#include "mbu/simulator.hpp"

namespace mbu {
namespace {

// Independent of extended Euclid: scan every candidate.
std::uint64_t brute_force_inverse(std::uint64_t a, std::uint64_t n) {
  for (std::uint64_t b = 1; b < n; ++b) {
    if ((a * b) % n == 1) return b;
  }
  return 0;
}

BasisIndex place(std::span<const Qubit> reg, std::uint64_t value) {
  BasisIndex index = 0;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if ((value >> i) & 1U) index |= BasisIndex{1} << reg[i];
  }
  return index;
}

// Runs a circuit on a basis state and returns the single output index; fails
// the test if the output is not exactly one basis state with amplitude 1.
BasisIndex run_basis(const Circuit& c, BasisIndex input) {
  auto s = StateVector::basis(c.num_qubits(), input);
  apply_circuit(s, c);
  BasisIndex out = 0;
  int count = 0;
  s.for_each_nonzero([&](BasisIndex i, Amplitude a) {
    ++count;
    out = i;
    EXPECT_EQ(a, Amplitude(1.0));
  });
  EXPECT_EQ(count, 1) << "not a basis-state permutation";
  return out;
}

std::set<std::uint64_t> scheme_constant_set(std::uint64_t n) {
  std::set<std::uint64_t> out;
  for (std::uint64_t a = 1; a < n; ++a) {
    if (gcd(a, n) != 1) continue;
    const auto k = SchemeConstants::make(SchemeParams::make(n, a));
    out.insert({k.multiplier, k.multiplier_minus_one, k.neg_inverse,
                k.neg_inverse_minus_one});
  }
  return out;
}

TEST(ModInv, Examples) {
  EXPECT_EQ(modinv(1, 15), 1U);
  EXPECT_EQ(modinv(7, 15), 13U);
  EXPECT_EQ((7 * 13) % 15, 1);
  EXPECT_THROW(modinv(3, 15), NoInverseError);
}

TEST(ModInv, MatchesBruteForce) {
  for (std::uint64_t n = 3; n < 200; n += 2) {
    for (std::uint64_t a = 1; a < n; ++a) {
      if (gcd(a, n) == 1) {
        EXPECT_EQ(modinv(a, n), brute_force_inverse(a, n)) << a << " mod " << n;
      } else {
        EXPECT_THROW(modinv(a, n), NoInverseError);
      }
    }
  }
}

TEST(NormConst, Examples) {
  EXPECT_EQ(norm_const(-1, 15), 14U);
  EXPECT_EQ(norm_const(0, 15), 0U);
  EXPECT_EQ(norm_const(1 - 1, 21), 0U);
  EXPECT_EQ(norm_const(-13, 15), 2U);
  EXPECT_EQ(norm_const(-12, 15), 3U);
}

TEST(ClassicalMac, Examples) {
  EXPECT_EQ(classical_mac(7, 2, 0, 15), 14U);
  EXPECT_EQ(classical_mac(11, 0, 5, 15), 5U);
  EXPECT_EQ(classical_mac(0, 9, 5, 15), 5U);
}

TEST(SchemeParams, Validation) {
  const auto p = SchemeParams::make(15, 7);
  EXPECT_EQ(p.width, 4U);
  EXPECT_EQ(p.inverse(), 13U);
  EXPECT_EQ(SchemeParams::make(21, 5).width, 5U);
  EXPECT_EQ(SchemeParams::make(3, 2).width, 2U);
  EXPECT_THROW(SchemeParams::make(15, 6), NoInverseError);
  EXPECT_THROW(SchemeParams::make(16, 3), InvalidArgument);
  EXPECT_THROW(SchemeParams::make(1, 1), InvalidArgument);
  EXPECT_THROW(SchemeParams::make(15, 0), InvalidArgument);
  EXPECT_THROW(SchemeParams::make(15, 15), InvalidArgument);
}

TEST(RegisterLayout, DisjointAndComplete) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto l = RegisterLayout::make(n);
    EXPECT_NO_THROW(validate_layout(l));
    EXPECT_EQ(l.total, 3 * n + 5);
    EXPECT_EQ(l.oracle, l.work[0]);
  }
  auto broken = RegisterLayout::make(3);
  broken.work[1] = broken.xreg[0];
  EXPECT_THROW(validate_layout(broken), InvalidArgument);
}

TEST(ConstantSchedule, DoublesModN) {
  const auto p = SchemeParams::make(15, 7);
  EXPECT_EQ(ConstantSchedule::make(7, p).constants,
            (std::vector<std::uint64_t>{7, 14, 13, 11}));
  EXPECT_EQ(ConstantSchedule::make(0, p).constants,
            (std::vector<std::uint64_t>{0, 0, 0, 0}));
}

TEST(RegisterAdder, ExhaustiveThreeBit) {
  // addend 0..2, target 3..5, overflow 6, carry 7
  const std::vector<Qubit> addend{0, 1, 2}, target{3, 4, 5};
  const Circuit add = build_register_adder(8, addend, target, 6, 7);
  const Circuit sub = add.inverse();
  EXPECT_EQ(count_circuit(add).toffoli, 6U);
  for (std::uint64_t a = 0; a < 8; ++a) {
    for (std::uint64_t y = 0; y < 16; ++y) {
      const BasisIndex in = place(addend, a) | place(target, y & 7) |
                            ((y >> 3) ? BasisIndex{1} << 6 : 0);
      const BasisIndex out = run_basis(add, in);
      EXPECT_EQ(RegisterLayout::read(out, addend), a);
      const std::uint64_t sum = (y + a) % 16;
      EXPECT_EQ(RegisterLayout::read(out, target), sum & 7);
      EXPECT_EQ((out >> 6) & 1U, sum >> 3);
      EXPECT_EQ((out >> 7) & 1U, 0U);
      EXPECT_EQ(run_basis(sub, out), in);
    }
  }
}

TEST(CModAddConst, Examples) {
  const auto p = SchemeParams::make(15, 7);
  const auto l = RegisterLayout::make(p.width);
  const Circuit c = build_cmodadd_const(7, l.data, l.work, p, l);
  auto result = [&](bool b, std::uint64_t y) {
    const BasisIndex in = (b ? BasisIndex{1} << l.data : 0) | place(l.work, y);
    return RegisterLayout::read(run_basis(c, in), l.work);
  };
  EXPECT_EQ(result(true, 10), 2U);
  EXPECT_EQ(result(false, 10), 10U);
  EXPECT_THROW(build_cmodadd_const(15, l.data, l.work, p, l), InvalidArgument);
  EXPECT_THROW(build_cmodadd_const(3, l.work[0], l.work, p, l), InvalidArgument);
}

class ModArithExhaustive : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ModArithExhaustive, CModAddMatchesOracleAndIsClean) {
  const std::uint64_t n = GetParam();
  const auto p = SchemeParams::make(n, 2);
  const auto l = RegisterLayout::make(p.width);
  const auto scratch = l.adder_ancilla();
  for (std::uint64_t c = 0; c < n; ++c) {
    const Circuit circuit = build_cmodadd_const(c, l.data, l.work, p, l);
    for (int b = 0; b < 2; ++b) {
      for (std::uint64_t y = 0; y < n; ++y) {
        const BasisIndex in = (b ? BasisIndex{1} << l.data : 0) | place(l.work, y);
        const BasisIndex out = run_basis(circuit, in);
        EXPECT_EQ(RegisterLayout::read(out, l.work), (y + b * c) % n);
        EXPECT_EQ(out & ~place(l.work, (1ULL << p.width) - 1), in & ~place(l.work, (1ULL << p.width) - 1));
        EXPECT_EQ(RegisterLayout::read(out, scratch), 0U);
      }
    }
  }
}

TEST_P(ModArithExhaustive, MacMatchesOracleAndInvertsWithNegation) {
  const std::uint64_t n = GetParam();
  const auto p = SchemeParams::make(n, 2);
  const auto l = RegisterLayout::make(p.width);
  const auto scratch = l.adder_ancilla();
  for (std::uint64_t c : scheme_constant_set(n)) {
    const Circuit mac = build_mac(static_cast<std::int64_t>(c), l.xreg, l.work, p, l);
    const Circuit undo =
        build_mac(-static_cast<std::int64_t>(c), l.xreg, l.work, p, l);
    for (std::uint64_t x = 0; x < n; ++x) {
      for (std::uint64_t y = 0; y < n; ++y) {
        const BasisIndex in = place(l.xreg, x) | place(l.work, y);
        const BasisIndex out = run_basis(mac, in);
        EXPECT_EQ(RegisterLayout::read(out, l.xreg), x);
        EXPECT_EQ(RegisterLayout::read(out, l.work), classical_mac(c, x, y, n));
        EXPECT_EQ(RegisterLayout::read(out, scratch), 0U);
        EXPECT_EQ((out >> l.data) & 1U, 0U);
        EXPECT_EQ(run_basis(undo, out), in);
      }
    }
  }
}

TEST_P(ModArithExhaustive, ControlledBuildersRespectControl) {
  const std::uint64_t n = GetParam();
  const auto p = SchemeParams::make(n, 2);
  const auto l = RegisterLayout::make(p.width);
  const auto scratch = l.adder_ancilla();
  const Circuit copy = build_ccopy(l.total, l.data, l.xreg, l.work);
  const Circuit swap = build_cswap_registers(l.total, l.data, l.xreg, l.work);
  for (std::uint64_t c : scheme_constant_set(n)) {
    const Circuit cmac =
        build_cmac(static_cast<std::int64_t>(c), l.data, l.xreg, l.work, p, l);
    for (int b = 0; b < 2; ++b) {
      for (std::uint64_t x = 0; x < n; ++x) {
        for (std::uint64_t y = 0; y < n; ++y) {
          const BasisIndex ctrl = b ? BasisIndex{1} << l.data : 0;
          const BasisIndex in = ctrl | place(l.xreg, x) | place(l.work, y);
          const BasisIndex out = run_basis(cmac, in);
          EXPECT_EQ(RegisterLayout::read(out, l.xreg), x);
          EXPECT_EQ(RegisterLayout::read(out, l.work),
                    b ? classical_mac(c, x, y, n) : y);
          EXPECT_EQ(RegisterLayout::read(out, scratch), 0U);
          EXPECT_EQ(out & ctrl, ctrl);
        }
      }
    }
  }
  for (int b = 0; b < 2; ++b) {
    for (std::uint64_t x = 0; x < n; ++x) {
      const BasisIndex ctrl = b ? BasisIndex{1} << l.data : 0;
      const BasisIndex copied = run_basis(copy, ctrl | place(l.xreg, x));
      EXPECT_EQ(RegisterLayout::read(copied, l.work), b ? x : 0U);
      EXPECT_EQ(RegisterLayout::read(copied, l.xreg), x);
      for (std::uint64_t y = 0; y < n; ++y) {
        const BasisIndex swapped =
            run_basis(swap, ctrl | place(l.xreg, x) | place(l.work, y));
        EXPECT_EQ(RegisterLayout::read(swapped, l.xreg), b ? y : x);
        EXPECT_EQ(RegisterLayout::read(swapped, l.work), b ? x : y);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallModuli, ModArithExhaustive,
                         ::testing::Values(9, 15, 21));

TEST(BuildMac, Examples) {
  const auto p = SchemeParams::make(15, 7);
  const auto l = RegisterLayout::make(p.width);
  auto run = [&](std::int64_t c, std::uint64_t x, std::uint64_t y) {
    const Circuit mac = build_mac(c, l.xreg, l.work, p, l);
    return RegisterLayout::read(
        run_basis(mac, place(l.xreg, x) | place(l.work, y)), l.work);
  };
  EXPECT_EQ(run(6, 3, 3), 6U);
  EXPECT_EQ(run(0, 3, 3), 3U);
  EXPECT_EQ(run(2, 6, 3), 0U);
  EXPECT_EQ(run(-13, 6, 3), 0U);
  EXPECT_THROW(build_mac(1, l.xreg, l.xreg, p, l), InvalidArgument);
}

TEST(BuildCMac, Examples) {
  const auto p = SchemeParams::make(15, 7);
  const auto l = RegisterLayout::make(p.width);
  const Circuit cmac = build_cmac(7, l.data, l.xreg, l.work, p, l);
  const BasisIndex on = BasisIndex{1} << l.data;
  EXPECT_EQ(RegisterLayout::read(run_basis(cmac, on | place(l.xreg, 1)), l.work), 7U);
  EXPECT_EQ(RegisterLayout::read(run_basis(cmac, place(l.xreg, 1)), l.work), 0U);
  EXPECT_THROW(build_cmac(7, l.xreg[0], l.xreg, l.work, p, l), InvalidArgument);
}

TEST(BuildCMac, CostsMoreToffolisThanMacByAUniformGap) {
  for (std::uint64_t n : {9, 15, 21, 33}) {
    const auto p = SchemeParams::make(n, 2);
    const auto l = RegisterLayout::make(p.width);
    std::set<std::size_t> gaps;
    for (std::uint64_t c = 0; c < n; ++c) {
      const auto mac = count_circuit(build_mac(c, l.xreg, l.work, p, l));
      const auto cmac = count_circuit(build_cmac(c, l.data, l.xreg, l.work, p, l));
      EXPECT_GT(cmac.toffoli, mac.toffoli);
      gaps.insert(cmac.toffoli - mac.toffoli);
    }
    EXPECT_EQ(gaps.size(), 1U);
    EXPECT_EQ(*gaps.begin(), 2 * p.width);
  }
}

TEST(BuildCCopy, Examples) {
  const std::vector<Qubit> src{1, 2, 3, 4}, dst{5, 6, 7, 8};
  const Circuit c = build_ccopy(9, 0, src, dst);
  EXPECT_EQ(RegisterLayout::read(run_basis(c, 1 | place(src, 5)), dst), 5U);
  EXPECT_EQ(RegisterLayout::read(run_basis(c, place(src, 5)), dst), 0U);
  const auto counts = count_circuit(c);
  EXPECT_EQ(counts.toffoli, 4U);
  EXPECT_EQ(counts.total_gates, 4U);
  EXPECT_THROW(build_ccopy(9, 1, src, dst), InvalidArgument);
}

TEST(BuildCSwapRegisters, Examples) {
  const std::vector<Qubit> a{1, 2, 3, 4}, b{5, 6, 7, 8};
  const Circuit c = build_cswap_registers(9, 0, a, b);
  const BasisIndex out = run_basis(c, 1 | place(a, 3) | place(b, 12));
  EXPECT_EQ(RegisterLayout::read(out, a), 12U);
  EXPECT_EQ(RegisterLayout::read(out, b), 3U);
  const BasisIndex off = place(a, 3) | place(b, 12);
  EXPECT_EQ(run_basis(c, off), off);
  const auto counts = count_circuit(c);
  EXPECT_EQ(counts.toffoli, 4U);
  EXPECT_EQ(counts.cnot, 8U);
  EXPECT_EQ(counts.total_gates, 12U);
  EXPECT_THROW(build_cswap_registers(9, 0, a, a), InvalidArgument);
}

TEST(ModArith, ZeroMultiplierEmitsIdentityActingCircuits) {
  const auto p = SchemeParams::make(15, 1);
  const auto l = RegisterLayout::make(p.width);
  const auto k = SchemeConstants::make(p);
  EXPECT_EQ(k.multiplier_minus_one, 0U);
  EXPECT_EQ(k.neg_inverse_minus_one, 0U);
  const Circuit mac = build_mac(0, l.work, l.xreg, p, l);
  EXPECT_FALSE(mac.empty());
  for (std::uint64_t x = 0; x < 15; ++x) {
    const BasisIndex in = place(l.xreg, x) | place(l.work, (x * 4) % 15);
    EXPECT_EQ(run_basis(mac, in), in);
  }
}

}  // namespace
}  // namespace mbu
