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

#include "mbu/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "mbu/errors.hpp"

namespace mbu {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

BasisIndex bit(Qubit q) { return BasisIndex{1} << q; }

// Image of a basis index under a permutation gate.
BasisIndex permute(const Gate& gate, BasisIndex i) {
  const auto& q = gate.qubits;
  switch (gate.kind) {
    case GateKind::kX:
      return i ^ bit(q[0]);
    case GateKind::kCnot:
      return (i & bit(q[0])) ? i ^ bit(q[1]) : i;
    case GateKind::kToffoli:
      return ((i & bit(q[0])) && (i & bit(q[1]))) ? i ^ bit(q[2]) : i;
    case GateKind::kCswap: {
      if (!(i & bit(q[0]))) return i;
      const bool a = i & bit(q[1]);
      const bool b = i & bit(q[2]);
      return a != b ? i ^ bit(q[1]) ^ bit(q[2]) : i;
    }
    default:
      return i;
  }
}

bool flips_sign(const Gate& gate, BasisIndex i) {
  const auto& q = gate.qubits;
  if (gate.kind == GateKind::kZ) return i & bit(q[0]);
  return (i & bit(q[0])) && (i & bit(q[1]));
}

void check_qubit_count(std::size_t num_qubits) {
  if (num_qubits > StateVector::kMaxQubits) {
    throw GuardrailExceeded("state of " + std::to_string(num_qubits) +
                            " qubits exceeds the supported maximum of " +
                            std::to_string(StateVector::kMaxQubits));
  }
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits, Storage storage)
    : num_qubits_(num_qubits), storage_(storage) {
  check_qubit_count(num_qubits);
  sparse_.emplace_back(0, Amplitude{1.0, 0.0});
  if (storage_ == Storage::kDense) densify();
}

StateVector StateVector::basis(std::size_t num_qubits, BasisIndex index,
                               Storage storage) {
  StateVector s(num_qubits, Storage::kAdaptive);
  if (index >= s.dimension()) {
    throw InvalidArgument("basis index " + std::to_string(index) +
                          " out of range for " + std::to_string(num_qubits) +
                          " qubits");
  }
  s.sparse_.front().first = index;
  s.storage_ = storage;
  if (storage == Storage::kDense) s.densify();
  return s;
}

StateVector StateVector::from_amplitudes(std::span<const Amplitude> amplitudes,
                                         Storage storage) {
  if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
    throw InvalidArgument("amplitude count must be a power of two");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
  StateVector s(n, Storage::kAdaptive);
  s.sparse_.clear();
  for (BasisIndex i = 0; i < amplitudes.size(); ++i) {
    if (amplitudes[i] != Amplitude{}) s.sparse_.emplace_back(i, amplitudes[i]);
  }
  s.storage_ = storage;
  if (storage == Storage::kDense) {
    s.densify();
  } else {
    s.maybe_densify();
  }
  return s;
}

StateVector StateVector::from_entries(
    std::size_t num_qubits,
    std::span<const std::pair<BasisIndex, Amplitude>> entries, Storage storage) {
  StateVector s(num_qubits, Storage::kAdaptive);
  s.sparse_.clear();
  for (const auto& [i, a] : entries) {
    if (i >= s.dimension()) {
      throw InvalidArgument("basis index " + std::to_string(i) +
                            " out of range for " + std::to_string(num_qubits) +
                            " qubits");
    }
    if (a != Amplitude{}) s.sparse_.emplace_back(i, a);
  }
  std::sort(s.sparse_.begin(), s.sparse_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (std::adjacent_find(s.sparse_.begin(), s.sparse_.end(),
                         [](const auto& a, const auto& b) {
                           return a.first == b.first;
                         }) != s.sparse_.end()) {
    throw InvalidArgument("duplicate basis index in state entries");
  }
  s.storage_ = storage;
  if (storage == Storage::kDense) {
    s.densify();
  } else {
    s.maybe_densify();
  }
  return s;
}

Amplitude StateVector::amplitude(BasisIndex index) const {
  if (index >= dimension()) {
    throw InvalidArgument("basis index " + std::to_string(index) +
                          " out of range");
  }
  if (is_dense()) return dense_[index];
  auto it = std::lower_bound(
      sparse_.begin(), sparse_.end(), index,
      [](const auto& e, BasisIndex i) { return e.first < i; });
  return (it != sparse_.end() && it->first == index) ? it->second
                                                     : Amplitude{};
}

std::vector<Amplitude> StateVector::amplitudes() const {
  if (is_dense()) return dense_;
  if (num_qubits_ > kMaxDenseQubits) {
    throw GuardrailExceeded("dense export of " + std::to_string(num_qubits_) +
                            " qubits refused");
  }
  std::vector<Amplitude> out(dimension());
  for (const auto& [i, a] : sparse_) out[i] = a;
  return out;
}

std::size_t StateVector::stored_entries() const {
  return is_dense() ? dense_.size() : sparse_.size();
}

double StateVector::norm() const {
  double sum = 0.0;
  for_each_nonzero([&](BasisIndex, Amplitude a) { sum += std::norm(a); });
  return std::sqrt(sum);
}

void StateVector::apply(const Gate& gate) {
  validate_gate(gate, num_qubits_);
  switch (gate.kind) {
    case GateKind::kH:
      apply_hadamard(gate.qubits[0]);
      break;
    case GateKind::kZ:
    case GateKind::kCz:
      apply_phase(gate);
      break;
    default:
      apply_permutation(gate);
      break;
  }
}

void StateVector::apply_permutation(const Gate& gate) {
  if (is_dense()) {
    for (BasisIndex i = 0; i < dense_.size(); ++i) {
      const BasisIndex j = permute(gate, i);
      if (j > i) std::swap(dense_[i], dense_[j]);
    }
    return;
  }
  for (auto& e : sparse_) e.first = permute(gate, e.first);
  std::sort(sparse_.begin(), sparse_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

void StateVector::apply_phase(const Gate& gate) {
  if (is_dense()) {
    for (BasisIndex i = 0; i < dense_.size(); ++i) {
      if (flips_sign(gate, i)) dense_[i] = -dense_[i];
    }
    return;
  }
  for (auto& [i, a] : sparse_) {
    if (flips_sign(gate, i)) a = -a;
  }
}

void StateVector::apply_hadamard(Qubit target) {
  const BasisIndex mask = bit(target);
  if (is_dense()) {
    for (BasisIndex i = 0; i < dense_.size(); ++i) {
      if (i & mask) continue;
      const Amplitude a0 = dense_[i];
      const Amplitude a1 = dense_[i | mask];
      dense_[i] = (a0 + a1) * kInvSqrt2;
      dense_[i | mask] = (a0 - a1) * kInvSqrt2;
    }
    return;
  }
  // Group entries by their partner pair, combine, drop exact zeros.
  auto by_pair = sparse_;
  std::sort(by_pair.begin(), by_pair.end(), [mask](const auto& a, const auto& b) {
    const auto ka = a.first & ~mask;
    const auto kb = b.first & ~mask;
    return ka != kb ? ka < kb : a.first < b.first;
  });
  std::vector<std::pair<BasisIndex, Amplitude>> out;
  out.reserve(2 * by_pair.size());
  for (std::size_t k = 0; k < by_pair.size();) {
    const BasisIndex base = by_pair[k].first & ~mask;
    Amplitude a0{}, a1{};
    while (k < by_pair.size() && (by_pair[k].first & ~mask) == base) {
      (by_pair[k].first & mask ? a1 : a0) = by_pair[k].second;
      ++k;
    }
    const Amplitude plus = (a0 + a1) * kInvSqrt2;
    const Amplitude minus = (a0 - a1) * kInvSqrt2;
    if (plus != Amplitude{}) out.emplace_back(base, plus);
    if (minus != Amplitude{}) out.emplace_back(base | mask, minus);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  sparse_ = std::move(out);
  maybe_densify();
}

void StateVector::densify() {
  if (is_dense()) return;
  if (num_qubits_ > kMaxDenseQubits) {
    throw GuardrailExceeded("dense storage of " + std::to_string(num_qubits_) +
                            " qubits refused");
  }
  dense_.assign(dimension(), Amplitude{});
  for (const auto& [i, a] : sparse_) dense_[i] = a;
  sparse_.clear();
  sparse_.shrink_to_fit();
}

void StateVector::maybe_densify() {
  if (storage_ != Storage::kAdaptive || is_dense()) return;
  if (num_qubits_ > kMaxDenseQubits) return;
  if (sparse_.size() * 8 > dimension()) densify();
}

void StateVector::maybe_compact() {
  if (storage_ != Storage::kAdaptive || !is_dense()) return;
  std::size_t nonzero = 0;
  for (const auto& a : dense_) nonzero += (a != Amplitude{});
  if (nonzero * 16 > dense_.size()) return;
  sparse_.clear();
  sparse_.reserve(nonzero);
  for (BasisIndex i = 0; i < dense_.size(); ++i) {
    if (dense_[i] != Amplitude{}) sparse_.emplace_back(i, dense_[i]);
  }
  dense_.clear();
  dense_.shrink_to_fit();
}

}  // namespace mbu
