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

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mbu/circuit.hpp"

namespace mbu {

using Amplitude = std::complex<double>;

// kAdaptive keeps a sorted list of nonzero amplitudes while the support is a
// small fraction of the Hilbert space and switches to a dense array past that.
// kDense always uses the dense array. Both produce bit-identical amplitudes.
enum class Storage { kAdaptive, kDense };

// Amplitudes over 2^num_qubits basis states. Qubit i is bit i of the index.
class StateVector {
 public:
  static constexpr std::size_t kMaxQubits = 40;
  static constexpr std::size_t kMaxDenseQubits = 26;

  // |0...0>
  explicit StateVector(std::size_t num_qubits,
                       Storage storage = Storage::kAdaptive);

  static StateVector basis(std::size_t num_qubits, BasisIndex index,
                           Storage storage = Storage::kAdaptive);
  // amplitudes.size() must be a power of two; no normalization is applied.
  static StateVector from_amplitudes(std::span<const Amplitude> amplitudes,
                                     Storage storage = Storage::kAdaptive);
  // Unlisted amplitudes are zero; indices must be distinct.
  static StateVector from_entries(
      std::size_t num_qubits,
      std::span<const std::pair<BasisIndex, Amplitude>> entries,
      Storage storage = Storage::kAdaptive);

  std::size_t num_qubits() const { return num_qubits_; }
  BasisIndex dimension() const { return BasisIndex{1} << num_qubits_; }
  Storage storage() const { return storage_; }
  bool is_dense() const { return !dense_.empty(); }

  Amplitude amplitude(BasisIndex index) const;
  // Dense export of length dimension().
  std::vector<Amplitude> amplitudes() const;
  // Number of stored entries; an upper bound on the number of nonzeros.
  std::size_t stored_entries() const;
  double norm() const;

  // Visits (index, amplitude) for every nonzero amplitude in ascending index
  // order.
  template <class Fn>
  void for_each_nonzero(Fn&& fn) const {
    if (is_dense()) {
      for (BasisIndex i = 0; i < dense_.size(); ++i) {
        if (dense_[i] != Amplitude{}) fn(i, dense_[i]);
      }
    } else {
      for (const auto& [i, a] : sparse_) {
        if (a != Amplitude{}) fn(i, a);
      }
    }
  }

  // Applies the gate's unitary unconditionally. classical_condition is the
  // caller's business (see apply_gate in simulator.hpp).
  void apply(const Gate& gate);

  // Zeroes every amplitude whose index fails keep(index) and multiplies the
  // survivors by factor.
  template <class Pred>
  void project(Pred&& keep, double factor) {
    if (is_dense()) {
      for (BasisIndex i = 0; i < dense_.size(); ++i) {
        dense_[i] = keep(i) ? dense_[i] * factor : Amplitude{};
      }
      maybe_compact();
    } else {
      std::erase_if(sparse_, [&](const auto& e) { return !keep(e.first); });
      for (auto& e : sparse_) e.second *= factor;
    }
  }

  void densify();

 private:
  void apply_permutation(const Gate& gate);
  void apply_phase(const Gate& gate);
  void apply_hadamard(Qubit target);
  void maybe_densify();
  void maybe_compact();

  std::size_t num_qubits_;
  Storage storage_;
  std::vector<Amplitude> dense_;
  std::vector<std::pair<BasisIndex, Amplitude>> sparse_;
};

}  // namespace mbu
