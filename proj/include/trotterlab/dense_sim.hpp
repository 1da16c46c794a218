// Copyright 2026 The TrotterLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "trotterlab/model.hpp"

namespace trotterlab {

using Complex = std::complex<double>;

/// Desk-scale cap on the dense backend.
inline constexpr int kMaxDenseQubits = 24;

/// 2^N amplitudes. Basis index bit (N - q) holds qubit q, i.e. qubit 1 is the
/// most significant bit and "10" is index 2 for N = 2.
class StateVector {
 public:
  /// All-zero register |0...0>.
  explicit StateVector(int n_qubits);

  /// Basis state from a bitstring of '0'/'1' with qubit 1 first.
  static StateVector basis(int n_qubits, std::string_view bitstring);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }

  double norm_squared() const;

  /// |<bitstring|psi>|^2.
  double basis_prob(std::string_view bitstring) const;

  /// Bit mask of qubit q (1-based) in a basis index.
  std::uint64_t mask(int q) const { return std::uint64_t{1} << (n_qubits_ - q); }

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// In place. XY(theta) rotates {|01>,|10>} of the bond by
/// [cos, -i sin; -i sin, cos]; RZ(phi) applies exp(-i phi/2) to |0> and
/// exp(+i phi/2) to |1>; CRX(theta) applies exp(-i theta X / 2) to the second
/// qubit when the first is 1.
void apply_gate(StateVector& state, const GateOp& gate);

/// Applies build_circuit(spec, seed) to |0...0>.
StateVector run_circuit(const TrotterCircuitSpec& spec, std::uint64_t seed);

/// Same circuit, calling `on_step(eta, state)` after every Trotter step
/// (eta = 1..n_steps). Rz layers are diagonal so probabilities seen by the
/// callback do not depend on whether that step's Rz layer has been applied.
void run_circuit_steps(const TrotterCircuitSpec& spec, std::uint64_t seed,
                       const std::function<void(int, const StateVector&)>& on_step);

/// p_i = probability that qubit i reads 1. Entries may sum to more than one
/// for states with several excitations.
std::vector<double> occupation_probs(const StateVector& state);

/// Total probability on basis states with exactly one excited qubit.
double single_excitation_weight(const StateVector& state);

}  // namespace trotterlab
