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

// Single-excitation backend. Amplitude j-1 is <e_j|psi>, where e_j has only
// qubit j excited. XY circuits never leave this N-dimensional subspace, and
// within it a circuit is a discretized tight-binding chain.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "trotterlab/model.hpp"

namespace trotterlab {

using Complex = std::complex<double>;

inline constexpr int kMaxChainSites = 1000;

class SubspaceState {
 public:
  SubspaceState() = default;
  explicit SubspaceState(std::vector<Complex> amplitudes);

  /// Excitation on `site` (1-based).
  static SubspaceState basis(int n_sites, int site);

  int n_sites() const { return static_cast<int>(amplitudes_.size()); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }

  double norm_squared() const;
  std::vector<double> probabilities() const;

 private:
  std::vector<Complex> amplitudes_;
};

/// One Trotter step: the hop rotation on amplitude pairs (j, j+1) in ascending
/// j, then amplitude j multiplied by exp(-i phi_j) when include_z is set.
/// `hop_angles` are gate angles (after any convention scaling).
void trotter_step(SubspaceState& state, std::span<const double> hop_angles,
                  std::span<const double> z_angles, bool include_z);

/// State after `eta` Trotter steps of an XY-family circuit. The Rz layer of
/// step n_steps is skipped when spec.drop_final_z is set.
SubspaceState run_discrete(const TrotterCircuitSpec& spec, int eta, std::uint64_t seed);

/// Calls `on_step(eta, state)` for eta = 1..n_steps.
void run_discrete_steps(const TrotterCircuitSpec& spec, std::uint64_t seed,
                        const std::function<void(int, const SubspaceState&)>& on_step);

/// exp(-iHt) for the real-symmetric tridiagonal chain Hamiltonian
/// H = sum_j J_j (|j><j+1| + h.c.) + sum_j V_j |j><j|.
///
/// The eigendecomposition is computed once at construction and every pair is
/// checked against ||Hv - lambda v|| <= 1e-10; NumericalError otherwise.
class ChainPropagator {
 public:
  explicit ChainPropagator(const ChainSpec& chain);

  int n_sites() const { return static_cast<int>(eigenvalues_.size()); }
  std::span<const double> eigenvalues() const { return eigenvalues_; }
  double max_residual() const { return max_residual_; }

  SubspaceState evolve(const SubspaceState& initial, double t) const;
  SubspaceState evolve_from_site(int site, double t) const;

 private:
  std::vector<double> eigenvalues_;
  std::vector<double> eigenvectors_;  // column-major n x n
  double max_residual_ = 0.0;
};

inline constexpr double kEigenResidualTolerance = 1e-10;

/// Amplitudes exp(-iHt)|e_init_site>.
SubspaceState continuous_evolve(const ChainSpec& chain, double t, int init_site = 1);

}  // namespace trotterlab
