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

#include "trotterlab/subspace_sim.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <string>

#include "trotterlab/errors.hpp"

namespace trotterlab {

SubspaceState::SubspaceState(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {}

SubspaceState SubspaceState::basis(int n_sites, int site) {
  if (n_sites < 1) throw ConfigError("subspace state needs at least one site");
  if (site < 1 || site > n_sites) {
    throw ConfigError("site " + std::to_string(site) + " out of range 1.." +
                      std::to_string(n_sites));
  }
  std::vector<Complex> amps(static_cast<std::size_t>(n_sites));
  amps[static_cast<std::size_t>(site - 1)] = 1.0;
  return SubspaceState(std::move(amps));
}

double SubspaceState::norm_squared() const {
  double total = 0.0;
  for (const Complex& a : amplitudes_) total += std::norm(a);
  return total;
}

std::vector<double> SubspaceState::probabilities() const {
  std::vector<double> probs;
  probs.reserve(amplitudes_.size());
  for (const Complex& a : amplitudes_) probs.push_back(std::norm(a));
  return probs;
}

void trotter_step(SubspaceState& state, std::span<const double> hop_angles,
                  std::span<const double> z_angles, bool include_z) {
  const std::size_t n = static_cast<std::size_t>(state.n_sites());
  if (n < 1 || hop_angles.size() + 1 != n) {
    throw ConfigError("trotter_step: expected " + std::to_string(n == 0 ? 0 : n - 1) +
                      " bond angles, got " + std::to_string(hop_angles.size()));
  }
  if (z_angles.size() != n) {
    throw ConfigError("trotter_step: expected " + std::to_string(n) + " Rz angles, got " +
                      std::to_string(z_angles.size()));
  }
  auto amps = state.amplitudes();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double c = std::cos(hop_angles[j]);
    const Complex mis{0.0, -std::sin(hop_angles[j])};
    const Complex x = amps[j];
    const Complex y = amps[j + 1];
    amps[j] = c * x + mis * y;
    amps[j + 1] = mis * x + c * y;
  }
  if (include_z) {
    for (std::size_t j = 0; j < n; ++j) amps[j] *= std::polar(1.0, -z_angles[j]);
  }
}

namespace {

void require_xy(const TrotterCircuitSpec& spec) {
  if (spec.family != GateFamily::XY) {
    throw UnsupportedMapping(
        "subspace backend only handles XY circuits; use the dense backend for CRX");
  }
}

}  // namespace

void run_discrete_steps(const TrotterCircuitSpec& spec, std::uint64_t seed,
                        const std::function<void(int, const SubspaceState&)>& on_step) {
  require_xy(spec);
  validate(spec);
  const std::vector<double> hops = effective_bond_angles(spec);
  const std::vector<double> phis = realize_z_layer(spec.z_layer, spec.n_qubits, seed);
  SubspaceState state = SubspaceState::basis(spec.n_qubits, spec.initial_excitation_site);
  for (int eta = 1; eta <= spec.n_steps; ++eta) {
    const bool include_z = !(spec.drop_final_z && eta == spec.n_steps);
    trotter_step(state, hops, phis, include_z);
    on_step(eta, state);
  }
}

SubspaceState run_discrete(const TrotterCircuitSpec& spec, int eta, std::uint64_t seed) {
  require_xy(spec);
  validate(spec);
  if (eta < 0) throw ConfigError("eta must be >= 0");
  const std::vector<double> hops = effective_bond_angles(spec);
  const std::vector<double> phis = realize_z_layer(spec.z_layer, spec.n_qubits, seed);
  SubspaceState state = SubspaceState::basis(spec.n_qubits, spec.initial_excitation_site);
  for (int step = 1; step <= eta; ++step) {
    const bool include_z = !(spec.drop_final_z && step == spec.n_steps);
    trotter_step(state, hops, phis, include_z);
  }
  return state;
}

ChainPropagator::ChainPropagator(const ChainSpec& chain) {
  validate(chain);
  const int n = chain.size();
  if (n > kMaxChainSites) {
    throw ConfigError("chain has " + std::to_string(n) + " sites, limit is " +
                      std::to_string(kMaxChainSites));
  }
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int j = 0; j < n; ++j) diag[j] = chain.potentials[static_cast<std::size_t>(j)];
  for (int j = 0; j + 1 < n; ++j) sub[j] = chain.couplings[static_cast<std::size_t>(j)];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("tridiagonal eigensolver did not converge for " +
                         std::to_string(n) + "-site chain");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXd& vectors = solver.eigenvectors();

  // Residual of every eigenpair against the tridiagonal operator.
  for (int k = 0; k < n; ++k) {
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double hv = diag[i] * vectors(i, k);
      if (i > 0) hv += sub[i - 1] * vectors(i - 1, k);
      if (i + 1 < n) hv += sub[i] * vectors(i + 1, k);
      const double r = hv - values[k] * vectors(i, k);
      r2 += r * r;
    }
    const double residual = std::sqrt(r2);
    if (!(residual <= kEigenResidualTolerance)) {
      std::ostringstream msg;
      msg << "eigenpair " << k << " (lambda=" << values[k] << ") has residual " << residual
          << " > " << kEigenResidualTolerance;
      throw NumericalError(msg.str());
    }
    if (residual > max_residual_) max_residual_ = residual;
  }

  eigenvalues_.assign(values.data(), values.data() + n);
  eigenvectors_.assign(vectors.data(), vectors.data() + static_cast<std::ptrdiff_t>(n) * n);
}

SubspaceState ChainPropagator::evolve(const SubspaceState& initial, double t) const {
  const int n = n_sites();
  if (initial.n_sites() != n) {
    throw ConfigError("state has " + std::to_string(initial.n_sites()) +
                      " sites, chain has " + std::to_string(n));
  }
  auto vec = [this, n](int i, int k) {
    return eigenvectors_[static_cast<std::size_t>(k) * n + static_cast<std::size_t>(i)];
  };
  const auto in = initial.amplitudes();
  std::vector<Complex> coeff(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Complex c{};
    for (int i = 0; i < n; ++i) c += vec(i, k) * in[static_cast<std::size_t>(i)];
    coeff[static_cast<std::size_t>(k)] =
        c * std::polar(1.0, -eigenvalues_[static_cast<std::size_t>(k)] * t);
  }
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Complex a{};
    for (int k = 0; k < n; ++k) a += vec(i, k) * coeff[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(i)] = a;
  }
  return SubspaceState(std::move(out));
}

SubspaceState ChainPropagator::evolve_from_site(int site, double t) const {
  return evolve(SubspaceState::basis(n_sites(), site), t);
}

SubspaceState continuous_evolve(const ChainSpec& chain, double t, int init_site) {
  ChainPropagator propagator(chain);
  return propagator.evolve_from_site(init_site, t);
}

}  // namespace trotterlab
