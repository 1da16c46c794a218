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

#include "trotterlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>

#include "trotterlab/analytics.hpp"
#include "trotterlab/dense_sim.hpp"
#include "trotterlab/random.hpp"
#include "trotterlab/subspace_sim.hpp"
#include "trotterlab/sweep.hpp"

namespace trotterlab {
namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

TrotterCircuitSpec two_step(int n, double theta, double phi, double alpha) {
  TrotterCircuitSpec spec;
  spec.n_qubits = n;
  spec.n_steps = 2;
  spec.bond_angles.assign(static_cast<std::size_t>(n - 1), theta);
  if (n == 2) {
    spec.z_layer.explicit_phis = std::vector<double>{phi, alpha};
  } else {
    spec.z_layer.explicit_phis = std::vector<double>{phi, alpha, phi};
  }
  return spec;
}

SuiteResult closed_form(int n) {
  double worst = 0.0;
  const std::string target = n == 2 ? "01" : "001";
  for (int it = 0; it < 21; ++it) {
    const double theta = kPi * it / 20.0;
    for (int ip = 0; ip < 21; ++ip) {
      const double phi = -kPi + 2.0 * kPi * ip / 20.0;
      for (int id = 0; id < 5; ++id) {
        const double alpha = phi + (-kPi + kPi * id / 2.0);
        const double sim = run_circuit(two_step(n, theta, phi, alpha), 0).basis_prob(target);
        const double formula = n == 2 ? p01_closed_form(theta, phi, alpha)
                                      : p001_closed_form(theta, phi, alpha);
        worst = std::max(worst, std::abs(sim - formula));
      }
    }
  }
  return {n == 2 ? "closed_form_p01" : "closed_form_p001", worst <= 1e-12,
          "max |dense - formula| = " + fmt(worst) + " over 21x21x5 grid"};
}

SuiteResult backend_equivalence() {
  SeededRng rng(424242);
  double worst_prob = 0.0;
  double worst_norm = 0.0;
  for (int c = 0; c < 50; ++c) {
    TrotterCircuitSpec spec;
    spec.n_qubits = 2 + static_cast<int>(rng.uniform01() * 9);  // 2..10
    spec.n_steps = 1 + static_cast<int>(rng.uniform01() * 20);  // 1..20
    for (int j = 1; j < spec.n_qubits; ++j) spec.bond_angles.push_back(rng.uniform(-kPi, kPi));
    spec.z_layer.base_phi = rng.uniform(-kPi, kPi);
    spec.z_layer.disorder_radius = rng.uniform(0.0, kPi);
    spec.drop_final_z = rng.uniform01() < 0.5;
    const std::uint64_t seed = static_cast<std::uint64_t>(c) * 7919 + 1;

    const std::vector<double> dense = occupation_probs(run_circuit(spec, seed));
    const SubspaceState sub = run_discrete(spec, spec.n_steps, seed);
    const std::vector<double> probs = sub.probabilities();
    for (std::size_t i = 0; i < probs.size(); ++i) {
      worst_prob = std::max(worst_prob, std::abs(dense[i] - probs[i]));
    }
    worst_norm = std::max(worst_norm, std::abs(sub.norm_squared() - 1.0));
  }
  return {"backend_equivalence", worst_prob <= 1e-10 && worst_norm <= 1e-12,
          "50 random XY circuits: max prob diff " + fmt(worst_prob) + ", norm drift " +
              fmt(worst_norm)};
}

SuiteResult dense_norm() {
  TrotterCircuitSpec spec;
  spec.n_qubits = 8;
  spec.n_steps = 12;
  spec.family = GateFamily::CRX;
  spec.bond_angles.assign(7, 1.1);
  spec.z_layer.base_phi = 0.7;
  spec.z_layer.disorder_radius = 0.9;
  StateVector state(spec.n_qubits);
  double worst = 0.0;
  for (const GateOp& g : build_circuit(spec, 5)) {
    apply_gate(state, g);
    worst = std::max(worst, std::abs(state.norm_squared() - 1.0));
  }
  return {"dense_norm_preservation", worst <= 1e-12, "max norm drift " + fmt(worst)};
}

SuiteResult two_level() {
  double worst = 0.0;
  const ChainSpec chain{{0.37}, {0.4, 0.4}};
  const ChainPropagator prop(chain);
  for (int k = 0; k <= 40; ++k) {
    const double t = 0.25 * k;
    const double p2 = prop.evolve_from_site(1, t).probabilities()[1];
    const double s = std::sin(0.37 * t);
    worst = std::max(worst, std::abs(p2 - s * s));
  }
  return {"continuous_two_level", worst <= 1e-12, "max |P2 - sin^2(Jt)| = " + fmt(worst)};
}

SuiteResult time_reversal() {
  const ChainSpec chain = resonance_chain(5, 0.1, 20.0, 3.0, 10.0);
  const ChainPropagator prop(chain);
  const SubspaceState back = prop.evolve(prop.evolve_from_site(1, 40.0), -40.0);
  double err = std::abs(back.amplitudes()[0] - Complex{1.0, 0.0});
  for (std::size_t i = 1; i < back.amplitudes().size(); ++i) err += std::abs(back.amplitudes()[i]);
  return {"continuous_time_reversal", err <= 1e-9, "round-trip error " + fmt(err)};
}

SuiteResult trotter_order() {
  const ChainSpec chain{{0.3, 0.5, 0.4, 0.2}, {0.1, -0.3, 0.25, 0.0, 0.4}};
  const int n_ts[] = {10, 20, 40, 80};
  const auto rows = convergence_study(chain, 1.0, n_ts);
  bool ok = true;
  std::string detail = "ratios";
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double ratio = rows[i - 1].distance / rows[i].distance;
    ok = ok && ratio >= 1.5 && ratio <= 2.5;
    detail += " " + fmt(ratio);
  }
  return {"trotter_first_order", ok, detail};
}

}  // namespace

int VerifyReport::passed() const {
  return static_cast<int>(std::count_if(suites.begin(), suites.end(),
                                        [](const SuiteResult& s) { return s.passed; }));
}

int VerifyReport::failed() const { return static_cast<int>(suites.size()) - passed(); }

VerifyReport run_verification() {
  VerifyReport report;
  const std::vector<std::function<SuiteResult()>> suites = {
      [] { return closed_form(2); }, [] { return closed_form(3); }, backend_equivalence,
      dense_norm, two_level, time_reversal, trotter_order};
  for (const auto& suite : suites) {
    try {
      report.suites.push_back(suite());
    } catch (const std::exception& e) {
      report.suites.push_back({"exception", false, e.what()});
    }
  }
  return report;
}

}  // namespace trotterlab
