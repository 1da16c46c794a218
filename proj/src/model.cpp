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

#include "trotterlab/model.hpp"

#include <cmath>
#include <sstream>

#include "trotterlab/errors.hpp"
#include "trotterlab/random.hpp"

namespace trotterlab {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::XY: return "XY";
    case GateKind::CRX: return "CRX";
    case GateKind::RZ: return "RZ";
    case GateKind::X: return "X";
  }
  return "?";
}

std::string_view to_string(GateFamily family) {
  return family == GateFamily::XY ? "xy" : "crx";
}

std::string_view to_string(AngleConvention convention) {
  return convention == AngleConvention::Hop ? "hop" : "hamiltonian";
}

GateFamily parse_gate_family(std::string_view text) {
  if (text == "xy" || text == "XY") return GateFamily::XY;
  if (text == "crx" || text == "CRX") return GateFamily::CRX;
  throw ConfigError("unknown gate family '" + std::string(text) + "' (expected xy or crx)");
}

AngleConvention parse_angle_convention(std::string_view text) {
  if (text == "hop") return AngleConvention::Hop;
  if (text == "hamiltonian") return AngleConvention::Hamiltonian;
  throw ConfigError("unknown angle convention '" + std::string(text) +
                    "' (expected hop or hamiltonian)");
}

void validate_gate(const GateOp& gate, int n_qubits) {
  auto in_range = [n_qubits](int q) { return q >= 1 && q <= n_qubits; };
  if (!in_range(gate.site)) {
    throw ConfigError(describe(gate) + ": site out of range for " +
                      std::to_string(n_qubits) + " qubits");
  }
  if (gate.is_two_qubit()) {
    if (!in_range(gate.site2)) {
      throw ConfigError(describe(gate) + ": site out of range for " +
                        std::to_string(n_qubits) + " qubits");
    }
    if (gate.site2 != gate.site + 1) {
      throw ConfigError(describe(gate) + ": two-qubit gates act on (j, j+1) only");
    }
  }
}

std::string describe(const GateOp& gate) {
  std::ostringstream out;
  out.precision(17);
  out << to_string(gate.kind) << '(' << gate.site;
  if (gate.is_two_qubit()) out << ',' << gate.site2;
  if (gate.kind != GateKind::X) out << ';' << gate.angle;
  out << ')';
  return out.str();
}

void validate(const ZLayerSpec& spec, int n_qubits) {
  const auto n = static_cast<std::size_t>(n_qubits);
  if (spec.explicit_phis && spec.explicit_phis->size() != n) {
    throw ConfigError("explicit_phis has " + std::to_string(spec.explicit_phis->size()) +
                      " entries, expected " + std::to_string(n_qubits));
  }
  if (!spec.sign_pattern.empty()) {
    if (spec.sign_pattern.size() != n) {
      throw ConfigError("sign_pattern has " + std::to_string(spec.sign_pattern.size()) +
                        " entries, expected " + std::to_string(n_qubits));
    }
    for (int s : spec.sign_pattern) {
      if (s != 1 && s != -1) throw ConfigError("sign_pattern entries must be +1 or -1");
    }
  }
  if (!(spec.disorder_radius >= 0.0) || !std::isfinite(spec.disorder_radius)) {
    throw ConfigError("disorder_radius must be finite and >= 0");
  }
}

void validate(const TrotterCircuitSpec& spec) {
  if (spec.n_qubits < 2) throw ConfigError("n_qubits must be >= 2");
  if (spec.n_steps < 1) throw ConfigError("n_steps must be >= 1");
  if (spec.bond_angles.size() != static_cast<std::size_t>(spec.n_qubits - 1)) {
    throw ConfigError("bond_angles has " + std::to_string(spec.bond_angles.size()) +
                      " entries, expected " + std::to_string(spec.n_qubits - 1));
  }
  if (spec.initial_excitation_site < 1 || spec.initial_excitation_site > spec.n_qubits) {
    throw ConfigError("initial_excitation_site out of range");
  }
  validate(spec.z_layer, spec.n_qubits);
}

void validate(const ChainSpec& chain) {
  if (chain.potentials.empty()) throw ConfigError("chain must have at least one site");
  if (chain.couplings.size() + 1 != chain.potentials.size()) {
    throw ConfigError("chain needs exactly one coupling fewer than potentials");
  }
}

std::vector<double> realize_z_layer(const ZLayerSpec& spec, int n_qubits,
                                    std::uint64_t seed) {
  validate(spec, n_qubits);
  if (spec.explicit_phis) return *spec.explicit_phis;

  std::vector<double> phis(static_cast<std::size_t>(n_qubits));
  SeededRng rng(seed);
  for (int j = 0; j < n_qubits; ++j) {
    const int sign = spec.sign_pattern.empty() ? (j % 2 == 0 ? 1 : -1)
                                               : spec.sign_pattern[static_cast<std::size_t>(j)];
    double r = 0.0;
    if (spec.disorder_radius > 0.0) {
      r = rng.uniform(-spec.disorder_radius, spec.disorder_radius);
    }
    phis[static_cast<std::size_t>(j)] = sign * (spec.base_phi + r);
  }
  return phis;
}

std::vector<double> effective_bond_angles(const TrotterCircuitSpec& spec) {
  std::vector<double> angles = spec.bond_angles;
  if (spec.family == GateFamily::XY && spec.convention == AngleConvention::Hamiltonian) {
    for (double& a : angles) a *= 0.5;
  }
  return angles;
}

std::vector<GateOp> build_circuit(const TrotterCircuitSpec& spec, std::uint64_t seed) {
  validate(spec);
  const std::vector<double> bonds = effective_bond_angles(spec);
  const std::vector<double> phis = realize_z_layer(spec.z_layer, spec.n_qubits, seed);
  const int n = spec.n_qubits;

  std::vector<GateOp> gates;
  gates.reserve(1 + static_cast<std::size_t>(spec.n_steps) * (2 * n - 1));
  gates.push_back(GateOp::x(spec.initial_excitation_site));
  for (int step = 1; step <= spec.n_steps; ++step) {
    for (int j = 1; j < n; ++j) {
      const double theta = bonds[static_cast<std::size_t>(j - 1)];
      gates.push_back(spec.family == GateFamily::XY ? GateOp::xy(j, theta)
                                                    : GateOp::crx(j, theta));
    }
    if (step == spec.n_steps && spec.drop_final_z) break;
    for (int q = 1; q <= n; ++q) {
      gates.push_back(GateOp::rz(q, phis[static_cast<std::size_t>(q - 1)]));
    }
  }
  return gates;
}

ChainSpec chain_from_circuit(const TrotterCircuitSpec& spec, double tau, std::uint64_t seed) {
  if (spec.family != GateFamily::XY) {
    throw UnsupportedMapping(
        "controlled-Rx circuits do not conserve excitation number and have no "
        "tight-binding equivalent");
  }
  validate(spec);
  if (!(tau != 0.0) || !std::isfinite(tau)) throw ConfigError("tau must be finite and nonzero");

  ChainSpec chain;
  for (double theta : effective_bond_angles(spec)) chain.couplings.push_back(theta / tau);
  for (double phi : realize_z_layer(spec.z_layer, spec.n_qubits, seed)) {
    chain.potentials.push_back(phi / tau);
  }
  return chain;
}

TrotterCircuitSpec circuit_from_chain(const ChainSpec& chain, double tau, int n_steps) {
  validate(chain);
  TrotterCircuitSpec spec;
  spec.n_qubits = chain.size();
  spec.n_steps = n_steps;
  spec.family = GateFamily::XY;
  spec.convention = AngleConvention::Hop;
  for (double j : chain.couplings) spec.bond_angles.push_back(j * tau);
  std::vector<double> phis;
  for (double v : chain.potentials) phis.push_back(v * tau);
  spec.z_layer.explicit_phis = std::move(phis);
  return spec;
}

}  // namespace trotterlab
