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

// Circuit description types for Trotterized transverse-field XY chains.
//
// Sites and qubits are 1-based throughout the public API. A Trotter step is
// one layer of nearest-neighbour two-qubit gates applied in ascending bond
// order (1,2), (2,3), ..., (N-1,N), followed by one Rz on every qubit. The
// same realized Rz angles are reused for every step of a circuit.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trotterlab {

enum class GateKind { XY, CRX, RZ, X };

/// Two-qubit gate used for the hopping layer.
enum class GateFamily { XY, CRX };

/// How the bond angles of a TrotterCircuitSpec map onto XY gate angles.
///
///   Hop:         the gate angle is the bond angle. XY(theta) sends
///                |10> -> cos(theta)|10> - i sin(theta)|01>.
///   Hamiltonian: the bond angle is J*tau for the coupling term
///                J (XX + YY) / 4, so the hop angle is theta / 2.
///
/// Controlled-Rx angles are always used as given.
enum class AngleConvention { Hop, Hamiltonian };

std::string_view to_string(GateKind kind);
std::string_view to_string(GateFamily family);
std::string_view to_string(AngleConvention convention);
GateFamily parse_gate_family(std::string_view text);
AngleConvention parse_angle_convention(std::string_view text);

struct GateOp {
  GateKind kind = GateKind::X;
  int site = 1;     ///< qubit for RZ/X, first (control) qubit for XY/CRX
  int site2 = 0;    ///< second (target) qubit for XY/CRX, 0 otherwise
  double angle = 0; ///< radians; unused for X

  static GateOp xy(int j, double theta) { return {GateKind::XY, j, j + 1, theta}; }
  static GateOp crx(int j, double theta) { return {GateKind::CRX, j, j + 1, theta}; }
  static GateOp rz(int q, double phi) { return {GateKind::RZ, q, 0, phi}; }
  static GateOp x(int q) { return {GateKind::X, q, 0, 0.0}; }

  bool is_two_qubit() const { return kind == GateKind::XY || kind == GateKind::CRX; }

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

/// Throws ConfigError unless the gate's sites lie in [1, n_qubits] and
/// two-qubit gates act on (j, j+1).
void validate_gate(const GateOp& gate, int n_qubits);

std::string describe(const GateOp& gate);

struct ZLayerSpec {
  double base_phi = 0.0;
  /// Per-qubit signs (+1/-1). Empty means alternating +,-,+,-,...
  std::vector<int> sign_pattern;
  /// Uniform disorder r_j in [-R, R] added to base_phi before the sign.
  double disorder_radius = 0.0;
  /// Hand-set angles; bypasses sign pattern and sampling entirely.
  std::optional<std::vector<double>> explicit_phis;
};

struct TrotterCircuitSpec {
  int n_qubits = 2;
  int n_steps = 1;
  GateFamily family = GateFamily::XY;
  std::vector<double> bond_angles;  ///< N-1 entries
  ZLayerSpec z_layer;
  bool drop_final_z = true;
  int initial_excitation_site = 1;
  AngleConvention convention = AngleConvention::Hop;
};

/// Tight-binding chain: hopping J_j between sites j and j+1, on-site V_j.
struct ChainSpec {
  std::vector<double> couplings;
  std::vector<double> potentials;

  int size() const { return static_cast<int>(potentials.size()); }
};

void validate(const ZLayerSpec& spec, int n_qubits);
void validate(const TrotterCircuitSpec& spec);
void validate(const ChainSpec& chain);

/// Realized Rz angles phi_j = s_j * (base_phi + r_j), r_j ~ U[-R, R] drawn in
/// qubit order from SeededRng(seed). No draws happen when R == 0, and
/// explicit_phis are returned verbatim.
std::vector<double> realize_z_layer(const ZLayerSpec& spec, int n_qubits,
                                    std::uint64_t seed);

/// Gate angles actually applied on each bond after the angle convention.
std::vector<double> effective_bond_angles(const TrotterCircuitSpec& spec);

/// X on the initial site, then n_steps of (two-qubit layer, Rz layer). The Rz
/// layer of the last step is omitted when drop_final_z is set.
std::vector<GateOp> build_circuit(const TrotterCircuitSpec& spec, std::uint64_t seed);

/// J_j = hop_j / tau and V_j = phi_j / tau. Only defined for the XY family.
ChainSpec chain_from_circuit(const TrotterCircuitSpec& spec, double tau,
                             std::uint64_t seed = 0);

/// Inverse of chain_from_circuit for the hop convention: bond angles J_j tau
/// and explicit Rz angles V_j tau.
TrotterCircuitSpec circuit_from_chain(const ChainSpec& chain, double tau, int n_steps);

}  // namespace trotterlab
