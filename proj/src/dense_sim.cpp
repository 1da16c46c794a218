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

#include "trotterlab/dense_sim.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "trotterlab/errors.hpp"

namespace trotterlab {
namespace {

constexpr Complex kMinusI{0.0, -1.0};

// Spreads k over the indices whose bit `pos` is zero.
inline std::uint64_t insert_zero_bit(std::uint64_t k, int pos) {
  const std::uint64_t low = k & ((std::uint64_t{1} << pos) - 1);
  return ((k >> pos) << (pos + 1)) | low;
}

// Two adjacent zero bits at positions pos and pos + 1.
inline std::uint64_t insert_zero_pair(std::uint64_t k, int pos) {
  const std::uint64_t low = k & ((std::uint64_t{1} << pos) - 1);
  return ((k >> pos) << (pos + 2)) | low;
}

void check_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
    throw ConfigError("dense backend supports 1.." + std::to_string(kMaxDenseQubits) +
                      " qubits, got " + std::to_string(n_qubits));
  }
}

void apply_xy(StateVector& state, int q, double theta) {
  const int n = state.n_qubits();
  const int pos = n - q - 1;  // bit of qubit q+1; qubit q sits at pos + 1
  const std::uint64_t hi = std::uint64_t{1} << (pos + 1);
  const std::uint64_t lo = std::uint64_t{1} << pos;
  const double c = std::cos(theta);
  const Complex mis = kMinusI * std::sin(theta);
  auto amps = state.amplitudes();
  const std::uint64_t blocks = std::uint64_t{1} << (n - 2);
  for (std::uint64_t k = 0; k < blocks; ++k) {
    const std::uint64_t base = insert_zero_pair(k, pos);
    Complex& a10 = amps[base | hi];
    Complex& a01 = amps[base | lo];
    const Complex x = a10;
    const Complex y = a01;
    a10 = c * x + mis * y;
    a01 = mis * x + c * y;
  }
}

void apply_crx(StateVector& state, int control, double theta) {
  const int n = state.n_qubits();
  const int pos = n - control - 1;
  const std::uint64_t ctrl = std::uint64_t{1} << (pos + 1);
  const std::uint64_t tgt = std::uint64_t{1} << pos;
  const double c = std::cos(0.5 * theta);
  const Complex mis = kMinusI * std::sin(0.5 * theta);
  auto amps = state.amplitudes();
  const std::uint64_t blocks = std::uint64_t{1} << (n - 2);
  for (std::uint64_t k = 0; k < blocks; ++k) {
    const std::uint64_t base = insert_zero_pair(k, pos) | ctrl;
    Complex& a0 = amps[base];
    Complex& a1 = amps[base | tgt];
    const Complex x = a0;
    const Complex y = a1;
    a0 = c * x + mis * y;
    a1 = mis * x + c * y;
  }
}

void apply_rz(StateVector& state, int q, double phi) {
  const std::uint64_t m = state.mask(q);
  const Complex off = std::polar(1.0, -0.5 * phi);
  const Complex on = std::polar(1.0, 0.5 * phi);
  auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) amps[i] *= (i & m) ? on : off;
}

void apply_x(StateVector& state, int q) {
  const int pos = state.n_qubits() - q;
  const std::uint64_t m = std::uint64_t{1} << pos;
  auto amps = state.amplitudes();
  const std::uint64_t half = amps.size() / 2;
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i = insert_zero_bit(k, pos);
    std::swap(amps[i], amps[i | m]);
  }
}

std::uint64_t parse_bitstring(int n_qubits, std::string_view bitstring) {
  if (bitstring.size() != static_cast<std::size_t>(n_qubits)) {
    throw ConfigError("bitstring '" + std::string(bitstring) + "' has length " +
                      std::to_string(bitstring.size()) + ", expected " +
                      std::to_string(n_qubits));
  }
  std::uint64_t index = 0;
  for (char ch : bitstring) {
    if (ch != '0' && ch != '1') {
      throw ConfigError("bitstring '" + std::string(bitstring) + "' must contain only 0/1");
    }
    index = (index << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return index;
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::basis(int n_qubits, std::string_view bitstring) {
  StateVector state(n_qubits);
  const std::uint64_t index = parse_bitstring(n_qubits, bitstring);
  state.amplitudes_[0] = 0.0;
  state.amplitudes_[index] = 1.0;
  return state;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Complex& a : amplitudes_) total += std::norm(a);
  return total;
}

double StateVector::basis_prob(std::string_view bitstring) const {
  return std::norm(amplitudes_[parse_bitstring(n_qubits_, bitstring)]);
}

void apply_gate(StateVector& state, const GateOp& gate) {
  validate_gate(gate, state.n_qubits());
  switch (gate.kind) {
    case GateKind::XY: apply_xy(state, gate.site, gate.angle); break;
    case GateKind::CRX: apply_crx(state, gate.site, gate.angle); break;
    case GateKind::RZ: apply_rz(state, gate.site, gate.angle); break;
    case GateKind::X: apply_x(state, gate.site); break;
  }
}

StateVector run_circuit(const TrotterCircuitSpec& spec, std::uint64_t seed) {
  StateVector state(spec.n_qubits);
  for (const GateOp& gate : build_circuit(spec, seed)) apply_gate(state, gate);
  return state;
}

void run_circuit_steps(const TrotterCircuitSpec& spec, std::uint64_t seed,
                       const std::function<void(int, const StateVector&)>& on_step) {
  const std::vector<GateOp> gates = build_circuit(spec, seed);
  StateVector state(spec.n_qubits);
  std::size_t next = 0;
  apply_gate(state, gates[next++]);  // initial X
  const std::size_t layer = static_cast<std::size_t>(spec.n_qubits - 1);
  for (int eta = 1; eta <= spec.n_steps; ++eta) {
    for (std::size_t g = 0; g < layer; ++g) apply_gate(state, gates[next++]);
    while (next < gates.size() && gates[next].kind == GateKind::RZ) {
      apply_gate(state, gates[next++]);
    }
    on_step(eta, state);
  }
}

std::vector<double> occupation_probs(const StateVector& state) {
  const int n = state.n_qubits();
  std::vector<double> probs(static_cast<std::size_t>(n), 0.0);
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    for (std::uint64_t bits = i; bits != 0; bits &= bits - 1) {
      const int pos = std::countr_zero(bits);
      probs[static_cast<std::size_t>(n - 1 - pos)] += p;
    }
  }
  return probs;
}

double single_excitation_weight(const StateVector& state) {
  double total = 0.0;
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (std::popcount(i) == 1) total += std::norm(amps[i]);
  }
  return total;
}

}  // namespace trotterlab
