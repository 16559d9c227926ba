// Copyright 2026 The scramblemetry authors
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

#include "scramblemetry/tableau.hpp"

#include <sstream>
#include <stdexcept>

namespace scramblemetry {

namespace {

// Heisenberg map g^dag P g of one single-qubit Clifford gate, acting on the
// (x, z) bits of one qubit of a larger signed Pauli. Sign tables follow from
// the canonical Y = i X Z convention; note g^dag X g, not g X g^dag, so for
// example S sends X to -Y.
void apply_1q(SignedPauli& p, GateKind kind, int q) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  const bool x = (p.pauli.x_bits & bit) != 0;
  const bool z = (p.pauli.z_bits & bit) != 0;
  bool flip = false;
  switch (kind) {
    case GateKind::I:
      break;
    case GateKind::X:
      flip = z;
      break;
    case GateKind::Y:
      flip = x != z;
      break;
    case GateKind::Z:
      flip = x;
      break;
    case GateKind::H:
      flip = x && z;
      p.pauli.x_bits ^= (x != z) ? bit : 0;
      p.pauli.z_bits ^= (x != z) ? bit : 0;
      break;
    case GateKind::S:
      // X -> -Y, Y -> X, Z -> Z
      flip = x && !z;
      p.pauli.z_bits ^= x ? bit : 0;
      break;
    case GateKind::SDG:
      // X -> Y, Y -> -X, Z -> Z
      flip = x && z;
      p.pauli.z_bits ^= x ? bit : 0;
      break;
    default:
      throw std::logic_error("apply_1q called with a non-Clifford gate");
  }
  if (flip) {
    p.phase_exp = static_cast<std::uint8_t>((p.phase_exp + 2) & 3);
  }
}

// CX is self-inverse, so the Heisenberg map is the textbook propagation
// X_c -> X_c X_t, Z_t -> Z_c Z_t with the standard tableau sign rule.
void apply_cx(SignedPauli& p, int control, int target) {
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  const bool xc = (p.pauli.x_bits & cbit) != 0;
  const bool zc = (p.pauli.z_bits & cbit) != 0;
  const bool xt = (p.pauli.x_bits & tbit) != 0;
  const bool zt = (p.pauli.z_bits & tbit) != 0;
  if (xc && zt && (xt == zc)) {
    p.phase_exp = static_cast<std::uint8_t>((p.phase_exp + 2) & 3);
  }
  if (xc) {
    p.pauli.x_bits ^= tbit;
  }
  if (zt) {
    p.pauli.z_bits ^= cbit;
  }
}

void apply_swap(SignedPauli& p, int a, int b) {
  const std::uint64_t abit = std::uint64_t{1} << a;
  const std::uint64_t bbit = std::uint64_t{1} << b;
  const bool swap_x = ((p.pauli.x_bits & abit) != 0) != ((p.pauli.x_bits & bbit) != 0);
  const bool swap_z = ((p.pauli.z_bits & abit) != 0) != ((p.pauli.z_bits & bbit) != 0);
  if (swap_x) {
    p.pauli.x_bits ^= abit | bbit;
  }
  if (swap_z) {
    p.pauli.z_bits ^= abit | bbit;
  }
}

}  // namespace

CliffordTableau::CliffordTableau(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("tableau needs at least one qubit");
  }
  x_images_.reserve(static_cast<std::size_t>(n_qubits));
  z_images_.reserve(static_cast<std::size_t>(n_qubits));
  for (int j = 0; j < n_qubits; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    x_images_.push_back(SignedPauli{PauliString(n_qubits, bit, 0), 0});
    z_images_.push_back(SignedPauli{PauliString(n_qubits, 0, bit), 0});
  }
}

void CliffordTableau::apply_heisenberg(const Gate& gate) {
  for (std::vector<SignedPauli>* rows : {&x_images_, &z_images_}) {
    for (SignedPauli& row : *rows) {
      switch (gate.kind) {
        case GateKind::CX:
          apply_cx(row, gate.q0, gate.q1);
          break;
        case GateKind::CZ:
          // CZ = H_t CX H_t, so compose the three Heisenberg maps.
          apply_1q(row, GateKind::H, gate.q1);
          apply_cx(row, gate.q0, gate.q1);
          apply_1q(row, GateKind::H, gate.q1);
          break;
        case GateKind::SWAP:
          apply_swap(row, gate.q0, gate.q1);
          break;
        default:
          apply_1q(row, gate.kind, gate.q0);
          break;
      }
    }
  }
}

CliffordTableau CliffordTableau::from_circuit(const Circuit& circuit) {
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    if (!gate_is_clifford(circuit.gates[i].kind)) {
      std::ostringstream msg;
      msg << "non-Clifford gate " << gate_name(circuit.gates[i].kind) << " at gate "
          << (i + 1) << " of the circuit";
      throw std::invalid_argument(msg.str());
    }
  }
  CliffordTableau tableau(circuit.n);
  // U = G_k ... G_1, so U^dag P U peels gates from the last one inward.
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    tableau.apply_heisenberg(*it);
  }
  return tableau;
}

SignedPauli CliffordTableau::conjugate(const SignedPauli& p) const {
  SignedPauli out = conjugate(p.pauli);
  out.phase_exp = static_cast<std::uint8_t>((out.phase_exp + p.phase_exp) & 3);
  return out;
}

SignedPauli CliffordTableau::conjugate(const PauliString& p) const {
  if (p.n != n_) {
    throw std::invalid_argument("Pauli and tableau qubit counts differ");
  }
  // P = i^{|x & z|} prod_j X_j^{x_j} prod_j Z_j^{z_j}, and conjugation is an
  // algebra homomorphism, so multiply the generator images in that order.
  SignedPauli acc{PauliString(n_, 0, 0),
                  static_cast<std::uint8_t>(std::popcount(p.x_bits & p.z_bits) & 3)};
  for (int j = 0; j < n_; ++j) {
    if ((p.x_bits >> j) & 1) {
      acc = multiply(acc, x_images_[static_cast<std::size_t>(j)]);
    }
  }
  for (int j = 0; j < n_; ++j) {
    if ((p.z_bits >> j) & 1) {
      acc = multiply(acc, z_images_[static_cast<std::size_t>(j)]);
    }
  }
  if ((acc.phase_exp & 1) != 0) {
    throw std::logic_error("conjugate of a Hermitian Pauli came out non-Hermitian");
  }
  return acc;
}

}  // namespace scramblemetry
