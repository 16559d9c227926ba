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

#pragma once

#include "scramblemetry/circuit.hpp"
#include "scramblemetry/pauli.hpp"

#include <vector>

namespace scramblemetry {

/// Stabilizer tableau for the Heisenberg map P -> U^dag P U of a Clifford
/// circuit. Row j of x_images (z_images) is the image of the single-qubit
/// X_j (Z_j) generator; arbitrary Paulis conjugate by multiplying rows.
class CliffordTableau {
 public:
  /// Identity map on n qubits.
  explicit CliffordTableau(int n_qubits);

  /// Builds the map for a circuit; throws std::invalid_argument if any gate
  /// is not Clifford.
  static CliffordTableau from_circuit(const Circuit& circuit);

  int n_qubits() const { return n_; }

  const SignedPauli& x_image(int qubit) const { return x_images_[qubit]; }
  const SignedPauli& z_image(int qubit) const { return z_images_[qubit]; }

  /// U^dag P U for an arbitrary signed Pauli. The result of conjugating a
  /// Hermitian Pauli is Hermitian, so the phase stays in {+1, -1}.
  SignedPauli conjugate(const SignedPauli& p) const;
  SignedPauli conjugate(const PauliString& p) const;

 private:
  void apply_heisenberg(const Gate& gate);

  int n_;
  std::vector<SignedPauli> x_images_;
  std::vector<SignedPauli> z_images_;
};

}  // namespace scramblemetry
