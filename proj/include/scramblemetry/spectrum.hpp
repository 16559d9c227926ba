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

#include "scramblemetry/common.hpp"
#include "scramblemetry/dense.hpp"
#include "scramblemetry/pauli.hpp"
#include "scramblemetry/tableau.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace scramblemetry {

/// Pauli coefficients c_P of an operator O = sum_P c_P P over the canonical
/// Hermitian Pauli basis, stored flat with coeffs[(z << n) | x] = c_P.
/// Hermitian operators have real coefficients; we keep them complex so that
/// arbitrary operators round-trip.
struct PauliSpectrum {
  int n = 0;
  std::vector<std::complex<double>> coeffs;
  bool normalized = false;  // sum |c_P|^2 within 1e-9 of one

  PauliSpectrum() = default;
  explicit PauliSpectrum(int n_qubits);

  std::uint64_t size() const { return coeffs.size(); }

  std::complex<double>& at(const PauliString& p) { return coeffs[p.index()]; }
  const std::complex<double>& at(const PauliString& p) const { return coeffs[p.index()]; }

  /// sum_P |c_P|^2, the squared Hilbert-Schmidt norm Tr[O^dag O] / 2^n.
  double norm_squared() const;

  /// The probability vector q_P = |c_P|^2 the measures are computed from.
  std::vector<double> probabilities() const;
};

/// Coefficients of a dense operator via the qubit-wise fast transform,
/// c_P = Tr[P O] / 2^n in O(n 4^n) scalar operations. Sets the normalized
/// flag by testing the coefficient norm.
PauliSpectrum decompose(const MatrixXcd& op, int n_max = kDefaultNMax);

/// Inverse transform: rebuilds the dense matrix from coefficients.
MatrixXcd reconstruct(const PauliSpectrum& spectrum, int n_max = kDefaultNMax);

/// Rescales to sum |c_P|^2 = 1; throws std::invalid_argument on the zero
/// operator.
PauliSpectrum normalize(const PauliSpectrum& spectrum);

/// Spectrum of the Heisenberg image U^dag O U. Preserves the coefficient
/// norm (conjugation is an isometry); requires u unitary within tolerance.
PauliSpectrum conjugate(const MatrixXcd& u, const PauliSpectrum& spectrum);

/// Same map along a Clifford tableau: a signed permutation of coefficients,
/// exact and cheap for any qubit count the spectrum itself supports.
PauliSpectrum conjugate(const CliffordTableau& tableau, const PauliSpectrum& spectrum);

/// Spectrum of a tensor product: low factor on qubits 0..n1-1, high factor
/// above, with coefficients multiplying pairwise.
PauliSpectrum tensor_spectrum(const PauliSpectrum& low, const PauliSpectrum& high);

/// Pauli transfer matrix R(i, j) = Tr[P_i U^dag P_j U] / 2^n, the real
/// orthogonal 4^n x 4^n matrix of O -> U^dag O U on coefficient vectors;
/// column j is decompose(U^dag P_j U). Signed permutation for Cliffords.
Eigen::MatrixXd transfer_matrix(const MatrixXcd& u, int ptm_n_max = kDefaultPtmNMax);

}  // namespace scramblemetry
