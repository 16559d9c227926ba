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
#include "scramblemetry/common.hpp"
#include "scramblemetry/pauli.hpp"

#include <Eigen/Dense>

#include <string>

namespace scramblemetry {

using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;

/// Dense 2^n x 2^n matrix of the canonical Hermitian Pauli i^{|x&z|} X^x Z^z.
/// Basis index bit j belongs to qubit j (little-endian).
MatrixXcd pauli_dense(const PauliString& p);
MatrixXcd pauli_dense(const SignedPauli& p);

/// The 2x2 or 4x4 matrix of one gate on its local index space, where local
/// index bit 0 belongs to operand q0 and bit 1 to operand q1.
MatrixXcd gate_matrix(const Gate& gate);

/// Full 2^n x 2^n unitary of a circuit, built by applying gates in order.
MatrixXcd build_unitary(const Circuit& circuit, int n_max = kDefaultNMax);

/// Little-endian tensor product: `low` acts on qubits 0..n_low-1 and `high`
/// on the qubits above, so the result is kron(high, low).
MatrixXcd tensor_unitary(const MatrixXcd& low, const MatrixXcd& high);

/// Checks that u is square with power-of-two dimension and u u^dag = I to
/// `tol` (max-abs entry). Returns the qubit count; throws on violation.
int require_unitary(const MatrixXcd& u, double tol = kUnitarityTol);

/// Qubit count of a square power-of-two-dimensional matrix; throws if the
/// shape is anything else.
int qubits_of(const MatrixXcd& m);

/// P * U computed with row permutation and phases instead of a full product.
MatrixXcd pauli_times_unitary(const PauliString& p, const MatrixXcd& u);

/// Reads a dense operator file: a header line "n <qubits>", then 2^n rows of
/// 2^n whitespace-separated entries formatted like "0.5-0.25j"; '#' starts a
/// comment line. Throws ParseError with location on malformed input.
MatrixXcd read_operator_file(const std::string& path);
MatrixXcd parse_operator(std::string_view text);

/// Canonical text form accepted by parse_operator (entries "re±imj" at 17
/// significant digits).
std::string format_operator(const MatrixXcd& m);

}  // namespace scramblemetry
