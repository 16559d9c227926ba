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

#include <bit>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace scramblemetry {

/// Hermitian n-qubit Pauli string in symplectic form. The dense operator it
/// stands for is i^{|x & z|} * X^x * Z^z, which squares to the identity and
/// carries coefficient +1 on every basis element. Bit j of each mask belongs
/// to qubit j (little-endian), so qubit 0 is the least significant bit.
struct PauliString {
  int n = 0;
  std::uint64_t x_bits = 0;
  std::uint64_t z_bits = 0;

  PauliString() = default;
  PauliString(int n_qubits, std::uint64_t x, std::uint64_t z);

  static PauliString identity(int n_qubits) { return PauliString(n_qubits, 0, 0); }

  /// Inverse of index(): splits a (z|x) Pauli index back into bit masks.
  static PauliString from_index(int n_qubits, std::uint64_t index);

  /// Flat index into a 4^n spectrum: z bits in the high half, x in the low.
  std::uint64_t index() const { return (z_bits << n) | x_bits; }

  bool is_identity() const { return x_bits == 0 && z_bits == 0; }

  /// One letter per qubit, qubit 0 first, e.g. "XIZ".
  std::string letters() const;

  bool operator==(const PauliString& other) const = default;
};

/// Number of non-identity tensor factors.
int weight(const PauliString& p);

/// Pauli weight of a (z|x) index without unpacking it.
inline int weight_of_index(std::uint64_t index, int n) {
  const std::uint64_t mask = (n >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return std::popcount(((index >> n) | index) & mask);
}

/// A Pauli string together with a fourth-root-of-unity sign i^phase_exp.
struct SignedPauli {
  PauliString pauli;
  std::uint8_t phase_exp = 0;  // sign = i^phase_exp, phase_exp in {0,1,2,3}

  std::complex<double> sign() const;
  bool operator==(const SignedPauli& other) const = default;
};

/// Exact product of two canonical Pauli strings; the result's sign makes
/// dense(result) == dense(p) * dense(q) hold exactly.
SignedPauli multiply(const PauliString& p, const PauliString& q);
SignedPauli multiply(const SignedPauli& p, const SignedPauli& q);

/// True iff the symplectic inner product x_p.z_q + x_q.z_p is even.
bool commutes(const PauliString& p, const PauliString& q);

/// Parses a full letter string such as "XIZ" (qubit 0 first).
PauliString pauli_from_letters(std::string_view letters);

/// Parses a site-label product such as "X0" or "X0Z2" (case-insensitive).
PauliString pauli_from_sites(std::string_view label, int n_qubits);

/// Site-label form of a Pauli, e.g. "X0Z2"; "I" for the identity.
std::string pauli_site_label(const PauliString& p);

}  // namespace scramblemetry
