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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "oracles.hpp"
#include "scramblemetry/pauli.hpp"
#include "scramblemetry/tableau.hpp"

using scramblemetry::CliffordTableau;
using scramblemetry::Circuit;
using scramblemetry::GateKind;
using scramblemetry::PauliString;
using scramblemetry::SignedPauli;

namespace {

double matrix_distance(const oracles::Matrix& a, const oracles::Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

oracles::Matrix dense_signed(const SignedPauli& sp) {
  return sp.sign() * oracles::pauli_kron(sp.pauli);
}

}  // namespace

TEST_CASE("weight counts non-identity tensor factors") {
  CHECK(scramblemetry::weight(PauliString::identity(3)) == 0);
  CHECK(scramblemetry::weight(PauliString(3, 0b010, 0b000)) == 1);  // X on one site
  CHECK(scramblemetry::weight(PauliString(2, 0b10, 0b11)) == 2);    // Y tensor Z
  CHECK(scramblemetry::weight(PauliString(2, 0b01, 0b01)) == 1);    // single Y

  // Cross-check against a brute-force count over the dense Kronecker factors.
  oracles::Rng rng(11);
  for (int trial = 0; trial < 64; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const PauliString p = rng.random_pauli(n);
    int count = 0;
    for (int q = 0; q < n; ++q) {
      const bool x = (p.x_bits >> q) & 1u;
      const bool z = (p.z_bits >> q) & 1u;
      if (x || z) ++count;
    }
    CHECK(scramblemetry::weight(p) == count);
    CHECK(scramblemetry::weight_of_index(p.index(), n) == count);
  }
}

TEST_CASE("index round trips and orders z above x") {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const PauliString p = PauliString::from_index(n, idx);
      CHECK(p.index() == idx);
      CHECK(p.x_bits == (idx & ((std::uint64_t{1} << n) - 1)));
      CHECK(p.z_bits == (idx >> n));
    }
  }
}

TEST_CASE("letters and label parsing round trip") {
  CHECK(PauliString(3, 0b001, 0b000).letters() == "XII");
  CHECK(PauliString(3, 0b001, 0b001).letters() == "YII");
  CHECK(PauliString(3, 0b000, 0b100).letters() == "IIZ");
  CHECK(scramblemetry::pauli_from_letters("XII") == PauliString(3, 0b001, 0b000));
  CHECK(scramblemetry::pauli_from_letters("IZY") ==
        PauliString(3, 0b100, 0b110));

  CHECK(scramblemetry::pauli_from_sites("X0Z2", 3) ==
        PauliString(3, 0b001, 0b100));
  CHECK(scramblemetry::pauli_from_sites("y1", 3) == PauliString(3, 0b010, 0b010));
  CHECK(scramblemetry::pauli_from_sites("I", 3) == PauliString::identity(3));
  CHECK(scramblemetry::pauli_site_label(PauliString(3, 0b001, 0b100)) == "X0Z2");
  CHECK(scramblemetry::pauli_site_label(PauliString::identity(2)) == "I");

  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const PauliString p = PauliString::from_index(n, idx);
      CHECK(scramblemetry::pauli_from_letters(p.letters()) == p);
      CHECK(scramblemetry::pauli_from_sites(scramblemetry::pauli_site_label(p),
                                            n) == p);
    }
  }
}

TEST_CASE("site label parsing rejects bad input") {
  CHECK_THROWS_WITH_AS(scramblemetry::pauli_from_sites("X3", 3),
                       doctest::Contains("out of range"), std::invalid_argument);
  CHECK_THROWS_AS(scramblemetry::pauli_from_sites("X0X0", 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(scramblemetry::pauli_from_sites("Q0", 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(scramblemetry::pauli_from_letters("XQ"), std::invalid_argument);
}

TEST_CASE("multiply matches the dense matrix product on one qubit") {
  // All sixteen ordered pairs of single-qubit letters.
  for (std::uint64_t i = 0; i < 4; ++i) {
    for (std::uint64_t j = 0; j < 4; ++j) {
      const PauliString p = PauliString::from_index(1, i);
      const PauliString q = PauliString::from_index(1, j);
      const SignedPauli prod = scramblemetry::multiply(p, q);
      const oracles::Matrix expected = oracles::pauli_kron(p) * oracles::pauli_kron(q);
      CHECK(matrix_distance(dense_signed(prod), expected) < 1e-12);
    }
  }

  // Pin the canonical phases explicitly.
  const PauliString x(1, 1, 0);
  const PauliString z(1, 0, 1);
  const SignedPauli xx = scramblemetry::multiply(x, x);
  CHECK(xx.pauli.is_identity());
  CHECK(xx.phase_exp == 0);
  const SignedPauli xz = scramblemetry::multiply(x, z);
  CHECK(xz.pauli == PauliString(1, 1, 1));
  CHECK(xz.sign() == std::complex<double>(0.0, -1.0));
}

TEST_CASE("multiply handles disjoint supports and random strings") {
  const SignedPauli prod = scramblemetry::multiply(PauliString(2, 0b01, 0b00),
                                                   PauliString(2, 0b00, 0b10));
  CHECK(prod.pauli == PauliString(2, 0b01, 0b10));
  CHECK(prod.phase_exp == 0);

  oracles::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const PauliString p = rng.random_pauli(n);
    const PauliString q = rng.random_pauli(n);
    const SignedPauli fast = scramblemetry::multiply(p, q);
    const oracles::Matrix expected =
        oracles::pauli_kron(p) * oracles::pauli_kron(q);
    CHECK(matrix_distance(dense_signed(fast), expected) < 1e-12);
  }
}

TEST_CASE("signed multiply composes phases") {
  oracles::Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const SignedPauli p{rng.random_pauli(n),
                        static_cast<std::uint8_t>(rng.below(4))};
    const SignedPauli q{rng.random_pauli(n),
                        static_cast<std::uint8_t>(rng.below(4))};
    const SignedPauli fast = scramblemetry::multiply(p, q);
    const oracles::Matrix expected = dense_signed(p) * dense_signed(q);
    CHECK(matrix_distance(dense_signed(fast), expected) < 1e-12);
  }
}

TEST_CASE("commutes matches the dense commutator") {
  const PauliString x(1, 1, 0);
  const PauliString z(1, 0, 1);
  CHECK(scramblemetry::commutes(x, x));
  CHECK_FALSE(scramblemetry::commutes(x, z));
  CHECK(scramblemetry::commutes(PauliString(2, 0b01, 0b10),
                                PauliString(2, 0b10, 0b01)));

  oracles::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const PauliString p = rng.random_pauli(n);
    const PauliString q = rng.random_pauli(n);
    const oracles::Matrix pm = oracles::pauli_kron(p);
    const oracles::Matrix qm = oracles::pauli_kron(q);
    const bool dense_commutes = matrix_distance(pm * qm, qm * pm) < 1e-12;
    CHECK(scramblemetry::commutes(p, q) == dense_commutes);
  }
}

TEST_CASE("pauli strings reject out-of-range masks") {
  CHECK_THROWS_AS(PauliString(2, 0b100, 0), std::invalid_argument);
  CHECK_THROWS_AS(PauliString(2, 0, 0b100), std::invalid_argument);
  CHECK_THROWS_AS(PauliString(0, 0, 0).letters(), std::invalid_argument);
  CHECK_THROWS_AS(PauliString(40, 0, 0), std::invalid_argument);
}

TEST_CASE("identity tableau fixes every pauli") {
  const CliffordTableau id(3);
  oracles::Rng rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const PauliString p = rng.random_pauli(3);
    const SignedPauli image = id.conjugate(p);
    CHECK(image.pauli == p);
    CHECK(image.phase_exp == 0);
  }
}

TEST_CASE("hadamard tableau swaps x and z") {
  Circuit c(1);
  c.append(GateKind::H, 0);
  const CliffordTableau t = CliffordTableau::from_circuit(c);
  const SignedPauli hx = t.conjugate(PauliString(1, 1, 0));
  CHECK(hx.pauli == PauliString(1, 0, 1));
  CHECK(hx.phase_exp == 0);
  const SignedPauli hz = t.conjugate(PauliString(1, 0, 1));
  CHECK(hz.pauli == PauliString(1, 1, 0));
  CHECK(hz.phase_exp == 0);
}

TEST_CASE("cx tableau spreads x from control to target") {
  Circuit c(2);
  c.append(GateKind::CX, 0, 1);
  const CliffordTableau t = CliffordTableau::from_circuit(c);
  const SignedPauli image = t.conjugate(PauliString(2, 0b01, 0b00));
  CHECK(image.pauli == PauliString(2, 0b11, 0b00));
  CHECK(image.phase_exp == 0);
}

TEST_CASE("tableau conjugation agrees with dense conjugation") {
  oracles::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const Circuit circuit = scramblemetry::random_circuit(
        n, 12, scramblemetry::CircuitClass::CLIFFORD, rng.next_u64());
    const CliffordTableau t = CliffordTableau::from_circuit(circuit);
    const oracles::Matrix u = oracles::circuit_unitary(circuit);
    for (int k = 0; k < 8; ++k) {
      const PauliString p = rng.random_pauli(n);
      const oracles::Matrix expected =
          u.adjoint() * oracles::pauli_kron(p) * u;
      CHECK(matrix_distance(dense_signed(t.conjugate(p)), expected) < 1e-10);
    }
  }
}

TEST_CASE("tableau images preserve commutation structure") {
  oracles::Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const Circuit circuit = scramblemetry::random_circuit(
        n, 20, scramblemetry::CircuitClass::CLIFFORD, rng.next_u64());
    const CliffordTableau t = CliffordTableau::from_circuit(circuit);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // X_j and Z_k anticommute exactly when j == k; images must match.
        CHECK(scramblemetry::commutes(t.x_image(j).pauli, t.z_image(k).pauli) ==
              (j != k));
        CHECK(scramblemetry::commutes(t.x_image(j).pauli, t.x_image(k).pauli));
        CHECK(scramblemetry::commutes(t.z_image(j).pauli, t.z_image(k).pauli));
      }
    }
  }
}

TEST_CASE("tableau construction rejects non-clifford gates") {
  Circuit c(1);
  c.append(GateKind::T, 0);
  CHECK_THROWS_WITH_AS(CliffordTableau::from_circuit(c),
                       doctest::Contains("non-Clifford gate"),
                       std::invalid_argument);
}
