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

#include <cmath>
#include <string>

#include "oracles.hpp"
#include "scramblemetry/circuit.hpp"
#include "scramblemetry/dense.hpp"
#include "scramblemetry/tableau.hpp"

using scramblemetry::Circuit;
using scramblemetry::CircuitClass;
using scramblemetry::GateKind;
using scramblemetry::ParseError;

namespace {

double matrix_distance(const oracles::Matrix& a, const oracles::Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("parses a minimal circuit") {
  const Circuit c = scramblemetry::parse_circuit("qubits 1\nt 0\n");
  CHECK(c.n == 1);
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0].kind == GateKind::T);
  CHECK(c.gates[0].q0 == 0);
}

TEST_CASE("parses gates in file order with comments and case folding") {
  const Circuit c = scramblemetry::parse_circuit(
      "# bell pair prep\n"
      "qubits 2\n"
      "\n"
      "H 0   # mixed case is fine\n"
      "cx 0 1\n");
  CHECK(c.n == 2);
  REQUIRE(c.gates.size() == 2);
  CHECK(c.gates[0].kind == GateKind::H);
  CHECK(c.gates[0].q0 == 0);
  CHECK(c.gates[1].kind == GateKind::CX);
  CHECK(c.gates[1].q0 == 0);
  CHECK(c.gates[1].q1 == 1);
}

TEST_CASE("parses rotation angles") {
  const Circuit c = scramblemetry::parse_circuit("qubits 1\nrz 0 1.5\nrx 0 -0.25\n");
  REQUIRE(c.gates.size() == 2);
  CHECK(c.gates[0].kind == GateKind::RZ);
  CHECK(c.gates[0].angle == doctest::Approx(1.5));
  CHECK(c.gates[1].angle == doctest::Approx(-0.25));
}

TEST_CASE("parse diagnostics carry line and column") {
  SUBCASE("qubit index out of range") {
    try {
      scramblemetry::parse_circuit("qubits 2\ncx 0 2\n");
      FAIL("expected a parse error");
    } catch (const ParseError& err) {
      CHECK(err.line() == 2);
      CHECK(std::string(err.what()).find("qubit index 2 out of range (n=2)") !=
            std::string::npos);
    }
  }
  SUBCASE("unknown gate") {
    try {
      scramblemetry::parse_circuit("qubits 1\nfoo 0\n");
      FAIL("expected a parse error");
    } catch (const ParseError& err) {
      CHECK(err.line() == 2);
      CHECK(std::string(err.what()).find("unknown gate") != std::string::npos);
    }
  }
  SUBCASE("arity mismatch") {
    CHECK_THROWS_WITH_AS(scramblemetry::parse_circuit("qubits 2\ncx 0\n"),
                         doctest::Contains("CX needs 2 qubit operands"),
                         ParseError);
  }
  SUBCASE("missing angle") {
    CHECK_THROWS_WITH_AS(scramblemetry::parse_circuit("qubits 1\nrz 0\n"),
                         doctest::Contains("needs 1 qubit operand and an angle"),
                         ParseError);
  }
  SUBCASE("extra operand") {
    CHECK_THROWS_WITH_AS(scramblemetry::parse_circuit("qubits 1\nh 0 1\n"),
                         doctest::Contains("unexpected extra operand"),
                         ParseError);
  }
  SUBCASE("duplicate targets") {
    CHECK_THROWS_WITH_AS(scramblemetry::parse_circuit("qubits 2\ncx 1 1\n"),
                         doctest::Contains("targets must be distinct"),
                         ParseError);
  }
  SUBCASE("missing header") {
    CHECK_THROWS_WITH_AS(scramblemetry::parse_circuit("h 0\n"),
                         doctest::Contains("qubits <n>"), ParseError);
  }
  SUBCASE("malformed header") {
    CHECK_THROWS_AS(scramblemetry::parse_circuit("qubits zero\nh 0\n"),
                    ParseError);
  }
}

TEST_CASE("print then parse is the identity") {
  oracles::Rng rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const Circuit c = scramblemetry::random_circuit(
        n, 15, CircuitClass::GENERAL, rng.next_u64());
    const std::string text = scramblemetry::format_circuit(c);
    CHECK(scramblemetry::parse_circuit(text) == c);
  }
}

TEST_CASE("classification is read off the gate alphabet") {
  Circuit free(2);
  free.append(GateKind::H, 0).append(GateKind::SWAP, 0, 1);
  const auto free_cls = scramblemetry::classify(free);
  CHECK(free_cls.clifford);
  CHECK(free_cls.non_entangling);
  CHECK(free_cls.non_scrambling);

  Circuit t_only(1);
  t_only.append(GateKind::T, 0);
  const auto t_cls = scramblemetry::classify(t_only);
  CHECK_FALSE(t_cls.clifford);
  CHECK(t_cls.non_entangling);
  CHECK_FALSE(t_cls.non_scrambling);

  Circuit cx_only(2);
  cx_only.append(GateKind::CX, 0, 1);
  const auto cx_cls = scramblemetry::classify(cx_only);
  CHECK(cx_cls.clifford);
  CHECK_FALSE(cx_cls.non_entangling);
  CHECK_FALSE(cx_cls.non_scrambling);
}

TEST_CASE("random circuits honor their class") {
  CHECK(scramblemetry::random_circuit(2, 0, CircuitClass::NON_SCRAMBLING, 7)
            .gates.empty());

  oracles::Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const std::uint64_t seed = rng.next_u64();

    const Circuit ne = scramblemetry::random_circuit(
        n, 20, CircuitClass::NON_ENTANGLING, seed);
    CHECK(scramblemetry::classify(ne).non_entangling);
    for (const auto& g : ne.gates) {
      const bool two_qubit = scramblemetry::gate_arity(g.kind) == 2;
      CHECK((!two_qubit || g.kind == GateKind::SWAP));
    }

    const Circuit cl =
        scramblemetry::random_circuit(n, 20, CircuitClass::CLIFFORD, seed);
    CHECK(scramblemetry::classify(cl).clifford);
    // The tableau must exist and satisfy the commutation-preserving invariant.
    const auto tableau = scramblemetry::CliffordTableau::from_circuit(cl);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        CHECK(scramblemetry::commutes(tableau.x_image(j).pauli,
                                      tableau.z_image(k).pauli) == (j != k));
      }
    }

    const Circuit ns = scramblemetry::random_circuit(
        n, 20, CircuitClass::NON_SCRAMBLING, seed);
    CHECK(scramblemetry::classify(ns).non_scrambling);
  }

  // Same seed, same circuit; different seeds should eventually differ.
  const Circuit a = scramblemetry::random_circuit(3, 25, CircuitClass::GENERAL, 5);
  const Circuit b = scramblemetry::random_circuit(3, 25, CircuitClass::GENERAL, 5);
  const Circuit c = scramblemetry::random_circuit(3, 25, CircuitClass::GENERAL, 6);
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("build_unitary matches entrywise gate embedding") {
  SUBCASE("empty circuit is the identity") {
    const Circuit c(1);
    CHECK(matrix_distance(scramblemetry::build_unitary(c),
                          oracles::Matrix::Identity(2, 2)) == 0.0);
  }
  SUBCASE("single hadamard") {
    Circuit c(1);
    c.append(GateKind::H, 0);
    const double s = 1.0 / std::sqrt(2.0);
    oracles::Matrix expected(2, 2);
    expected << s, s, s, -s;
    CHECK(matrix_distance(scramblemetry::build_unitary(c), expected) < 1e-15);
  }
  SUBCASE("hadamard twice is the identity") {
    Circuit c(1);
    c.append(GateKind::H, 0).append(GateKind::H, 0);
    CHECK(matrix_distance(scramblemetry::build_unitary(c),
                          oracles::Matrix::Identity(2, 2)) < 1e-12);
  }
  SUBCASE("random circuits against the embedding oracle") {
    oracles::Rng rng(59);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(4));
      const Circuit c = scramblemetry::random_circuit(
          n, 18, CircuitClass::GENERAL, rng.next_u64());
      const oracles::Matrix fast = scramblemetry::build_unitary(c);
      const oracles::Matrix slow = oracles::circuit_unitary(c);
      CHECK(matrix_distance(fast, slow) < 1e-12);
      CHECK(scramblemetry::require_unitary(fast) == c.n);
    }
  }
}

TEST_CASE("clifford unitaries agree with tableau conjugation on every pauli") {
  oracles::Rng rng(61);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const Circuit c = scramblemetry::random_circuit(
        n, 15, CircuitClass::CLIFFORD, rng.next_u64());
    const oracles::Matrix u = scramblemetry::build_unitary(c);
    const auto tableau = scramblemetry::CliffordTableau::from_circuit(c);
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const auto p = scramblemetry::PauliString::from_index(n, idx);
      const auto image = tableau.conjugate(p);
      const oracles::Matrix expected =
          u.adjoint() * oracles::pauli_kron(p) * u;
      const oracles::Matrix got =
          image.sign() * oracles::pauli_kron(image.pauli);
      CHECK(matrix_distance(got, expected) < 1e-10);
    }
  }
}

TEST_CASE("circuit composition helpers") {
  Circuit left(1);
  left.append(GateKind::H, 0);
  Circuit right(1);
  right.append(GateKind::T, 0);
  const Circuit shifted = right.shifted(1, 2);
  CHECK(shifted.n == 2);
  CHECK(shifted.gates[0].q0 == 1);
  const Circuit joint = left.shifted(0, 2).then(shifted);
  CHECK(joint.gates.size() == 2);
  CHECK(joint.gates[0].kind == GateKind::H);
  CHECK(joint.gates[1].q0 == 1);
}
