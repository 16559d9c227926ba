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
#include <complex>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "scramblemetry/circuit.hpp"
#include "scramblemetry/common.hpp"
#include "scramblemetry/dense.hpp"
#include "scramblemetry/pauli.hpp"
#include "scramblemetry/spectrum.hpp"
#include "scramblemetry/tableau.hpp"

using scramblemetry::Circuit;
using scramblemetry::CircuitClass;
using scramblemetry::GateKind;
using scramblemetry::MatrixXcd;
using scramblemetry::PauliSpectrum;
using scramblemetry::PauliString;

namespace {

double matrix_distance(const MatrixXcd& a, const MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double spectrum_distance(const PauliSpectrum& s,
                         const std::vector<oracles::Complex>& reference) {
  REQUIRE(s.coeffs.size() == reference.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    worst = std::max(worst, std::abs(s.coeffs[i] - reference[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("pauli_dense matches the kronecker oracle") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const PauliString p = PauliString::from_index(n, idx);
      CHECK(matrix_distance(scramblemetry::pauli_dense(p),
                            oracles::pauli_kron(p)) == 0.0);
    }
  }
}

TEST_CASE("decompose pins the single-qubit cases") {
  const PauliSpectrum id = scramblemetry::decompose(MatrixXcd::Identity(2, 2));
  CHECK(std::abs(id.coeffs[0] - 1.0) < 1e-15);
  CHECK(std::abs(id.coeffs[1]) < 1e-15);
  CHECK(std::abs(id.coeffs[2]) < 1e-15);
  CHECK(std::abs(id.coeffs[3]) < 1e-15);
  CHECK(id.normalized);

  const PauliSpectrum x =
      scramblemetry::decompose(scramblemetry::pauli_dense(PauliString(1, 1, 0)));
  CHECK(std::abs(x.coeffs[1] - 1.0) < 1e-15);
  CHECK(std::abs(x.coeffs[0]) + std::abs(x.coeffs[2]) + std::abs(x.coeffs[3]) <
        1e-15);

  const double s = 1.0 / std::sqrt(2.0);
  const MatrixXcd xy = s * (scramblemetry::pauli_dense(PauliString(1, 1, 0)) +
                            scramblemetry::pauli_dense(PauliString(1, 1, 1)));
  const PauliSpectrum sxy = scramblemetry::decompose(xy);
  CHECK(std::abs(sxy.coeffs[1] - s) < 1e-15);  // X index
  CHECK(std::abs(sxy.coeffs[3] - s) < 1e-15);  // Y index
}

TEST_CASE("decompose equals the trace formula on every basis element") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const MatrixXcd op =
          scramblemetry::pauli_dense(PauliString::from_index(n, idx));
      const PauliSpectrum fast = scramblemetry::decompose(op);
      CHECK(spectrum_distance(fast, oracles::trace_spectrum(op, n)) < 1e-12);
    }
  }
}

TEST_CASE("decompose equals the trace formula on random dense operators") {
  oracles::Rng rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const MatrixXcd op = rng.random_matrix(1 << n);
    const PauliSpectrum fast = scramblemetry::decompose(op);
    CHECK(spectrum_distance(fast, oracles::trace_spectrum(op, n)) < 1e-10);
  }
}

TEST_CASE("reconstruct inverts decompose") {
  PauliSpectrum zz(2);
  zz.at(PauliString(2, 0b00, 0b11)) = 1.0;
  MatrixXcd expected = MatrixXcd::Zero(4, 4);
  expected(0, 0) = 1.0;
  expected(1, 1) = -1.0;
  expected(2, 2) = -1.0;
  expected(3, 3) = 1.0;
  CHECK(matrix_distance(scramblemetry::reconstruct(zz), expected) < 1e-15);

  const PauliSpectrum zero(2);
  CHECK(scramblemetry::reconstruct(zero).cwiseAbs().maxCoeff() == 0.0);

  oracles::Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const MatrixXcd op = rng.random_matrix(1 << n);
    const MatrixXcd round_trip =
        scramblemetry::reconstruct(scramblemetry::decompose(op));
    CHECK(matrix_distance(round_trip, op) < 1e-10);
  }
}

TEST_CASE("normalize rescales to unit two-norm") {
  PauliSpectrum s(1);
  s.coeffs[0] = 2.0;
  const PauliSpectrum unit = scramblemetry::normalize(s);
  CHECK(std::abs(unit.coeffs[0] - 1.0) < 1e-15);
  CHECK(unit.normalized);

  PauliSpectrum two(1);
  two.coeffs[0] = 1.0;
  two.coeffs[1] = 1.0;
  const PauliSpectrum half = scramblemetry::normalize(two);
  CHECK(std::abs(half.coeffs[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(half.coeffs[1] - 1.0 / std::sqrt(2.0)) < 1e-15);

  CHECK_THROWS_WITH_AS(scramblemetry::normalize(PauliSpectrum(2)),
                       "cannot normalize zero operator", std::invalid_argument);
}

TEST_CASE("conjugate by the identity is a no-op") {
  oracles::Rng rng(73);
  const MatrixXcd op = rng.random_matrix(4);
  const PauliSpectrum s = scramblemetry::decompose(op);
  const PauliSpectrum same =
      scramblemetry::conjugate(MatrixXcd::Identity(4, 4), s);
  double worst = 0.0;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    worst = std::max(worst, std::abs(s.coeffs[i] - same.coeffs[i]));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("conjugate moves x to z under hadamard and splits under t") {
  Circuit h(1);
  h.append(GateKind::H, 0);
  PauliSpectrum x(1);
  x.at(PauliString(1, 1, 0)) = 1.0;
  x.normalized = true;
  const PauliSpectrum hx =
      scramblemetry::conjugate(scramblemetry::build_unitary(h), x);
  CHECK(std::abs(hx.coeffs[2] - 1.0) < 1e-12);  // Z index
  CHECK(std::abs(hx.coeffs[1]) < 1e-12);

  Circuit t(1);
  t.append(GateKind::T, 0);
  const PauliSpectrum tx =
      scramblemetry::conjugate(scramblemetry::build_unitary(t), x);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(std::abs(tx.coeffs[1]) - s) < 1e-12);
  CHECK(std::abs(std::abs(tx.coeffs[3]) - s) < 1e-12);
}

TEST_CASE("dense and tableau conjugation agree on clifford circuits") {
  oracles::Rng rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const Circuit c = scramblemetry::random_circuit(
        n, 15, CircuitClass::CLIFFORD, rng.next_u64());
    const MatrixXcd u = scramblemetry::build_unitary(c);
    const auto tableau = scramblemetry::CliffordTableau::from_circuit(c);
    const PauliSpectrum s =
        scramblemetry::decompose(rng.random_matrix(1 << n));
    const PauliSpectrum dense_image = scramblemetry::conjugate(u, s);
    const PauliSpectrum tableau_image = scramblemetry::conjugate(tableau, s);
    double worst = 0.0;
    for (std::size_t i = 0; i < dense_image.coeffs.size(); ++i) {
      worst = std::max(worst,
                       std::abs(dense_image.coeffs[i] - tableau_image.coeffs[i]));
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("conjugate rejects non-unitary maps") {
  PauliSpectrum s(1);
  s.coeffs[0] = 1.0;
  MatrixXcd bad = MatrixXcd::Identity(2, 2);
  bad(0, 0) = 2.0;
  CHECK_THROWS_WITH_AS(scramblemetry::conjugate(bad, s),
                       doctest::Contains("not unitary"), std::invalid_argument);
}

TEST_CASE("tensor_spectrum matches decomposing the kronecker product") {
  oracles::Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const int n1 = 1 + static_cast<int>(rng.below(2));
    const int n2 = 1 + static_cast<int>(rng.below(2));
    const MatrixXcd a = rng.random_matrix(1 << n1);
    const MatrixXcd b = rng.random_matrix(1 << n2);
    const PauliSpectrum product = scramblemetry::tensor_spectrum(
        scramblemetry::decompose(a), scramblemetry::decompose(b));
    const PauliSpectrum direct =
        scramblemetry::decompose(oracles::kron(b, a));
    CHECK(product.n == n1 + n2);
    double worst = 0.0;
    for (std::size_t i = 0; i < direct.coeffs.size(); ++i) {
      worst = std::max(worst, std::abs(product.coeffs[i] - direct.coeffs[i]));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("transfer matrix represents conjugation and is orthogonal") {
  CHECK(matrix_distance(
            scramblemetry::transfer_matrix(MatrixXcd::Identity(4, 4))
                .cast<std::complex<double>>(),
            MatrixXcd::Identity(16, 16)) < 1e-12);

  oracles::Rng rng(89);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const Circuit c = scramblemetry::random_circuit(
        n, 12, CircuitClass::GENERAL, rng.next_u64());
    const MatrixXcd u = scramblemetry::build_unitary(c);
    const Eigen::MatrixXd r = scramblemetry::transfer_matrix(u);

    // Orthogonality.
    const Eigen::MatrixXd gram = r.transpose() * r;
    CHECK((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
              .cwiseAbs()
              .maxCoeff() < 1e-9);

    // Action on coefficients equals conjugation.
    const PauliSpectrum s = scramblemetry::decompose(rng.random_matrix(1 << n));
    const PauliSpectrum direct = scramblemetry::conjugate(u, s);
    Eigen::VectorXcd coeffs(s.coeffs.size());
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) coeffs[i] = s.coeffs[i];
    const Eigen::VectorXcd mapped = r.cast<std::complex<double>>() * coeffs;
    double worst = 0.0;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
      worst = std::max(worst, std::abs(mapped[i] - direct.coeffs[i]));
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("clifford transfer matrices are signed permutations") {
  oracles::Rng rng(97);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const Circuit c = scramblemetry::random_circuit(
        n, 15, CircuitClass::CLIFFORD, rng.next_u64());
    const Eigen::MatrixXd r =
        scramblemetry::transfer_matrix(scramblemetry::build_unitary(c));
    for (Eigen::Index col = 0; col < r.cols(); ++col) {
      int support = 0;
      for (Eigen::Index row = 0; row < r.rows(); ++row) {
        const double v = std::abs(r(row, col));
        if (v > 1e-9) {
          ++support;
          CHECK(std::abs(v - 1.0) < 1e-9);
        }
      }
      CHECK(support == 1);
    }
  }
}

TEST_CASE("t gate transfer matrix rotates the x-y block") {
  Circuit t(1);
  t.append(GateKind::T, 0);
  const Eigen::MatrixXd r =
      scramblemetry::transfer_matrix(scramblemetry::build_unitary(t));
  const double c = std::cos(3.14159265358979323846 / 4.0);
  CHECK(std::abs(r(0, 0) - 1.0) < 1e-12);  // identity on I
  CHECK(std::abs(r(2, 2) - 1.0) < 1e-12);  // identity on Z
  CHECK(std::abs(std::abs(r(1, 1)) - c) < 1e-12);
  CHECK(std::abs(std::abs(r(3, 1)) - c) < 1e-12);
  CHECK(std::abs(std::abs(r(1, 3)) - c) < 1e-12);
  CHECK(std::abs(std::abs(r(3, 3)) - c) < 1e-12);
}

TEST_CASE("transfer matrix enforces its size cap") {
  Circuit big(6);
  big.append(GateKind::H, 0);
  CHECK_THROWS_AS(
      scramblemetry::transfer_matrix(scramblemetry::build_unitary(big)),
      scramblemetry::limit_error);
  CHECK_NOTHROW(
      scramblemetry::transfer_matrix(scramblemetry::build_unitary(big), 6));
}

TEST_CASE("operator files round trip") {
  oracles::Rng rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const MatrixXcd op = rng.random_matrix(1 << n);
    const MatrixXcd back =
        scramblemetry::parse_operator(scramblemetry::format_operator(op));
    CHECK(matrix_distance(back, op) == 0.0);
  }
}

TEST_CASE("operator parser accepts plain and imaginary entries") {
  const MatrixXcd m = scramblemetry::parse_operator(
      "# a comment\n"
      "n 1\n"
      "0.5 -0.5j\n"
      "1+2j -3.25e-1-1j\n");
  CHECK(std::abs(m(0, 0) - std::complex<double>(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(m(0, 1) - std::complex<double>(0.0, -0.5)) < 1e-15);
  CHECK(std::abs(m(1, 0) - std::complex<double>(1.0, 2.0)) < 1e-15);
  CHECK(std::abs(m(1, 1) - std::complex<double>(-0.325, -1.0)) < 1e-15);
}

TEST_CASE("operator parser reports malformed input") {
  CHECK_THROWS_AS(scramblemetry::parse_operator("n 1\n0.5 0.5\n"),
                  scramblemetry::ParseError);  // missing second row
  CHECK_THROWS_AS(scramblemetry::parse_operator("0.5 0.5\n1 0\n"),
                  scramblemetry::ParseError);  // missing header
  CHECK_THROWS_AS(
      scramblemetry::parse_operator("n 1\n0.5 0.5 0.5\n0 1\n"),
      scramblemetry::ParseError);  // wrong entry count
  CHECK_THROWS_AS(scramblemetry::parse_operator("n 1\nx y\n0 1\n"),
                  scramblemetry::ParseError);  // unparseable entry
}

TEST_CASE("decompose enforces the qubit cap") {
  CHECK_THROWS_AS(scramblemetry::decompose(MatrixXcd::Identity(2048, 2048)),
                  scramblemetry::limit_error);
  CHECK_THROWS_AS(scramblemetry::decompose(MatrixXcd::Identity(3, 3)),
                  std::invalid_argument);  // not a power of two
}
