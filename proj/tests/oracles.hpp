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

#ifndef SCRAMBLEMETRY_TESTS_ORACLES_HPP_
#define SCRAMBLEMETRY_TESTS_ORACLES_HPP_

// Independent reference implementations used to cross-check the library's
// fast paths.  Everything in this header is deliberately naive — Kronecker
// products built factor by factor, the textbook trace formula evaluated one
// Pauli at a time, gates embedded entry by entry — and shares no code with
// the optimized kernels under src/.  When a test compares the two, agreement
// is evidence, not tautology.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "scramblemetry/circuit.hpp"
#include "scramblemetry/dense.hpp"
#include "scramblemetry/pauli.hpp"

namespace oracles {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Kronecker product with `high` on the slow (most significant) index.
inline Matrix kron(const Matrix& high, const Matrix& low) {
  Matrix out(high.rows() * low.rows(), high.cols() * low.cols());
  for (Eigen::Index r = 0; r < high.rows(); ++r) {
    for (Eigen::Index c = 0; c < high.cols(); ++c) {
      out.block(r * low.rows(), c * low.cols(), low.rows(), low.cols()) =
          high(r, c) * low;
    }
  }
  return out;
}

inline Matrix single_qubit_letter(bool x, bool z) {
  Matrix m(2, 2);
  const Complex i(0.0, 1.0);
  if (!x && !z) {
    m << 1, 0, 0, 1;  // I
  } else if (x && !z) {
    m << 0, 1, 1, 0;  // X
  } else if (!x && z) {
    m << 1, 0, 0, -1;  // Z
  } else {
    m << 0, -i, i, 0;  // Y
  }
  return m;
}

// Dense Pauli string built as an explicit Kronecker product, qubit 0 on the
// least significant axis.
inline Matrix pauli_kron(const scramblemetry::PauliString& p) {
  Matrix out = Matrix::Identity(1, 1);
  for (int q = 0; q < p.n; ++q) {
    const bool x = (p.x_bits >> q) & 1u;
    const bool z = (p.z_bits >> q) & 1u;
    out = kron(single_qubit_letter(x, z), out);
  }
  return out;
}

// Textbook trace-formula coefficient: Tr[P^dag O] / 2^n.
inline Complex trace_coefficient(const Matrix& op,
                                 const scramblemetry::PauliString& p) {
  const Matrix pd = pauli_kron(p);
  Complex trace = 0.0;
  for (Eigen::Index r = 0; r < op.rows(); ++r) {
    for (Eigen::Index k = 0; k < op.rows(); ++k) {
      trace += std::conj(pd(k, r)) * op(k, r);
    }
  }
  return trace / static_cast<double>(op.rows());
}

// All 4^n trace-formula coefficients in (z << n) | x order.
inline std::vector<Complex> trace_spectrum(const Matrix& op, int n) {
  std::vector<Complex> coeffs;
  coeffs.reserve(std::size_t{1} << (2 * n));
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      coeffs.push_back(trace_coefficient(op, scramblemetry::PauliString(n, x, z)));
    }
  }
  return coeffs;
}

// Embeds a gate's local matrix into the full register entry by entry: for
// each column, the rows that can be non-zero differ from it only on the
// target bits.  Construction is independent of the in-place butterflies in
// the library's unitary builder.
inline Matrix embed_gate(const scramblemetry::Gate& gate, int n) {
  const Matrix local = scramblemetry::gate_matrix(gate);
  const std::uint64_t dim = std::uint64_t{1} << n;
  Matrix out = Matrix::Zero(dim, dim);
  const int arity = scramblemetry::gate_arity(gate.kind);
  for (std::uint64_t col = 0; col < dim; ++col) {
    std::uint64_t local_col = (col >> gate.q0) & 1u;
    if (arity == 2) local_col |= ((col >> gate.q1) & 1u) << 1;
    for (std::uint64_t local_row = 0; local_row < (std::uint64_t{1} << arity);
         ++local_row) {
      std::uint64_t row = col;
      row &= ~(std::uint64_t{1} << gate.q0);
      row |= (local_row & 1u) << gate.q0;
      if (arity == 2) {
        row &= ~(std::uint64_t{1} << gate.q1);
        row |= ((local_row >> 1) & 1u) << gate.q1;
      }
      out(row, col) = local(local_row, local_col);
    }
  }
  return out;
}

// Product of embedded gate matrices, first gate applied first.
inline Matrix circuit_unitary(const scramblemetry::Circuit& circuit) {
  const std::uint64_t dim = std::uint64_t{1} << circuit.n;
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& gate : circuit.gates) {
    u = embed_gate(gate, circuit.n) * u;
  }
  return u;
}

// Deterministic random source for test inputs.  Draws are spelled out with
// explicit integer arithmetic so sequences do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double gaussian() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  Complex complex_gaussian() { return Complex(gaussian(), gaussian()); }

  Matrix random_matrix(int dim) {
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        m(r, c) = complex_gaussian();
      }
    }
    return m;
  }

  scramblemetry::PauliString random_pauli(int n) {
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    return scramblemetry::PauliString(n, next_u64() & mask, next_u64() & mask);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oracles

#endif  // SCRAMBLEMETRY_TESTS_ORACLES_HPP_
