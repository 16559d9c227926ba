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

#include "scramblemetry/spectrum.hpp"

#include "scramblemetry/parallel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace scramblemetry {

namespace {

void check_limit(int n, int n_max, const char* what) {
  if (n > n_max) {
    std::ostringstream msg;
    msg << what << " at " << n << " qubits exceeds the limit of " << n_max;
    throw limit_error(msg.str());
  }
}

void check_same_n(int a, int b) {
  if (a != b) {
    std::ostringstream msg;
    msg << "qubit counts differ: " << a << " vs " << b;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

PauliSpectrum::PauliSpectrum(int n_qubits) : n(n_qubits) {
  if (n_qubits < 1 || n_qubits > 15) {
    throw std::invalid_argument("spectrum qubit count outside [1, 15]");
  }
  coeffs.assign(std::size_t{1} << (2 * n_qubits), {0.0, 0.0});
}

double PauliSpectrum::norm_squared() const {
  double total = 0.0;
  for (const auto& c : coeffs) {
    total += std::norm(c);
  }
  return total;
}

std::vector<double> PauliSpectrum::probabilities() const {
  std::vector<double> q(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    q[i] = std::norm(coeffs[i]);
  }
  return q;
}

PauliSpectrum decompose(const MatrixXcd& op, int n_max) {
  const int n = qubits_of(op);
  check_limit(n, n_max, "decomposition");
  PauliSpectrum spectrum(n);
  auto& buf = spectrum.coeffs;

  // Flat row-major staging: index bits [n, 2n) hold the row, [0, n) the
  // column, which is exactly the (z | x) Pauli index layout after the
  // butterflies below run once per qubit.
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t r = 0; r < dim; ++r) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      buf[(r << n) | c] = op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }

  // Per qubit, the 2x2 sub-block (a b; c d) over (row bit, column bit) maps
  // to (I, X, Z, Y) coefficients; the Y entry carries the canonical i.
  const std::complex<double> half_i(0.0, 0.5);
  for (int j = 0; j < n; ++j) {
    const std::uint64_t col_bit = std::uint64_t{1} << j;
    const std::uint64_t row_bit = std::uint64_t{1} << (n + j);
    const std::uint64_t both = col_bit | row_bit;
    for (std::uint64_t idx = 0; idx < buf.size(); ++idx) {
      if (idx & both) {
        continue;
      }
      const std::complex<double> a = buf[idx];
      const std::complex<double> b = buf[idx | col_bit];
      const std::complex<double> c = buf[idx | row_bit];
      const std::complex<double> d = buf[idx | both];
      buf[idx] = 0.5 * (a + d);
      buf[idx | col_bit] = 0.5 * (b + c);
      buf[idx | row_bit] = 0.5 * (a - d);
      buf[idx | both] = half_i * (b - c);
    }
  }
  spectrum.normalized = std::abs(spectrum.norm_squared() - 1.0) <= kNormalizedTol;
  return spectrum;
}

MatrixXcd reconstruct(const PauliSpectrum& spectrum, int n_max) {
  const int n = spectrum.n;
  check_limit(n, n_max, "reconstruction");
  if (spectrum.coeffs.size() != (std::size_t{1} << (2 * n))) {
    throw std::invalid_argument("spectrum coefficient count does not match n");
  }
  auto buf = spectrum.coeffs;
  const std::complex<double> i_unit(0.0, 1.0);
  for (int j = 0; j < n; ++j) {
    const std::uint64_t col_bit = std::uint64_t{1} << j;
    const std::uint64_t row_bit = std::uint64_t{1} << (n + j);
    const std::uint64_t both = col_bit | row_bit;
    for (std::uint64_t idx = 0; idx < buf.size(); ++idx) {
      if (idx & both) {
        continue;
      }
      const std::complex<double> ci = buf[idx];
      const std::complex<double> cx = buf[idx | col_bit];
      const std::complex<double> cz = buf[idx | row_bit];
      const std::complex<double> cy = buf[idx | both];
      buf[idx] = ci + cz;
      buf[idx | col_bit] = cx - i_unit * cy;
      buf[idx | row_bit] = cx + i_unit * cy;
      buf[idx | both] = ci - cz;
    }
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  MatrixXcd op(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t r = 0; r < dim; ++r) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = buf[(r << n) | c];
    }
  }
  return op;
}

PauliSpectrum normalize(const PauliSpectrum& spectrum) {
  const double norm2 = spectrum.norm_squared();
  if (norm2 <= 0.0) {
    throw std::invalid_argument("cannot normalize zero operator");
  }
  PauliSpectrum out = spectrum;
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : out.coeffs) {
    c *= scale;
  }
  out.normalized = true;
  return out;
}

PauliSpectrum conjugate(const MatrixXcd& u, const PauliSpectrum& spectrum) {
  const int n = require_unitary(u, kUnitarityTol);
  check_same_n(n, spectrum.n);
  const MatrixXcd op = reconstruct(spectrum, spectrum.n);
  return decompose(u.adjoint() * op * u, spectrum.n);
}

PauliSpectrum conjugate(const CliffordTableau& tableau, const PauliSpectrum& spectrum) {
  check_same_n(tableau.n_qubits(), spectrum.n);
  PauliSpectrum out(spectrum.n);
  out.normalized = spectrum.normalized;
  for (std::uint64_t idx = 0; idx < spectrum.coeffs.size(); ++idx) {
    if (spectrum.coeffs[idx] == std::complex<double>{0.0, 0.0}) {
      continue;
    }
    const SignedPauli image = tableau.conjugate(PauliString::from_index(spectrum.n, idx));
    const double sign = (image.phase_exp & 2) ? -1.0 : 1.0;
    out.coeffs[image.pauli.index()] = sign * spectrum.coeffs[idx];
  }
  return out;
}

PauliSpectrum tensor_spectrum(const PauliSpectrum& low, const PauliSpectrum& high) {
  const int n1 = low.n;
  const int n2 = high.n;
  PauliSpectrum out(n1 + n2);
  const std::uint64_t mask1 = (std::uint64_t{1} << n1) - 1;
  const std::uint64_t mask2 = (std::uint64_t{1} << n2) - 1;
  for (std::uint64_t i2 = 0; i2 < high.coeffs.size(); ++i2) {
    const std::uint64_t x2 = i2 & mask2;
    const std::uint64_t z2 = i2 >> n2;
    for (std::uint64_t i1 = 0; i1 < low.coeffs.size(); ++i1) {
      const std::uint64_t x1 = i1 & mask1;
      const std::uint64_t z1 = i1 >> n1;
      const std::uint64_t x = x1 | (x2 << n1);
      const std::uint64_t z = z1 | (z2 << n1);
      out.coeffs[(z << (n1 + n2)) | x] = low.coeffs[i1] * high.coeffs[i2];
    }
  }
  out.normalized = std::abs(out.norm_squared() - 1.0) <= kNormalizedTol;
  return out;
}

Eigen::MatrixXd transfer_matrix(const MatrixXcd& u, int ptm_n_max) {
  const int n = require_unitary(u, kUnitarityTol);
  check_limit(n, ptm_n_max, "the transfer matrix");
  const auto size = static_cast<Eigen::Index>(std::uint64_t{1} << (2 * n));
  Eigen::MatrixXd transfer(size, size);
  const MatrixXcd u_adj = u.adjoint();
  // Column j is the spectrum of U^dag P_j U; columns are written by
  // disjoint workers, so the result is thread-count independent.
  parallel_for_ranges(size, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t j = begin; j < end; ++j) {
      const PauliString p = PauliString::from_index(n, static_cast<std::uint64_t>(j));
      const MatrixXcd conjugated = u_adj * pauli_times_unitary(p, u);
      const PauliSpectrum spectrum = decompose(conjugated, n);
      for (Eigen::Index i = 0; i < size; ++i) {
        transfer(i, static_cast<Eigen::Index>(j)) =
            spectrum.coeffs[static_cast<std::size_t>(i)].real();
      }
    }
  });
  return transfer;
}

}  // namespace scramblemetry
