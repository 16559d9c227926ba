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

#include "scramblemetry/dense.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

namespace scramblemetry {

using namespace std::complex_literals;

namespace {

std::complex<double> omega8(int k) {
  // Exact values of e^{i pi k / 4} for the T-family diagonal.
  const double h = std::numbers::sqrt2 / 2.0;
  switch (((k % 8) + 8) % 8) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {h, h};
    case 2:
      return {0.0, 1.0};
    case 3:
      return {-h, h};
    case 4:
      return {-1.0, 0.0};
    case 5:
      return {-h, -h};
    case 6:
      return {0.0, -1.0};
    default:
      return {h, -h};
  }
}

void check_n_max(int n, int n_max, const char* what) {
  if (n > n_max) {
    std::ostringstream msg;
    msg << what << " needs " << n << " qubits, above the limit of " << n_max
        << "; raise n_max to allow it";
    throw limit_error(msg.str());
  }
}

std::complex<double> parse_complex_entry(std::string_view text, int line_no, int column) {
  const auto fail = [&]() -> std::complex<double> {
    std::ostringstream msg;
    msg << "malformed complex entry \"" << text << "\"";
    throw ParseError(msg.str(), line_no, column);
  };
  const bool has_j = !text.empty() && (text.back() == 'j' || text.back() == 'J');
  std::string_view body = has_j ? text.substr(0, text.size() - 1) : text;
  if (body.empty()) {
    return fail();
  }
  // Split at the last top-level sign, skipping a leading sign and exponents.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < body.size(); ++i) {
    if ((body[i] == '+' || body[i] == '-') &&
        body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
    }
  }
  const auto parse_double = [&](std::string_view part) {
    if (!part.empty() && part.front() == '+') {
      part.remove_prefix(1);  // from_chars accepts '-' but not '+'
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      fail();
    }
    return value;
  };
  if (!has_j) {
    if (split != std::string_view::npos) {
      return fail();
    }
    return {parse_double(body), 0.0};
  }
  if (split == std::string_view::npos) {
    return {0.0, parse_double(body)};  // pure imaginary, e.g. "0.5j"
  }
  return {parse_double(body.substr(0, split)), parse_double(body.substr(split))};
}

}  // namespace

MatrixXcd pauli_dense(const PauliString& p) {
  const Eigen::Index dim = Eigen::Index{1} << p.n;
  MatrixXcd m = MatrixXcd::Zero(dim, dim);
  const std::complex<double> base =
      SignedPauli{p, static_cast<std::uint8_t>(std::popcount(p.x_bits & p.z_bits) & 3)}
          .sign();
  for (Eigen::Index c = 0; c < dim; ++c) {
    const auto col = static_cast<std::uint64_t>(c);
    const double parity = (std::popcount(p.z_bits & col) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(col ^ p.x_bits), c) = base * parity;
  }
  return m;
}

MatrixXcd pauli_dense(const SignedPauli& p) {
  return p.sign() * pauli_dense(p.pauli);
}

MatrixXcd gate_matrix(const Gate& gate) {
  const double h = std::numbers::sqrt2 / 2.0;
  const double c = std::cos(gate.angle / 2.0);
  const double s = std::sin(gate.angle / 2.0);
  MatrixXcd m;
  switch (gate.kind) {
    case GateKind::I:
      m = MatrixXcd::Identity(2, 2);
      break;
    case GateKind::X:
      m = MatrixXcd{{0, 1}, {1, 0}};
      break;
    case GateKind::Y:
      m = MatrixXcd{{0, -1i}, {1i, 0}};
      break;
    case GateKind::Z:
      m = MatrixXcd{{1, 0}, {0, -1}};
      break;
    case GateKind::H:
      m = MatrixXcd{{h, h}, {h, -h}};
      break;
    case GateKind::S:
      m = MatrixXcd{{1, 0}, {0, 1i}};
      break;
    case GateKind::SDG:
      m = MatrixXcd{{1, 0}, {0, -1i}};
      break;
    case GateKind::T:
      m = MatrixXcd{{1, 0}, {0, omega8(1)}};
      break;
    case GateKind::TDG:
      m = MatrixXcd{{1, 0}, {0, omega8(-1)}};
      break;
    case GateKind::RX:
      m = MatrixXcd{{c, -1i * s}, {-1i * s, c}};
      break;
    case GateKind::RY:
      m = MatrixXcd{{c, -s}, {s, c}};
      break;
    case GateKind::RZ:
      m = MatrixXcd{{std::complex<double>(c, -s), 0}, {0, std::complex<double>(c, s)}};
      break;
    case GateKind::CX:
      // Local bit 0 is the control q0, bit 1 the target q1.
      m = MatrixXcd{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}};
      break;
    case GateKind::CZ:
      m = MatrixXcd::Identity(4, 4);
      m(3, 3) = -1.0;
      break;
    case GateKind::SWAP:
      m = MatrixXcd{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
      break;
  }
  return m;
}

MatrixXcd build_unitary(const Circuit& circuit, int n_max) {
  check_n_max(circuit.n, n_max, "the circuit unitary");
  const Eigen::Index dim = Eigen::Index{1} << circuit.n;
  MatrixXcd u = MatrixXcd::Identity(dim, dim);
  Eigen::RowVectorXcd t0(dim);
  Eigen::RowVectorXcd t1(dim);
  Eigen::RowVectorXcd t2(dim);
  for (const Gate& gate : circuit.gates) {
    const MatrixXcd g = gate_matrix(gate);
    if (gate_arity(gate.kind) == 1) {
      const std::uint64_t bit = std::uint64_t{1} << gate.q0;
      for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(dim); ++r) {
        if (r & bit) {
          continue;
        }
        const auto r0 = static_cast<Eigen::Index>(r);
        const auto r1 = static_cast<Eigen::Index>(r | bit);
        t0 = g(0, 0) * u.row(r0) + g(0, 1) * u.row(r1);
        u.row(r1) = g(1, 0) * u.row(r0) + g(1, 1) * u.row(r1);
        u.row(r0) = t0;
      }
    } else {
      const std::uint64_t b0 = std::uint64_t{1} << gate.q0;
      const std::uint64_t b1 = std::uint64_t{1} << gate.q1;
      for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(dim); ++r) {
        if (r & (b0 | b1)) {
          continue;
        }
        const Eigen::Index rows[4] = {
            static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r | b0),
            static_cast<Eigen::Index>(r | b1), static_cast<Eigen::Index>(r | b0 | b1)};
        t0 = g(0, 0) * u.row(rows[0]) + g(0, 1) * u.row(rows[1]) +
             g(0, 2) * u.row(rows[2]) + g(0, 3) * u.row(rows[3]);
        t1 = g(1, 0) * u.row(rows[0]) + g(1, 1) * u.row(rows[1]) +
             g(1, 2) * u.row(rows[2]) + g(1, 3) * u.row(rows[3]);
        t2 = g(2, 0) * u.row(rows[0]) + g(2, 1) * u.row(rows[1]) +
             g(2, 2) * u.row(rows[2]) + g(2, 3) * u.row(rows[3]);
        u.row(rows[3]) = g(3, 0) * u.row(rows[0]) + g(3, 1) * u.row(rows[1]) +
                         g(3, 2) * u.row(rows[2]) + g(3, 3) * u.row(rows[3]);
        u.row(rows[0]) = t0;
        u.row(rows[1]) = t1;
        u.row(rows[2]) = t2;
      }
    }
  }
  return u;
}

MatrixXcd tensor_unitary(const MatrixXcd& low, const MatrixXcd& high) {
  const Eigen::Index dl = low.rows();
  const Eigen::Index dh = high.rows();
  if (low.cols() != dl || high.cols() != dh) {
    throw std::invalid_argument("tensor_unitary needs square factors");
  }
  MatrixXcd out(dl * dh, dl * dh);
  for (Eigen::Index ih = 0; ih < dh; ++ih) {
    for (Eigen::Index jh = 0; jh < dh; ++jh) {
      out.block(ih * dl, jh * dl, dl, dl) = high(ih, jh) * low;
    }
  }
  return out;
}

int qubits_of(const MatrixXcd& m) {
  const Eigen::Index dim = m.rows();
  if (m.cols() != dim || dim < 1 || (dim & (dim - 1)) != 0) {
    std::ostringstream msg;
    msg << "operator shape " << m.rows() << "x" << m.cols()
        << " is not a square power-of-two matrix";
    throw std::invalid_argument(msg.str());
  }
  return std::countr_zero(static_cast<std::uint64_t>(dim));
}

int require_unitary(const MatrixXcd& u, double tol) {
  const int n = qubits_of(u);
  const MatrixXcd gram = u * u.adjoint();
  const double deviation =
      (gram - MatrixXcd::Identity(u.rows(), u.rows())).cwiseAbs().maxCoeff();
  if (!(deviation <= tol)) {
    std::ostringstream msg;
    msg << "operator is not unitary: |U U^dag - I| reaches " << deviation
        << " (tolerance " << tol << ")";
    throw std::invalid_argument(msg.str());
  }
  return n;
}

MatrixXcd pauli_times_unitary(const PauliString& p, const MatrixXcd& u) {
  if (qubits_of(u) != p.n) {
    throw std::invalid_argument("Pauli and operator qubit counts differ");
  }
  const std::complex<double> base =
      SignedPauli{p, static_cast<std::uint8_t>(std::popcount(p.x_bits & p.z_bits) & 3)}
          .sign();
  MatrixXcd out(u.rows(), u.cols());
  for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(u.rows()); ++r) {
    const std::uint64_t src = r ^ p.x_bits;
    const double parity = (std::popcount(p.z_bits & src) & 1) ? -1.0 : 1.0;
    out.row(static_cast<Eigen::Index>(r)) =
        (base * parity) * u.row(static_cast<Eigen::Index>(src));
  }
  return out;
}

MatrixXcd parse_operator(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;  // (line number, text)
  std::size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    ++line_no;
    std::size_t nl = text.find('\n', start);
    const std::string_view line =
        (nl == std::string_view::npos) ? text.substr(start) : text.substr(start, nl - start);
    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) {
      ++first;
    }
    if (first < line.size() && line[first] != '#') {
      lines.emplace_back(line_no, line);
    }
    if (nl == std::string_view::npos) {
      break;
    }
    start = nl + 1;
  }
  if (lines.empty()) {
    throw ParseError("expected header \"n <qubits>\"", line_no, 1);
  }

  // Header: "n <qubits>".
  {
    std::istringstream header{std::string(lines[0].second)};
    std::string tag;
    int n = -1;
    header >> tag >> n;
    std::string rest;
    if (tag != "n" || n < 1 || (header >> rest)) {
      throw ParseError("expected header \"n <qubits>\"", lines[0].first, 1);
    }
    const auto dim = static_cast<std::size_t>(1) << n;
    if (lines.size() - 1 != dim) {
      std::ostringstream msg;
      msg << "expected " << dim << " matrix rows, found " << (lines.size() - 1);
      throw ParseError(msg.str(), lines.back().first, 1);
    }
    MatrixXcd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t row = 0; row < dim; ++row) {
      const auto [row_line, row_text] = lines[row + 1];
      std::size_t pos = 0;
      std::size_t col = 0;
      while (pos < row_text.size()) {
        if (std::isspace(static_cast<unsigned char>(row_text[pos]))) {
          ++pos;
          continue;
        }
        std::size_t end = pos;
        while (end < row_text.size() &&
               !std::isspace(static_cast<unsigned char>(row_text[end]))) {
          ++end;
        }
        if (col >= dim) {
          std::ostringstream msg;
          msg << "row has more than " << dim << " entries";
          throw ParseError(msg.str(), row_line, static_cast<int>(pos) + 1);
        }
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
            parse_complex_entry(row_text.substr(pos, end - pos), row_line,
                                static_cast<int>(pos) + 1);
        ++col;
        pos = end;
      }
      if (col != dim) {
        std::ostringstream msg;
        msg << "row has " << col << " entries, expected " << dim;
        throw ParseError(msg.str(), row_line, 1);
      }
    }
    return m;
  }
}

MatrixXcd read_operator_file(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw std::runtime_error("cannot open operator file: " + path);
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return parse_operator(buffer.str());
}

std::string format_operator(const MatrixXcd& m) {
  const int n = qubits_of(m);
  std::ostringstream out;
  out << "n " << n << "\n";
  char buf[96];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g%+.17gj", m(r, c).real(), m(r, c).imag());
      out << (c ? " " : "") << buf;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace scramblemetry
