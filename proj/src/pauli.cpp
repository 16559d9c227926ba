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

#include "scramblemetry/pauli.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace scramblemetry {

namespace {

// 2n bits of index must fit a 64-bit word with room for the shift.
constexpr int kMaxQubits = 31;

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    std::ostringstream msg;
    msg << "qubit count " << n << " outside [1, " << kMaxQubits << "]";
    throw std::invalid_argument(msg.str());
  }
}

std::uint64_t mask_of(int n) {
  return (std::uint64_t{1} << n) - 1;
}

void check_same_size(const PauliString& p, const PauliString& q) {
  if (p.n != q.n) {
    std::ostringstream msg;
    msg << "Pauli size mismatch: " << p.n << " vs " << q.n << " qubits";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

PauliString::PauliString(int n_qubits, std::uint64_t x, std::uint64_t z)
    : n(n_qubits), x_bits(x), z_bits(z) {
  check_qubit_count(n_qubits);
  if ((x | z) & ~mask_of(n_qubits)) {
    throw std::invalid_argument("Pauli bit mask uses bits above the qubit count");
  }
}

PauliString PauliString::from_index(int n_qubits, std::uint64_t index) {
  check_qubit_count(n_qubits);
  const std::uint64_t mask = mask_of(n_qubits);
  if (index >> (2 * n_qubits)) {
    throw std::invalid_argument("Pauli index out of range for the qubit count");
  }
  return PauliString(n_qubits, index & mask, index >> n_qubits);
}

std::string PauliString::letters() const {
  static constexpr char kLetter[4] = {'I', 'X', 'Z', 'Y'};  // indexed by 2z + x
  std::string out(static_cast<std::size_t>(n), 'I');
  for (int j = 0; j < n; ++j) {
    const int code = static_cast<int>(((z_bits >> j) & 1) * 2 + ((x_bits >> j) & 1));
    out[static_cast<std::size_t>(j)] = kLetter[code];
  }
  return out;
}

int weight(const PauliString& p) {
  return std::popcount(p.x_bits | p.z_bits);
}

std::complex<double> SignedPauli::sign() const {
  switch (phase_exp & 3) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

SignedPauli multiply(const PauliString& p, const PauliString& q) {
  check_same_size(p, q);
  const std::uint64_t x = p.x_bits ^ q.x_bits;
  const std::uint64_t z = p.z_bits ^ q.z_bits;
  // Track powers of i: each canonical factor i^{|x&z|} plus the i^{2|z1&x2|}
  // from commuting q's X part through p's Z part, minus the canonical phase
  // of the result.
  const int k = std::popcount(p.x_bits & p.z_bits) + std::popcount(q.x_bits & q.z_bits) +
                2 * std::popcount(p.z_bits & q.x_bits) - std::popcount(x & z);
  return SignedPauli{PauliString(p.n, x, z), static_cast<std::uint8_t>(((k % 4) + 4) % 4)};
}

SignedPauli multiply(const SignedPauli& p, const SignedPauli& q) {
  SignedPauli out = multiply(p.pauli, q.pauli);
  out.phase_exp = static_cast<std::uint8_t>((out.phase_exp + p.phase_exp + q.phase_exp) & 3);
  return out;
}

bool commutes(const PauliString& p, const PauliString& q) {
  check_same_size(p, q);
  const int parity =
      (std::popcount(p.x_bits & q.z_bits) + std::popcount(q.x_bits & p.z_bits)) & 1;
  return parity == 0;
}

PauliString pauli_from_letters(std::string_view letters) {
  check_qubit_count(static_cast<int>(letters.size()));
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t j = 0; j < letters.size(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    switch (std::toupper(static_cast<unsigned char>(letters[j]))) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default: {
        std::ostringstream msg;
        msg << "invalid Pauli letter '" << letters[j] << "' at position " << j;
        throw std::invalid_argument(msg.str());
      }
    }
  }
  return PauliString(static_cast<int>(letters.size()), x, z);
}

PauliString pauli_from_sites(std::string_view label, int n_qubits) {
  check_qubit_count(n_qubits);
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  std::size_t pos = 0;
  // Bare "I" (any case) denotes the identity on the full register.
  if (label.size() == 1 && std::toupper(static_cast<unsigned char>(label[0])) == 'I') {
    return PauliString(n_qubits, 0, 0);
  }
  while (pos < label.size()) {
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(label[pos])));
    if (letter != 'X' && letter != 'Y' && letter != 'Z') {
      std::ostringstream msg;
      msg << "invalid Pauli site letter '" << label[pos] << "' in \"" << label << "\"";
      throw std::invalid_argument(msg.str());
    }
    ++pos;
    if (pos >= label.size() || !std::isdigit(static_cast<unsigned char>(label[pos]))) {
      std::ostringstream msg;
      msg << "missing qubit index after '" << letter << "' in \"" << label << "\"";
      throw std::invalid_argument(msg.str());
    }
    int qubit = 0;
    while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) {
      qubit = qubit * 10 + (label[pos] - '0');
      ++pos;
    }
    if (qubit >= n_qubits) {
      std::ostringstream msg;
      msg << "qubit index " << qubit << " out of range (n=" << n_qubits << ")";
      throw std::invalid_argument(msg.str());
    }
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    if ((x | z) & bit) {
      std::ostringstream msg;
      msg << "qubit " << qubit << " appears twice in \"" << label << "\"";
      throw std::invalid_argument(msg.str());
    }
    if (letter != 'Z') {
      x |= bit;
    }
    if (letter != 'X') {
      z |= bit;
    }
  }
  return PauliString(n_qubits, x, z);
}

std::string pauli_site_label(const PauliString& p) {
  if (p.is_identity()) {
    return "I";
  }
  static constexpr const char* kNames[4] = {"", "X", "Z", "Y"};
  std::ostringstream out;
  for (int j = 0; j < p.n; ++j) {
    const int code = static_cast<int>(((p.z_bits >> j) & 1) * 2 + ((p.x_bits >> j) & 1));
    if (code != 0) {
      out << kNames[code] << j;
    }
  }
  return out.str();
}

}  // namespace scramblemetry
