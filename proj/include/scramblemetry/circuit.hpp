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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scramblemetry {

enum class GateKind {
  I,
  X,
  Y,
  Z,
  H,
  S,
  SDG,
  T,
  TDG,
  RX,
  RY,
  RZ,
  CX,
  CZ,
  SWAP,
};

/// Canonical gate name, e.g. "H" or "SDG"; circuit files are case-insensitive.
std::string_view gate_name(GateKind kind);

/// Number of qubit operands (1 or 2).
int gate_arity(GateKind kind);

/// True for RX / RY / RZ, which take one angle parameter.
bool gate_has_angle(GateKind kind);

/// True if conjugation by the gate maps Paulis to signed Paulis.
bool gate_is_clifford(GateKind kind);

struct Gate {
  GateKind kind = GateKind::I;
  int q0 = 0;
  int q1 = -1;         // second operand for two-qubit gates, else -1
  double angle = 0.0;  // rotation angle for RX / RY / RZ, else unused

  bool operator==(const Gate& other) const = default;
};

/// Raised when circuit text cannot be parsed; carries a 1-based location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// An ordered gate list on a fixed register. Gates apply left to right: the
/// first gate in the list acts first, so the whole unitary is G_k ... G_2 G_1.
struct Circuit {
  int n = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n_qubits);

  Circuit& append(GateKind kind, int q0);
  Circuit& append(GateKind kind, int q0, int q1);
  Circuit& append(GateKind kind, int q0, double angle);

  /// The same gates with every operand shifted up by `offset` on a register
  /// of `new_n` qubits; used to embed circuits into tensor products.
  Circuit shifted(int offset, int new_n) const;

  /// Concatenation: `other` runs after this circuit.
  Circuit then(const Circuit& other) const;

  bool operator==(const Circuit& other) const = default;
};

/// The free-unitary classes a circuit can be recognized as belonging to.
struct CircuitClassification {
  bool clifford = false;        // every gate normalizes the Pauli group
  bool non_entangling = false;  // only single-qubit gates and SWAP
  bool non_scrambling = false;  // both of the above

  bool operator==(const CircuitClassification& other) const = default;
};

/// Gate-level sufficient classification. This never tries to recognize that
/// a sequence of non-free gates happens to multiply to a free unitary.
CircuitClassification classify(const Circuit& circuit);

/// Parses the plain-text format: a header line "qubits N" followed by one
/// gate per line, e.g. "h 0", "cx 0 1", "rz 2 0.25". '#' starts a comment,
/// blank lines are ignored, gate names are case-insensitive.
Circuit parse_circuit(std::string_view text);

/// Reads and parses a circuit file; throws std::runtime_error on I/O failure.
Circuit read_circuit_file(const std::string& path);

/// Canonical printer: one lowercase gate per line, angles at 17 significant
/// digits; parse_circuit(format_circuit(c)) == c.
std::string format_circuit(const Circuit& circuit);

/// Gate alphabets for random circuits; the first three are the free classes.
enum class CircuitClass {
  NON_ENTANGLING,  // RX / RY / RZ / SWAP
  CLIFFORD,        // H / S / CX / SWAP
  NON_SCRAMBLING,  // H / S / X / Y / Z / SWAP
  GENERAL,         // the full gate alphabet
};

CircuitClass circuit_class_from_name(std::string_view name);
std::string_view circuit_class_name(CircuitClass cls);

/// Deterministic random circuit of `depth` gates drawn from the class
/// alphabet (mt19937_64 stream). Two-qubit gates are skipped when n == 1.
Circuit random_circuit(int n_qubits, int depth, CircuitClass cls, std::uint64_t seed);

}  // namespace scramblemetry
