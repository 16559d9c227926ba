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

#include "scramblemetry/circuit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

namespace scramblemetry {

namespace {

struct GateInfo {
  GateKind kind;
  std::string_view name;
  int arity;
  bool has_angle;
  bool clifford;
};

constexpr std::array<GateInfo, 15> kGates = {{
    {GateKind::I, "I", 1, false, true},
    {GateKind::X, "X", 1, false, true},
    {GateKind::Y, "Y", 1, false, true},
    {GateKind::Z, "Z", 1, false, true},
    {GateKind::H, "H", 1, false, true},
    {GateKind::S, "S", 1, false, true},
    {GateKind::SDG, "SDG", 1, false, true},
    {GateKind::T, "T", 1, false, false},
    {GateKind::TDG, "TDG", 1, false, false},
    {GateKind::RX, "RX", 1, true, false},
    {GateKind::RY, "RY", 1, true, false},
    {GateKind::RZ, "RZ", 1, true, false},
    {GateKind::CX, "CX", 2, false, true},
    {GateKind::CZ, "CZ", 2, false, true},
    {GateKind::SWAP, "SWAP", 2, false, true},
}};

const GateInfo& info_of(GateKind kind) {
  return kGates[static_cast<std::size_t>(kind)];
}

std::string upper_copy(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

const GateInfo* find_gate(std::string_view name) {
  const std::string upper = upper_copy(name);
  for (const GateInfo& g : kGates) {
    if (g.name == upper) {
      return &g;
    }
  }
  return nullptr;
}

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
      continue;
    }
    if (line[pos] == '#') {
      break;
    }
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) &&
           line[end] != '#') {
      ++end;
    }
    tokens.push_back(Token{line.substr(pos, end - pos), static_cast<int>(pos) + 1});
    pos = end;
  }
  return tokens;
}

int parse_int_token(const Token& token, int line_no, std::string_view what) {
  int value = 0;
  const char* begin = token.text.data();
  const char* end = begin + token.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || value < 0) {
    std::ostringstream msg;
    msg << "expected " << what << ", got \"" << token.text << "\"";
    throw ParseError(msg.str(), line_no, token.column);
  }
  return value;
}

double parse_angle_token(const Token& token, int line_no) {
  double value = 0.0;
  const char* begin = token.text.data();
  const char* end = begin + token.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    std::ostringstream msg;
    msg << "expected an angle in radians, got \"" << token.text << "\"";
    throw ParseError(msg.str(), line_no, token.column);
  }
  return value;
}

void check_qubit_token(int value, int n, int line_no, int column) {
  if (value >= n) {
    std::ostringstream msg;
    msg << "qubit index " << value << " out of range (n=" << n << ")";
    throw ParseError(msg.str(), line_no, column);
  }
}

void check_target(int q, int n, std::string_view name) {
  if (q < 0 || q >= n) {
    std::ostringstream msg;
    msg << name << " target " << q << " out of range (n=" << n << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  return info_of(kind).name;
}

int gate_arity(GateKind kind) {
  return info_of(kind).arity;
}

bool gate_has_angle(GateKind kind) {
  return info_of(kind).has_angle;
}

bool gate_is_clifford(GateKind kind) {
  return info_of(kind).clifford;
}

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Circuit::Circuit(int n_qubits) : n(n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
}

Circuit& Circuit::append(GateKind kind, int q0) {
  if (gate_arity(kind) != 1 || gate_has_angle(kind)) {
    throw std::invalid_argument(std::string(gate_name(kind)) +
                                " does not take a single plain qubit operand");
  }
  check_target(q0, n, gate_name(kind));
  gates.push_back(Gate{kind, q0, -1, 0.0});
  return *this;
}

Circuit& Circuit::append(GateKind kind, int q0, int q1) {
  if (gate_arity(kind) != 2) {
    throw std::invalid_argument(std::string(gate_name(kind)) + " is not a two-qubit gate");
  }
  check_target(q0, n, gate_name(kind));
  check_target(q1, n, gate_name(kind));
  if (q0 == q1) {
    throw std::invalid_argument(std::string(gate_name(kind)) + " targets must be distinct");
  }
  gates.push_back(Gate{kind, q0, q1, 0.0});
  return *this;
}

Circuit& Circuit::append(GateKind kind, int q0, double angle) {
  if (!gate_has_angle(kind)) {
    throw std::invalid_argument(std::string(gate_name(kind)) + " does not take an angle");
  }
  check_target(q0, n, gate_name(kind));
  gates.push_back(Gate{kind, q0, -1, angle});
  return *this;
}

Circuit Circuit::shifted(int offset, int new_n) const {
  if (offset < 0 || n + offset > new_n) {
    throw std::invalid_argument("shifted circuit does not fit the new register");
  }
  Circuit out(new_n);
  out.gates.reserve(gates.size());
  for (Gate g : gates) {
    g.q0 += offset;
    if (g.q1 >= 0) {
      g.q1 += offset;
    }
    out.gates.push_back(g);
  }
  return out;
}

Circuit Circuit::then(const Circuit& other) const {
  if (n != other.n) {
    throw std::invalid_argument("cannot concatenate circuits of different sizes");
  }
  Circuit out = *this;
  out.gates.insert(out.gates.end(), other.gates.begin(), other.gates.end());
  return out;
}

CircuitClassification classify(const Circuit& circuit) {
  CircuitClassification result{true, true, false};
  for (const Gate& g : circuit.gates) {
    if (!gate_is_clifford(g.kind)) {
      result.clifford = false;
    }
    if (gate_arity(g.kind) == 2 && g.kind != GateKind::SWAP) {
      result.non_entangling = false;
    }
  }
  result.non_scrambling = result.clifford && result.non_entangling;
  return result;
}

Circuit parse_circuit(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }

  Circuit circuit;
  bool header_seen = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    const std::vector<Token> tokens = tokenize(lines[i]);
    if (tokens.empty()) {
      continue;
    }
    if (!header_seen) {
      if (upper_copy(tokens[0].text) != "QUBITS" || tokens.size() != 2) {
        throw ParseError("expected header \"qubits <n>\"", line_no, tokens[0].column);
      }
      const int n = parse_int_token(tokens[1], line_no, "a qubit count");
      if (n < 1) {
        throw ParseError("qubit count must be at least 1", line_no, tokens[1].column);
      }
      circuit = Circuit(n);
      header_seen = true;
      continue;
    }

    const GateInfo* info = find_gate(tokens[0].text);
    if (info == nullptr) {
      std::ostringstream msg;
      msg << "unknown gate \"" << tokens[0].text << "\"";
      throw ParseError(msg.str(), line_no, tokens[0].column);
    }
    const std::size_t expected = 1 + static_cast<std::size_t>(info->arity) +
                                 (info->has_angle ? 1 : 0);
    if (tokens.size() < expected) {
      std::ostringstream msg;
      msg << info->name << " needs " << info->arity << " qubit operand"
          << (info->arity == 2 ? "s" : "") << (info->has_angle ? " and an angle" : "");
      throw ParseError(msg.str(), line_no, tokens[0].column);
    }
    if (tokens.size() > expected) {
      std::ostringstream msg;
      msg << "unexpected extra operand \"" << tokens[expected].text << "\" for "
          << info->name;
      throw ParseError(msg.str(), line_no, tokens[expected].column);
    }

    const int q0 = parse_int_token(tokens[1], line_no, "a qubit index");
    check_qubit_token(q0, circuit.n, line_no, tokens[1].column);
    Gate gate{info->kind, q0, -1, 0.0};
    if (info->arity == 2) {
      const int q1 = parse_int_token(tokens[2], line_no, "a qubit index");
      check_qubit_token(q1, circuit.n, line_no, tokens[2].column);
      if (q1 == q0) {
        std::ostringstream msg;
        msg << info->name << " targets must be distinct";
        throw ParseError(msg.str(), line_no, tokens[2].column);
      }
      gate.q1 = q1;
    }
    if (info->has_angle) {
      gate.angle = parse_angle_token(tokens[1 + info->arity], line_no);
    }
    circuit.gates.push_back(gate);
  }
  if (!header_seen) {
    throw ParseError("missing header \"qubits <n>\"", static_cast<int>(lines.size()), 1);
  }
  return circuit;
}

Circuit read_circuit_file(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw std::runtime_error("cannot open circuit file: " + path);
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return parse_circuit(buffer.str());
}

std::string format_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.n << "\n";
  for (const Gate& g : circuit.gates) {
    std::string name(gate_name(g.kind));
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    out << name << " " << g.q0;
    if (g.q1 >= 0) {
      out << " " << g.q1;
    }
    if (gate_has_angle(g.kind)) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", g.angle);
      out << " " << buf;
    }
    out << "\n";
  }
  return out.str();
}

CircuitClass circuit_class_from_name(std::string_view name) {
  const std::string upper = upper_copy(name);
  if (upper == "NON_ENTANGLING") {
    return CircuitClass::NON_ENTANGLING;
  }
  if (upper == "CLIFFORD") {
    return CircuitClass::CLIFFORD;
  }
  if (upper == "NON_SCRAMBLING") {
    return CircuitClass::NON_SCRAMBLING;
  }
  if (upper == "GENERAL") {
    return CircuitClass::GENERAL;
  }
  throw std::invalid_argument("unknown circuit class: " + std::string(name));
}

std::string_view circuit_class_name(CircuitClass cls) {
  switch (cls) {
    case CircuitClass::NON_ENTANGLING:
      return "NON_ENTANGLING";
    case CircuitClass::CLIFFORD:
      return "CLIFFORD";
    case CircuitClass::NON_SCRAMBLING:
      return "NON_SCRAMBLING";
    case CircuitClass::GENERAL:
      return "GENERAL";
  }
  throw std::invalid_argument("unknown circuit class value");
}

Circuit random_circuit(int n_qubits, int depth, CircuitClass cls, std::uint64_t seed) {
  if (n_qubits < 1 || depth < 0) {
    throw std::invalid_argument("random circuit needs n >= 1 and depth >= 0");
  }
  std::vector<GateKind> alphabet;
  switch (cls) {
    case CircuitClass::NON_ENTANGLING:
      alphabet = {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::SWAP};
      break;
    case CircuitClass::CLIFFORD:
      alphabet = {GateKind::H, GateKind::S, GateKind::CX, GateKind::SWAP};
      break;
    case CircuitClass::NON_SCRAMBLING:
      alphabet = {GateKind::H, GateKind::S,    GateKind::X,
                  GateKind::Y, GateKind::Z,    GateKind::SWAP};
      break;
    case CircuitClass::GENERAL:
      alphabet = {GateKind::X,  GateKind::Y,  GateKind::Z,  GateKind::H,
                  GateKind::S,  GateKind::SDG, GateKind::T, GateKind::TDG,
                  GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::CX,
                  GateKind::CZ, GateKind::SWAP};
      break;
  }
  if (n_qubits == 1) {
    std::erase_if(alphabet, [](GateKind k) { return gate_arity(k) == 2; });
  }

  // All draws go through explicit modular / shift arithmetic on the raw
  // 64-bit stream so circuits are identical across standard libraries.
  std::mt19937_64 rng(seed);
  Circuit circuit(n_qubits);
  for (int step = 0; step < depth; ++step) {
    const GateKind kind = alphabet[rng() % alphabet.size()];
    const int q0 = static_cast<int>(rng() % static_cast<std::uint64_t>(n_qubits));
    if (gate_arity(kind) == 2) {
      int q1 = static_cast<int>(rng() % static_cast<std::uint64_t>(n_qubits - 1));
      if (q1 >= q0) {
        ++q1;
      }
      circuit.append(kind, q0, q1);
    } else if (gate_has_angle(kind)) {
      const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      circuit.append(kind, q0, 2.0 * std::numbers::pi * unit);
    } else {
      circuit.append(kind, q0);
    }
  }
  return circuit;
}

}  // namespace scramblemetry
