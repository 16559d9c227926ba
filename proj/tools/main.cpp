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

// Command-line front end. Every command prints one JSON envelope with sorted
// keys and 17-significant-digit floats, so identical inputs (and seeds)
// produce byte-identical output; `--csv` switches the tabular payloads to
// plain CSV. Exit codes: 0 success, 1 usage or parse error, 2 size/limit
// error, 3 verification failure.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "scramblemetry/circuit.hpp"
#include "scramblemetry/common.hpp"
#include "scramblemetry/dense.hpp"
#include "scramblemetry/growth.hpp"
#include "scramblemetry/measures.hpp"
#include "scramblemetry/pauli.hpp"
#include "scramblemetry/selftest.hpp"
#include "scramblemetry/spectrum.hpp"
#include "scramblemetry/version.hpp"

namespace sm = scramblemetry;
using nlohmann::json;

namespace {

// --- deterministic serialization ----------------------------------------

std::string format_double(double value) {
  if (!std::isfinite(value)) {
    return "null";  // JSON has no infinities; nothing here should emit one
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

// nlohmann's writer prints shortest-round-trip floats; the envelope contract
// wants a fixed 17-significant-digit format instead, so the tree is walked
// here. Object keys come out sorted because json uses an ordered map.
void dump_json(const json& node, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string pad_inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (node.type()) {
    case json::value_t::object: {
      if (node.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, value] : node.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad_inner << json(key).dump() << ": ";
        dump_json(value, out, indent + 1);
      }
      out << "\n" << pad << "}";
      return;
    }
    case json::value_t::array: {
      if (node.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      bool first = true;
      for (const auto& value : node) {
        if (!first) out << ",\n";
        first = false;
        out << pad_inner;
        dump_json(value, out, indent + 1);
      }
      out << "\n" << pad << "]";
      return;
    }
    case json::value_t::string:
      out << node.dump();
      return;
    case json::value_t::boolean:
      out << (node.get<bool>() ? "true" : "false");
      return;
    case json::value_t::number_integer:
      out << node.get<std::int64_t>();
      return;
    case json::value_t::number_unsigned:
      out << node.get<std::uint64_t>();
      return;
    case json::value_t::number_float:
      out << format_double(node.get<double>());
      return;
    default:
      out << "null";
      return;
  }
}

void print_envelope(const std::string& command, json inputs, json results,
                    const std::uint64_t* seed = nullptr) {
  json envelope;
  envelope["command"] = command;
  envelope["inputs"] = std::move(inputs);
  envelope["results"] = std::move(results);
  envelope["tool_version"] = sm::kVersion;
  if (seed != nullptr) {
    envelope["seed"] = *seed;
  }
  dump_json(envelope, std::cout, 0);
  std::cout << "\n";
}

std::string csv_cell(double value) { return format_double(value); }

// --- shared input plumbing ----------------------------------------------

struct SourceOptions {
  std::string circuit_path;
  std::string unitary_path;
  int n_max = sm::kDefaultNMax;
};

void add_source_options(CLI::App* cmd, SourceOptions& opts,
                        bool unitary_allowed) {
  auto* circuit = cmd->add_option("--circuit", opts.circuit_path,
                                  "Circuit file to analyze");
  if (unitary_allowed) {
    auto* unitary = cmd->add_option(
        "--unitary", opts.unitary_path,
        "Dense operator file with the unitary to analyze");
    circuit->excludes(unitary);
    unitary->excludes(circuit);
  }
  cmd->add_option("--n-max", opts.n_max,
                  "Largest register size to materialize densely")
      ->capture_default_str();
}

sm::MatrixXcd load_unitary(const SourceOptions& opts) {
  if (!opts.circuit_path.empty()) {
    const sm::Circuit circuit = sm::read_circuit_file(opts.circuit_path);
    return sm::build_unitary(circuit, opts.n_max);
  }
  if (!opts.unitary_path.empty()) {
    const sm::MatrixXcd u = sm::read_operator_file(opts.unitary_path);
    if (sm::qubits_of(u) > opts.n_max) {
      std::ostringstream msg;
      msg << "operator acts on " << sm::qubits_of(u)
          << " qubits, above the n_max limit " << opts.n_max;
      throw sm::limit_error(msg.str());
    }
    sm::require_unitary(u);
    return u;
  }
  throw CLI::ValidationError("exactly one of --circuit/--unitary is required");
}

json source_inputs(const SourceOptions& opts) {
  json inputs;
  if (!opts.circuit_path.empty()) {
    inputs["circuit"] = opts.circuit_path;
  } else {
    inputs["unitary"] = opts.unitary_path;
  }
  inputs["n_max"] = opts.n_max;
  return inputs;
}

json measure_triple(const sm::MeasureReport& m) {
  json out;
  out["average_weight"] = m.average_weight;
  out["entropy"] = m.entropy;
  out["complexity"] = m.complexity;
  return out;
}

// --- measure -------------------------------------------------------------

struct MeasureOptions {
  SourceOptions source;
  std::vector<std::string> labels;
  std::string obs_file;
  double a = sm::kDefaultBase;
  bool csv = false;
};

int run_measure(const MeasureOptions& opts) {
  sm::require_base(opts.a);
  const sm::MatrixXcd u = load_unitary(opts.source);
  const int n = sm::qubits_of(u);

  struct Observable {
    std::string label;
    sm::PauliSpectrum spectrum;
  };
  std::vector<Observable> observables;
  if (!opts.obs_file.empty()) {
    const sm::MatrixXcd op = sm::read_operator_file(opts.obs_file);
    if (sm::qubits_of(op) != n) {
      std::ostringstream msg;
      msg << "observable acts on " << sm::qubits_of(op)
          << " qubits but the unitary acts on " << n;
      throw std::invalid_argument(msg.str());
    }
    observables.push_back(
        {opts.obs_file, sm::normalize(sm::decompose(op, opts.source.n_max))});
  } else if (!opts.labels.empty()) {
    for (const auto& label : opts.labels) {
      sm::PauliSpectrum s(n);
      s.at(sm::pauli_from_sites(label, n)) = 1.0;
      s.normalized = true;
      observables.push_back({label, std::move(s)});
    }
  } else {
    // Default: sweep every weight-1 Pauli.
    for (int q = 0; q < n; ++q) {
      for (const char letter : {'X', 'Y', 'Z'}) {
        const std::string label = std::string(1, letter) + std::to_string(q);
        sm::PauliSpectrum s(n);
        s.at(sm::pauli_from_sites(label, n)) = 1.0;
        s.normalized = true;
        observables.push_back({label, std::move(s)});
      }
    }
  }

  json rows = json::array();
  std::ostringstream csv;
  csv << "observable,average_weight_before,entropy_before,complexity_before,"
         "average_weight_after,entropy_after,complexity_after,"
         "delta_average_weight,delta_entropy,delta_complexity\n";
  for (const auto& obs : observables) {
    const sm::MeasureReport before = sm::complexity(obs.spectrum, opts.a);
    const sm::MeasureReport after =
        sm::complexity(sm::conjugate(u, obs.spectrum), opts.a);
    json row;
    row["observable"] = obs.label;
    row["before"] = measure_triple(before);
    row["after"] = measure_triple(after);
    json delta;
    delta["average_weight"] = after.average_weight - before.average_weight;
    delta["entropy"] = after.entropy - before.entropy;
    delta["complexity"] = after.complexity - before.complexity;
    row["delta"] = std::move(delta);
    rows.push_back(std::move(row));
    csv << obs.label << "," << csv_cell(before.average_weight) << ","
        << csv_cell(before.entropy) << "," << csv_cell(before.complexity) << ","
        << csv_cell(after.average_weight) << "," << csv_cell(after.entropy)
        << "," << csv_cell(after.complexity) << ","
        << csv_cell(after.average_weight - before.average_weight) << ","
        << csv_cell(after.entropy - before.entropy) << ","
        << csv_cell(after.complexity - before.complexity) << "\n";
  }

  if (opts.csv) {
    std::cout << csv.str();
    return 0;
  }
  json inputs = source_inputs(opts.source);
  inputs["a"] = opts.a;
  if (!opts.obs_file.empty()) {
    inputs["observable_file"] = opts.obs_file;
  } else if (!opts.labels.empty()) {
    inputs["observables"] = opts.labels;
  } else {
    inputs["observables"] = "weight-1 sweep";
  }
  json results;
  results["n"] = n;
  results["rows"] = std::move(rows);
  print_envelope("measure", std::move(inputs), std::move(results));
  return 0;
}

// --- omax ----------------------------------------------------------------

struct OmaxOptions {
  int n = 1;
  double a = sm::kDefaultBase;
  int n_max = sm::kDefaultNMax;
};

int run_omax(const OmaxOptions& opts) {
  sm::require_base(opts.a);
  const sm::MeasureReport closed = sm::omax_closed(opts.n, opts.a);
  const sm::MeasureReport recomputed = sm::complexity(
      sm::omax_spectrum(opts.n, opts.a, opts.n_max), opts.a);
  const double max_diff = std::max(
      {std::abs(closed.average_weight - recomputed.average_weight),
       std::abs(closed.entropy - recomputed.entropy),
       std::abs(closed.complexity - recomputed.complexity)});

  json inputs;
  inputs["n"] = opts.n;
  inputs["a"] = opts.a;
  inputs["n_max"] = opts.n_max;
  json results;
  results["closed_form"] = measure_triple(closed);
  results["recomputed"] = measure_triple(recomputed);
  results["max_abs_difference"] = max_diff;
  results["complexity_bound"] =
      opts.n * std::log(1.0 + 3.0 * opts.a) / std::log(opts.a);
  results["trivial_bound"] =
      (1.0 + std::log(4.0) / std::log(opts.a)) * opts.n;
  print_envelope("omax", std::move(inputs), std::move(results));
  return 0;
}

// --- plane ---------------------------------------------------------------

struct PlaneOptions {
  int n = 1;
  double a = sm::kDefaultBase;
  int samples = 33;
  bool csv = false;
};

int run_plane(const PlaneOptions& opts) {
  sm::require_base(opts.a);
  if (opts.samples < 2) {
    throw std::invalid_argument("--samples must be at least 2");
  }
  std::vector<sm::PlanePoint> points = sm::landmark_points(opts.n, opts.a);
  for (int i = 0; i < opts.samples; ++i) {
    const double w =
        static_cast<double>(opts.n) * i / (opts.samples - 1);
    points.push_back(sm::PlanePoint{
        "frontier", w, sm::frontier_max_entropy(opts.n, opts.a, w)});
  }

  if (opts.csv) {
    std::cout << "label,average_weight,entropy\n";
    for (const auto& p : points) {
      std::cout << p.label << "," << csv_cell(p.average_weight) << ","
                << csv_cell(p.entropy) << "\n";
    }
    return 0;
  }

  json inputs;
  inputs["n"] = opts.n;
  inputs["a"] = opts.a;
  inputs["samples"] = opts.samples;
  json rows = json::array();
  for (const auto& p : points) {
    json row;
    row["label"] = p.label;
    row["average_weight"] = p.average_weight;
    row["entropy"] = p.entropy;
    rows.push_back(std::move(row));
  }
  json results;
  results["points"] = std::move(rows);
  print_envelope("plane", std::move(inputs), std::move(results));
  return 0;
}

// --- growth --------------------------------------------------------------

struct GrowthOptions {
  SourceOptions source;
  std::string kind = "RT";
  double a = sm::kDefaultBase;
  int ptm_n_max = sm::kDefaultPtmNMax;
  sm::SearchConfig config;
};

json witness_top_coefficients(const sm::PauliSpectrum& witness) {
  std::vector<std::uint64_t> order(witness.coeffs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::uint64_t lhs, std::uint64_t rhs) {
              const double la = std::abs(witness.coeffs[lhs]);
              const double ra = std::abs(witness.coeffs[rhs]);
              if (la != ra) return la > ra;
              return lhs < rhs;
            });
  json top = json::array();
  const std::size_t limit = std::min<std::size_t>(16, order.size());
  for (std::size_t i = 0; i < limit; ++i) {
    const std::uint64_t index = order[i];
    json entry;
    entry["index"] = index;
    entry["pauli"] = sm::pauli_site_label(
        sm::PauliString::from_index(witness.n, index));
    entry["re"] = witness.coeffs[index].real();
    entry["im"] = witness.coeffs[index].imag();
    top.push_back(std::move(entry));
  }
  return top;
}

int run_growth(const GrowthOptions& opts) {
  sm::require_base(opts.a);
  const sm::GrowthKind kind = sm::growth_kind_from_name(opts.kind);
  const sm::MatrixXcd u = load_unitary(opts.source);

  sm::GrowthReport report;
  const bool searched = kind != sm::GrowthKind::COMPLEXITY_TILDE;
  if (searched) {
    report = sm::growth_search(u, kind, opts.a, opts.config, opts.ptm_n_max);
  } else {
    report = sm::growth_tilde(u, opts.a, opts.source.n_max);
  }

  json inputs = source_inputs(opts.source);
  inputs["a"] = opts.a;
  inputs["kind"] = std::string(sm::growth_kind_name(kind));
  if (searched) {
    inputs["ptm_n_max"] = opts.ptm_n_max;
    inputs["restarts"] = opts.config.restarts;
    inputs["max_iters"] = opts.config.max_iters;
    inputs["tol"] = opts.config.tol;
  }

  json results;
  results["kind"] = std::string(sm::growth_kind_name(report.kind));
  results["method"] =
      report.method == sm::GrowthMethod::EXACT ? "EXACT" : "LOWER_BOUND";
  results["value"] = report.value;
  results["witness_label"] = report.witness_label;
  results["iterations"] = report.iterations;
  results["witness_top"] = witness_top_coefficients(report.witness);
  if (searched) {
    json trace = json::array();
    for (const double v : report.trace) trace.push_back(v);
    results["trace"] = std::move(trace);
  }

  if (searched) {
    const std::uint64_t seed = opts.config.seed;
    print_envelope("growth", std::move(inputs), std::move(results), &seed);
  } else {
    print_envelope("growth", std::move(inputs), std::move(results));
  }
  return 0;
}

// --- selftest ------------------------------------------------------------

struct SelftestCliOptions {
  std::string level = "quick";
  std::uint64_t seed = 0;
  bool fault_inject = false;
};

int run_selftest_cmd(const SelftestCliOptions& opts) {
  sm::SelftestOptions options;
  if (opts.level == "quick") {
    options.level = sm::SelftestLevel::QUICK;
  } else if (opts.level == "full") {
    options.level = sm::SelftestLevel::FULL;
  } else {
    throw std::invalid_argument("--level must be quick or full");
  }
  options.seed = opts.seed;
  options.fault_injection = opts.fault_inject;
  std::error_code ec;
  const auto self = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    options.cli_path = self.string();
  }

  const sm::SelftestReport report = sm::run_selftest(options);

  json inputs;
  inputs["level"] = opts.level;
  json properties = json::array();
  for (const auto& result : report.results) {
    json entry;
    entry["name"] = result.name;
    entry["passed"] = result.passed;
    entry["worst_deviation"] = result.worst_deviation;
    properties.push_back(std::move(entry));
  }
  json results;
  results["all_passed"] = report.all_passed;
  results["properties"] = std::move(properties);
  print_envelope("selftest", std::move(inputs), std::move(results),
                 &opts.seed);
  if (!report.all_passed) {
    for (const auto& result : report.results) {
      if (!result.passed) {
        std::cerr << "selftest failure: " << result.name;
        if (!result.detail.empty()) {
          std::cerr << " (" << result.detail << ")";
        }
        std::cerr << "\n";
      }
    }
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scrambling measures of operators and unitaries"};
  app.require_subcommand(1);

  MeasureOptions measure_opts;
  auto* measure = app.add_subcommand(
      "measure", "Weight, entropy and complexity of conjugated observables");
  add_source_options(measure, measure_opts.source, /*unitary_allowed=*/true);
  auto* obs = measure->add_option("--obs", measure_opts.labels,
                                  "Observable as a Pauli site label, e.g. "
                                  "X0Z2; repeatable (default: every weight-1 "
                                  "Pauli)");
  measure->add_option("--obs-file", measure_opts.obs_file,
                      "Observable from a dense operator file")
      ->excludes(obs);
  measure->add_option("--a", measure_opts.a, "Entropy base")
      ->capture_default_str();
  measure->add_flag("--csv", measure_opts.csv, "Emit a CSV table");

  OmaxOptions omax_opts;
  auto* omax = app.add_subcommand(
      "omax", "Closed-form and recomputed values of the extremal operator");
  omax->add_option("--n", omax_opts.n, "Register size")->required();
  omax->add_option("--a", omax_opts.a, "Entropy base")->capture_default_str();
  omax->add_option("--n-max", omax_opts.n_max,
                   "Largest register size to materialize")
      ->capture_default_str();

  PlaneOptions plane_opts;
  auto* plane = app.add_subcommand(
      "plane", "Landmark points and the weight/entropy frontier");
  plane->add_option("--n", plane_opts.n, "Register size")->required();
  plane->add_option("--a", plane_opts.a, "Entropy base")->capture_default_str();
  plane->add_option("--samples", plane_opts.samples,
                    "Evenly spaced frontier samples")
      ->capture_default_str();
  plane->add_flag("--csv", plane_opts.csv, "Emit a CSV table");

  GrowthOptions growth_opts;
  auto* growth = app.add_subcommand(
      "growth", "Growth measures of a unitary: exact RT, lower bounds E/M/R");
  add_source_options(growth, growth_opts.source, /*unitary_allowed=*/true);
  growth->add_option("--kind", growth_opts.kind, "One of E, M, R, RT")
      ->capture_default_str();
  growth->add_option("--a", growth_opts.a, "Entropy base")
      ->capture_default_str();
  growth->add_option("--ptm-n-max", growth_opts.ptm_n_max,
                     "Largest register size for the transfer matrix")
      ->capture_default_str();
  growth->add_option("--seed", growth_opts.config.seed, "Search seed")
      ->capture_default_str();
  growth->add_option("--restarts", growth_opts.config.restarts,
                     "Random restarts for the search")
      ->capture_default_str();
  growth->add_option("--max-iters", growth_opts.config.max_iters,
                     "Ascent iterations per seed")
      ->capture_default_str();
  growth->add_option("--tol", growth_opts.config.tol,
                     "Ascent improvement threshold")
      ->capture_default_str();

  SelftestCliOptions selftest_opts;
  auto* selftest =
      app.add_subcommand("selftest", "Run the built-in verification suite");
  selftest->add_option("--level", selftest_opts.level, "quick or full")
      ->capture_default_str();
  selftest->add_option("--seed", selftest_opts.seed, "Suite seed")
      ->capture_default_str();
  selftest
      ->add_flag("--fault-inject", selftest_opts.fault_inject,
                 "Perturb one comparison to prove failures are detected")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (measure->parsed()) return run_measure(measure_opts);
    if (omax->parsed()) return run_omax(omax_opts);
    if (plane->parsed()) return run_plane(plane_opts);
    if (growth->parsed()) return run_growth(growth_opts);
    if (selftest->parsed()) return run_selftest_cmd(selftest_opts);
  } catch (const sm::limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sm::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
