// Copyright 2026 The scramblemetry authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings for the core library. Dense operators cross the boundary
// as complex numpy arrays (copied), Pauli spectra as a thin class with a
// numpy coefficient view, and growth kinds as the short strings the CLI
// accepts ("E", "M", "R", "RT").

#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <sstream>
#include <string>

#include "scramblemetry/circuit.hpp"
#include "scramblemetry/common.hpp"
#include "scramblemetry/dense.hpp"
#include "scramblemetry/growth.hpp"
#include "scramblemetry/measures.hpp"
#include "scramblemetry/pauli.hpp"
#include "scramblemetry/selftest.hpp"
#include "scramblemetry/spectrum.hpp"
#include "scramblemetry/version.hpp"

namespace py = pybind11;
namespace sm = scramblemetry;

namespace {

py::array_t<std::complex<double>> coefficients_array(
    const sm::PauliSpectrum& spectrum) {
  py::array_t<std::complex<double>> out(
      static_cast<py::ssize_t>(spectrum.coeffs.size()));
  auto view = out.mutable_unchecked<1>();
  for (py::ssize_t i = 0; i < view.shape(0); ++i) {
    view(i) = spectrum.coeffs[static_cast<std::size_t>(i)];
  }
  return out;
}

sm::PauliSpectrum spectrum_from_coefficients(
    int n, const py::array_t<std::complex<double>>& coeffs) {
  sm::PauliSpectrum spectrum(n);
  const auto view = coeffs.unchecked<1>();
  if (static_cast<std::uint64_t>(view.shape(0)) != spectrum.size()) {
    std::ostringstream msg;
    msg << "expected " << spectrum.size() << " coefficients for n=" << n
        << ", got " << view.shape(0);
    throw std::invalid_argument(msg.str());
  }
  for (py::ssize_t i = 0; i < view.shape(0); ++i) {
    spectrum.coeffs[static_cast<std::size_t>(i)] = view(i);
  }
  spectrum.normalized =
      std::abs(spectrum.norm_squared() - 1.0) <= sm::kNormalizedTol;
  return spectrum;
}

std::string measure_repr(const sm::MeasureReport& m) {
  std::ostringstream out;
  out << "MeasureReport(n=" << m.n << ", a=" << m.a
      << ", average_weight=" << m.average_weight << ", entropy=" << m.entropy
      << ", complexity=" << m.complexity << ")";
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Scrambling measures of operators and unitaries: average Pauli weight, "
      "Fourier entropy, operator complexity, the extremal operator and the "
      "weight/entropy frontier, and growth measures of unitaries.";
  m.attr("__version__") = sm::kVersion;
  m.attr("DEFAULT_BASE") = sm::kDefaultBase;
  m.attr("DEFAULT_N_MAX") = sm::kDefaultNMax;
  m.attr("DEFAULT_PTM_N_MAX") = sm::kDefaultPtmNMax;

  py::register_exception<sm::limit_error>(m, "LimitError", PyExc_RuntimeError);
  py::register_exception<sm::ParseError>(m, "CircuitParseError",
                                         PyExc_ValueError);

  // --- Pauli strings ------------------------------------------------------

  py::class_<sm::PauliString>(m, "PauliString",
                              "Hermitian Pauli string in symplectic form; "
                              "qubit 0 is the least significant bit.")
      .def(py::init<int, std::uint64_t, std::uint64_t>(), py::arg("n"),
           py::arg("x_bits"), py::arg("z_bits"))
      .def_static("identity", &sm::PauliString::identity, py::arg("n"))
      .def_static("from_index", &sm::PauliString::from_index, py::arg("n"),
                  py::arg("index"))
      .def_readonly("n", &sm::PauliString::n)
      .def_readonly("x_bits", &sm::PauliString::x_bits)
      .def_readonly("z_bits", &sm::PauliString::z_bits)
      .def("index", &sm::PauliString::index)
      .def("is_identity", &sm::PauliString::is_identity)
      .def("letters", &sm::PauliString::letters)
      .def("weight", [](const sm::PauliString& p) { return sm::weight(p); })
      .def("site_label",
           [](const sm::PauliString& p) { return sm::pauli_site_label(p); })
      .def("dense", [](const sm::PauliString& p) { return sm::pauli_dense(p); },
           "The 2^n x 2^n matrix of the string.")
      .def(py::self == py::self)
      .def("__repr__", [](const sm::PauliString& p) {
        return "PauliString('" + p.letters() + "')";
      });

  py::class_<sm::SignedPauli>(m, "SignedPauli",
                              "A Pauli string with sign i**phase_exp.")
      .def_readonly("pauli", &sm::SignedPauli::pauli)
      .def_readonly("phase_exp", &sm::SignedPauli::phase_exp)
      .def("sign", &sm::SignedPauli::sign)
      .def(py::self == py::self)
      .def("__repr__", [](const sm::SignedPauli& p) {
        std::ostringstream out;
        out << "SignedPauli('" << p.pauli.letters() << "', phase_exp="
            << static_cast<int>(p.phase_exp) << ")";
        return out.str();
      });

  m.def("weight", py::overload_cast<const sm::PauliString&>(&sm::weight),
        py::arg("p"), "Number of non-identity tensor factors.");
  m.def("multiply",
        py::overload_cast<const sm::PauliString&, const sm::PauliString&>(
            &sm::multiply),
        py::arg("p"), py::arg("q"), "Exact signed product of two strings.");
  m.def("commutes", &sm::commutes, py::arg("p"), py::arg("q"));
  m.def("pauli_from_letters", &sm::pauli_from_letters, py::arg("letters"),
        "Parse a full letter string such as 'XIZ' (qubit 0 first).");
  m.def("pauli_from_sites", &sm::pauli_from_sites, py::arg("label"),
        py::arg("n"), "Parse a site label such as 'X0Z2' on n qubits.");
  m.def("pauli_site_label", &sm::pauli_site_label, py::arg("p"));

  // --- spectra ------------------------------------------------------------

  py::class_<sm::PauliSpectrum>(
      m, "PauliSpectrum",
      "Coefficients of an operator over the 4^n Pauli strings, indexed by "
      "(z_bits << n) | x_bits.")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_coefficients", &spectrum_from_coefficients,
                  py::arg("n"), py::arg("coefficients"),
                  "Build a spectrum from a flat complex array of length 4^n.")
      .def_readonly("n", &sm::PauliSpectrum::n)
      .def_readonly("normalized", &sm::PauliSpectrum::normalized)
      .def("__len__", &sm::PauliSpectrum::size)
      .def("__getitem__",
           [](const sm::PauliSpectrum& s, std::uint64_t index) {
             if (index >= s.size()) throw py::index_error();
             return s.coeffs[index];
           })
      .def("at",
           [](const sm::PauliSpectrum& s, const sm::PauliString& p) {
             return s.at(p);
           },
           py::arg("p"), "Coefficient of one Pauli string.")
      .def("coefficients", &coefficients_array,
           "All 4^n coefficients as a complex numpy array (copy).")
      .def("probabilities", &sm::PauliSpectrum::probabilities,
           "The squared magnitudes |c_P|^2.")
      .def("norm_squared", &sm::PauliSpectrum::norm_squared)
      .def("__repr__", [](const sm::PauliSpectrum& s) {
        std::ostringstream out;
        out << "PauliSpectrum(n=" << s.n << ", normalized="
            << (s.normalized ? "True" : "False") << ")";
        return out.str();
      });

  m.def("decompose", &sm::decompose, py::arg("op"),
        py::arg("n_max") = sm::kDefaultNMax,
        "Pauli coefficients of a dense operator, c_P = Tr[P O] / 2^n.");
  m.def("reconstruct", &sm::reconstruct, py::arg("spectrum"),
        py::arg("n_max") = sm::kDefaultNMax,
        "Dense operator with the given Pauli coefficients.");
  m.def("normalize", &sm::normalize, py::arg("spectrum"),
        "Rescale to unit coefficient norm.");
  m.def("conjugate",
        py::overload_cast<const sm::MatrixXcd&, const sm::PauliSpectrum&>(
            &sm::conjugate),
        py::arg("u"), py::arg("spectrum"),
        "Spectrum of U^dag O U for a unitary U.");
  m.def("tensor_spectrum", &sm::tensor_spectrum, py::arg("low"),
        py::arg("high"),
        "Spectrum of the tensor product; `low` takes the low qubits.");
  m.def("transfer_matrix", &sm::transfer_matrix, py::arg("u"),
        py::arg("ptm_n_max") = sm::kDefaultPtmNMax,
        "The real 4^n x 4^n matrix R(i,j) = Tr[P_i U^dag P_j U] / 2^n.");

  // --- dense helpers ------------------------------------------------------

  m.def("build_unitary", &sm::build_unitary, py::arg("circuit"),
        py::arg("n_max") = sm::kDefaultNMax,
        "Dense unitary of a circuit (gates apply in list order).");
  m.def("require_unitary", &sm::require_unitary, py::arg("u"),
        py::arg("tol") = sm::kUnitarityTol,
        "Check unitarity and return the qubit count.");
  m.def("qubits_of", &sm::qubits_of, py::arg("m"));
  m.def("parse_operator", [](const std::string& text) {
          return sm::parse_operator(text);
        },
        py::arg("text"), "Parse the dense operator text format.");
  m.def("read_operator_file", &sm::read_operator_file, py::arg("path"));
  m.def("format_operator", &sm::format_operator, py::arg("m"),
        "Serialize a dense operator; round-trips through parse_operator.");

  // --- measures -----------------------------------------------------------

  py::class_<sm::MeasureReport>(
      m, "MeasureReport",
      "Average Pauli weight, Fourier entropy at base a, and their sum.")
      .def_readonly("n", &sm::MeasureReport::n)
      .def_readonly("a", &sm::MeasureReport::a)
      .def_readonly("average_weight", &sm::MeasureReport::average_weight)
      .def_readonly("entropy", &sm::MeasureReport::entropy)
      .def_readonly("complexity", &sm::MeasureReport::complexity)
      .def("__repr__", &measure_repr);

  m.def("avg_weight", &sm::avg_weight, py::arg("spectrum"),
        "Mean Pauli weight of a normalized spectrum.");
  m.def("fourier_entropy", &sm::fourier_entropy, py::arg("spectrum"),
        py::arg("a") = sm::kDefaultBase,
        "Entropy -sum |c_P|^2 log_a |c_P|^2 of a normalized spectrum.");
  m.def("complexity", &sm::complexity, py::arg("spectrum"),
        py::arg("a") = sm::kDefaultBase, "All three measures at once.");
  m.def("complexity_of_probabilities", &sm::complexity_of_probabilities,
        py::arg("q"), py::arg("n"), py::arg("a") = sm::kDefaultBase,
        "The measures of an explicit probability vector over Pauli indices.");

  m.def("omax_closed", &sm::omax_closed, py::arg("n"),
        py::arg("a") = sm::kDefaultBase,
        "Closed-form measures of the maximal-complexity operator.");
  m.def("omax_spectrum", &sm::omax_spectrum, py::arg("n"),
        py::arg("a") = sm::kDefaultBase, py::arg("n_max") = sm::kDefaultNMax,
        "The maximal-complexity operator itself.");
  m.def("weight_census", &sm::weight_census, py::arg("n"), py::arg("w"),
        "Number of n-qubit Pauli strings of weight w, C(n,w) 3^w.");
  m.def("weight_census_all", &sm::weight_census_all, py::arg("n"));

  py::class_<sm::SnIdentity>(m, "SnIdentity",
                             "Both sides of the weighted census identity.")
      .def_readonly("lhs", &sm::SnIdentity::lhs)
      .def_readonly("rhs", &sm::SnIdentity::rhs);
  m.def("sn_identity_check", &sm::sn_identity_check, py::arg("n"),
        py::arg("a") = sm::kDefaultBase);

  py::class_<sm::PlanePoint>(m, "PlanePoint",
                             "A labelled (average_weight, entropy) point.")
      .def_readonly("label", &sm::PlanePoint::label)
      .def_readonly("average_weight", &sm::PlanePoint::average_weight)
      .def_readonly("entropy", &sm::PlanePoint::entropy)
      .def("__repr__", [](const sm::PlanePoint& p) {
        std::ostringstream out;
        out << "PlanePoint('" << p.label << "', " << p.average_weight << ", "
            << p.entropy << ")";
        return out.str();
      });

  m.def("frontier_max_entropy", &sm::frontier_max_entropy, py::arg("n"),
        py::arg("a"), py::arg("w"),
        "Largest entropy of any normalized spectrum with mean weight w.");
  m.def("frontier_at_beta", &sm::frontier_at_beta, py::arg("n"), py::arg("a"),
        py::arg("beta"),
        "Frontier point of the Gibbs weight distribution at inverse "
        "temperature beta.");
  m.def("landmark_points", &sm::landmark_points, py::arg("n"),
        py::arg("a") = sm::kDefaultBase,
        "The four landmark operators of the weight/entropy plane.");

  // --- circuits -----------------------------------------------------------

  py::class_<sm::Circuit>(m, "Circuit",
                          "An ordered gate list; str() gives the text form.")
      .def(py::init<int>(), py::arg("n"))
      .def_readonly("n", &sm::Circuit::n)
      .def("__len__",
           [](const sm::Circuit& c) { return c.gates.size(); })
      .def("__str__",
           [](const sm::Circuit& c) { return sm::format_circuit(c); })
      .def(py::self == py::self)
      .def("__repr__", [](const sm::Circuit& c) {
        std::ostringstream out;
        out << "Circuit(n=" << c.n << ", gates=" << c.gates.size() << ")";
        return out.str();
      });

  py::class_<sm::CircuitClassification>(
      m, "CircuitClassification",
      "Which free classes every gate of a circuit belongs to.")
      .def_readonly("clifford", &sm::CircuitClassification::clifford)
      .def_readonly("non_entangling",
                    &sm::CircuitClassification::non_entangling)
      .def_readonly("non_scrambling",
                    &sm::CircuitClassification::non_scrambling)
      .def("__repr__", [](const sm::CircuitClassification& c) {
        std::ostringstream out;
        out << "CircuitClassification(clifford=" << (c.clifford ? "True" : "False")
            << ", non_entangling=" << (c.non_entangling ? "True" : "False")
            << ", non_scrambling=" << (c.non_scrambling ? "True" : "False")
            << ")";
        return out.str();
      });

  m.def("parse_circuit",
        [](const std::string& text) { return sm::parse_circuit(text); },
        py::arg("text"),
        "Parse the text format: 'qubits N' then one gate per line.");
  m.def("read_circuit_file", &sm::read_circuit_file, py::arg("path"));
  m.def("format_circuit", &sm::format_circuit, py::arg("circuit"));
  m.def("classify", &sm::classify, py::arg("circuit"));
  m.def("random_circuit",
        [](int n, int depth, const std::string& cls, std::uint64_t seed) {
          return sm::random_circuit(n, depth,
                                    sm::circuit_class_from_name(cls), seed);
        },
        py::arg("n"), py::arg("depth"), py::arg("cls") = "GENERAL",
        py::arg("seed") = 0,
        "Deterministic random circuit from the named gate alphabet "
        "(NON_ENTANGLING, CLIFFORD, NON_SCRAMBLING or GENERAL).");

  // --- growth -------------------------------------------------------------

  py::class_<sm::GrowthReport>(
      m, "GrowthReport",
      "A growth value with its witness operator and certification metadata.")
      .def_property_readonly("kind",
                             [](const sm::GrowthReport& r) {
                               return std::string(sm::growth_kind_name(r.kind));
                             })
      .def_property_readonly("method",
                             [](const sm::GrowthReport& r) {
                               return r.method == sm::GrowthMethod::EXACT
                                          ? "EXACT"
                                          : "LOWER_BOUND";
                             })
      .def_readonly("value", &sm::GrowthReport::value)
      .def_readonly("a", &sm::GrowthReport::a)
      .def_readonly("witness", &sm::GrowthReport::witness)
      .def_readonly("witness_label", &sm::GrowthReport::witness_label)
      .def_readonly("iterations", &sm::GrowthReport::iterations)
      .def_readonly("trace", &sm::GrowthReport::trace)
      .def("__repr__", [](const sm::GrowthReport& r) {
        std::ostringstream out;
        out << "GrowthReport(kind='" << sm::growth_kind_name(r.kind)
            << "', method='"
            << (r.method == sm::GrowthMethod::EXACT ? "EXACT" : "LOWER_BOUND")
            << "', value=" << r.value << ", witness_label='"
            << r.witness_label << "')";
        return out.str();
      });

  m.def("growth_tilde", &sm::growth_tilde, py::arg("u"),
        py::arg("a") = sm::kDefaultBase, py::arg("n_max") = sm::kDefaultNMax,
        "Exact growth over weight-1 Pauli seeds (the 'RT' kind).");
  m.def("growth_search",
        [](const sm::MatrixXcd& u, const std::string& kind, double a,
           int restarts, int max_iters, double step, double tol,
           std::uint64_t seed, int ptm_n_max) {
          sm::SearchConfig config;
          config.restarts = restarts;
          config.max_iters = max_iters;
          config.step = step;
          config.tol = tol;
          config.seed = seed;
          return sm::growth_search(u, sm::growth_kind_from_name(kind), a,
                                   config, ptm_n_max);
        },
        py::arg("u"), py::arg("kind"), py::arg("a") = sm::kDefaultBase,
        py::arg("restarts") = sm::SearchConfig{}.restarts,
        py::arg("max_iters") = sm::SearchConfig{}.max_iters,
        py::arg("step") = sm::SearchConfig{}.step,
        py::arg("tol") = sm::SearchConfig{}.tol, py::arg("seed") = 0,
        py::arg("ptm_n_max") = sm::kDefaultPtmNMax,
        "Certified lower bound on the growth of kind 'E', 'M' or 'R'.");
  m.def("growth_pauli_exact",
        [](const sm::MatrixXcd& u, const std::string& kind, double a,
           int ptm_n_max) {
          return sm::growth_pauli_exact(u, sm::growth_kind_from_name(kind), a,
                                        ptm_n_max);
        },
        py::arg("u"), py::arg("kind"), py::arg("a") = sm::kDefaultBase,
        py::arg("ptm_n_max") = sm::kDefaultPtmNMax,
        "Exact growth maximum over single Pauli-string seeds.");

  // --- selftest -----------------------------------------------------------

  py::class_<sm::PropertyResult>(m, "PropertyResult")
      .def_readonly("name", &sm::PropertyResult::name)
      .def_readonly("passed", &sm::PropertyResult::passed)
      .def_readonly("worst_deviation", &sm::PropertyResult::worst_deviation)
      .def_readonly("seconds", &sm::PropertyResult::seconds)
      .def_readonly("detail", &sm::PropertyResult::detail)
      .def("__repr__", [](const sm::PropertyResult& r) {
        std::ostringstream out;
        out << "PropertyResult('" << r.name << "', passed="
            << (r.passed ? "True" : "False") << ")";
        return out.str();
      });

  py::class_<sm::SelftestReport>(m, "SelftestReport")
      .def_readonly("results", &sm::SelftestReport::results)
      .def_readonly("all_passed", &sm::SelftestReport::all_passed)
      .def_readonly("total_seconds", &sm::SelftestReport::total_seconds);

  m.def("run_selftest",
        [](const std::string& level, std::uint64_t seed) {
          sm::SelftestOptions options;
          if (level == "quick") {
            options.level = sm::SelftestLevel::QUICK;
          } else if (level == "full") {
            options.level = sm::SelftestLevel::FULL;
          } else {
            throw std::invalid_argument("level must be 'quick' or 'full'");
          }
          options.seed = seed;
          py::gil_scoped_release release;
          return sm::run_selftest(options);
        },
        py::arg("level") = "quick", py::arg("seed") = 0,
        "Run the built-in verification suite (without the CLI timing check).");
}
