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

#include "scramblemetry/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "scramblemetry/circuit.hpp"
#include "scramblemetry/common.hpp"
#include "scramblemetry/dense.hpp"
#include "scramblemetry/growth.hpp"
#include "scramblemetry/measures.hpp"
#include "scramblemetry/pauli.hpp"
#include "scramblemetry/spectrum.hpp"
#include "scramblemetry/tableau.hpp"

namespace scramblemetry {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Deterministic random source with explicit integer-to-double arithmetic, so
// results do not depend on the standard library's distribution internals.
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

 private:
  std::mt19937_64 engine_;
};

PauliSpectrum random_normalized_spectrum(Rng& rng, int n) {
  PauliSpectrum s(n);
  for (auto& c : s.coeffs) {
    c = std::complex<double>(rng.gaussian(), rng.gaussian());
  }
  return normalize(s);
}

// Accumulates deviations scaled by their tolerances; final pass/fail is
// simply "did anything exceed its tolerance".
struct Deviation {
  double worst = 0.0;

  void observe(double gap, double tol) { worst = std::max(worst, gap / tol); }
  void violation(bool bad) {
    if (bad) worst = std::max(worst, 2.0);
  }
};

struct Budget {
  double seconds = 0.0;  // 0 disables the wall-clock requirement
};

class Suite {
 public:
  explicit Suite(const SelftestOptions& options) : options_(options) {}

  bool full() const { return options_.level == SelftestLevel::FULL; }
  std::uint64_t seed_for(std::uint64_t salt) const {
    return options_.seed * 0x9e3779b97f4a7c15ull + salt;
  }
  const SelftestOptions& options() const { return options_; }

  // Picks the sample count for the current level.
  int count(int full_count, int quick_count) const {
    return full() ? full_count : quick_count;
  }

  void run(const std::string& name, Budget budget,
           const std::function<void(PropertyResult&, Deviation&)>& body) {
    PropertyResult result;
    result.name = name;
    Deviation dev;
    const auto start = Clock::now();
    bool threw = false;
    try {
      body(result, dev);
    } catch (const std::exception& e) {
      threw = true;
      result.detail = std::string("unexpected exception: ") + e.what();
    }
    result.seconds = seconds_since(start);
    result.worst_deviation = dev.worst;
    result.passed = !threw && dev.worst <= 1.0;
    if (result.passed && full() && budget.seconds > 0.0 &&
        result.seconds > budget.seconds) {
      result.passed = false;
      std::ostringstream msg;
      msg << "exceeded the " << budget.seconds << " s budget";
      if (!result.detail.empty()) result.detail += "; ";
      result.detail += msg.str();
    }
    results.push_back(std::move(result));
  }

  std::vector<PropertyResult> results;

 private:
  SelftestOptions options_;
};

constexpr double kBases[] = {1.5, 2.0, 4.0, 10.0};

MatrixXcd gate_unitary(GateKind kind, int n) {
  Circuit c(n);
  if (gate_arity(kind) == 2) {
    c.append(kind, 0, 1);
  } else {
    c.append(kind, 0);
  }
  return build_unitary(c);
}

// The textbook trace-formula coefficient Tr[P^dag O] / 2^n, evaluated over
// the 2^n non-zero entries of the dense Pauli; used as the independent
// reference for the fast transform.
std::complex<double> trace_formula_coefficient(const MatrixXcd& op,
                                               const PauliString& p) {
  const MatrixXcd pd = pauli_dense(p);
  const std::uint64_t dim = std::uint64_t{1} << p.n;
  std::complex<double> trace = 0.0;
  for (std::uint64_t col = 0; col < dim; ++col) {
    const std::uint64_t row = col ^ p.x_bits;
    trace += std::conj(pd(static_cast<Eigen::Index>(row),
                          static_cast<Eigen::Index>(col))) *
             op(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  return trace / static_cast<double>(dim);
}

// --- the numbered acceptance checks -------------------------------------

void check_extremal_values(Suite& suite) {
  suite.run("01_extremal_values", Budget{5.0}, [&](PropertyResult& r,
                                                   Deviation& dev) {
    constexpr double kTol = 1e-9;
    constexpr double kDigitsTol = 1e-5;
    constexpr double kPerQubit = 1.8502198590705461;  // log4(13)
    for (const double a : kBases) {
      for (int n = 1; n <= 6; ++n) {
        const MeasureReport closed = omax_closed(n, a);
        MeasureReport recomputed = complexity(omax_spectrum(n, a), a);
        if (suite.options().fault_injection && n == 1 && a == 4.0) {
          recomputed.average_weight += 1e-6;
          recomputed.complexity = recomputed.average_weight + recomputed.entropy;
        }
        dev.observe(std::abs(closed.average_weight - recomputed.average_weight),
                    kTol);
        dev.observe(std::abs(closed.entropy - recomputed.entropy), kTol);
        dev.observe(std::abs(closed.complexity - recomputed.complexity), kTol);
        if (a == 4.0) {
          dev.observe(std::abs(closed.complexity / n - kPerQubit), kDigitsTol);
        }
      }
    }
    r.detail = "closed forms vs recomputed spectra, n <= 6, four bases";
  });
}

void check_global_bound(Suite& suite) {
  suite.run("02_global_bound", Budget{30.0}, [&](PropertyResult& r,
                                                 Deviation& dev) {
    constexpr double kTol = 1e-9;
    const int samples = suite.count(1000, 100);
    Rng rng(suite.seed_for(0x02));
    bool biased_close = true;
    for (const double a : kBases) {
      for (int n = 1; n <= 5; ++n) {
        const double bound = n * std::log(1.0 + 3.0 * a) / std::log(a);
        for (int trial = 0; trial < samples; ++trial) {
          const PauliSpectrum s = random_normalized_spectrum(rng, n);
          dev.observe(std::max(0.0, complexity(s, a).complexity - bound), kTol);
        }
        // Perturb the extremal amplitudes; at least one sample must land
        // within ten percent of the bound.
        const PauliSpectrum extremal = omax_spectrum(n, a);
        double best = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
          PauliSpectrum biased = extremal;
          for (auto& c : biased.coeffs) {
            c *= 1.0 + 0.02 * rng.gaussian();
          }
          biased.normalized = false;
          const double value = complexity(normalize(biased), a).complexity;
          dev.observe(std::max(0.0, value - bound), kTol);
          best = std::max(best, value);
        }
        biased_close = biased_close && best >= 0.9 * bound;
      }
    }
    dev.violation(!biased_close);
    std::ostringstream msg;
    msg << samples << " random spectra per register size and base";
    r.detail = msg.str();
  });
}

void check_invariance_suites(Suite& suite) {
  suite.run("03_invariance_suites", Budget{60.0}, [&](PropertyResult& r,
                                                      Deviation& dev) {
    constexpr double kTol = 1e-8;
    const int pairs = suite.count(100, 20);
    Rng rng(suite.seed_for(0x03));
    const struct {
      CircuitClass cls;
      int measure;  // 0 = weight, 1 = entropy, 2 = complexity
    } suites[] = {{CircuitClass::NON_ENTANGLING, 0},
                  {CircuitClass::CLIFFORD, 1},
                  {CircuitClass::NON_SCRAMBLING, 2}};
    for (const auto& [cls, which] : suites) {
      for (int trial = 0; trial < pairs; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(5));
        const PauliSpectrum before = random_normalized_spectrum(rng, n);
        const Circuit circuit = random_circuit(n, 20, cls, rng.next_u64());
        const PauliSpectrum after = conjugate(build_unitary(circuit), before);
        double gap = 0.0;
        switch (which) {
          case 0:
            gap = std::abs(avg_weight(after) - avg_weight(before));
            break;
          case 1:
            gap = std::abs(fourier_entropy(after) - fourier_entropy(before));
            break;
          default:
            gap = std::abs(complexity(after).complexity -
                           complexity(before).complexity);
        }
        dev.observe(gap, kTol);
      }
    }
    std::ostringstream msg;
    msg << pairs << " operator/circuit pairs per free class, n <= 5";
    r.detail = msg.str();
  });
}

void check_additivity(Suite& suite) {
  suite.run("04_additivity", Budget{0.0}, [&](PropertyResult& r,
                                              Deviation& dev) {
    constexpr double kTol = 1e-9;
    const int pairs = suite.count(100, 20);
    Rng rng(suite.seed_for(0x04));
    for (int trial = 0; trial < pairs; ++trial) {
      const int n1 = 1 + static_cast<int>(rng.below(4));
      const int n2 = 1 + static_cast<int>(rng.below(
                             static_cast<std::uint64_t>(5 - n1)));
      const PauliSpectrum a = random_normalized_spectrum(rng, n1);
      const PauliSpectrum b = random_normalized_spectrum(rng, n2);
      const MeasureReport ma = complexity(a);
      const MeasureReport mb = complexity(b);
      const MeasureReport joint = complexity(tensor_spectrum(a, b));
      dev.observe(std::abs(joint.average_weight - ma.average_weight -
                           mb.average_weight),
                  kTol);
      dev.observe(std::abs(joint.entropy - ma.entropy - mb.entropy), kTol);
      dev.observe(std::abs(joint.complexity - ma.complexity - mb.complexity),
                  kTol);
    }
    std::ostringstream msg;
    msg << pairs << " tensor-product pairs with combined size <= 5";
    r.detail = msg.str();
  });
}

void check_census_sum_identity(Suite& suite) {
  suite.run("05_census_sum_identity", Budget{0.0}, [&](PropertyResult& r,
                                                       Deviation& dev) {
    constexpr double kRelTol = 1e-12;
    for (const double a : kBases) {
      for (int n = 1; n <= 20; ++n) {
        const SnIdentity check = sn_identity_check(n, a);
        dev.observe(std::abs(check.lhs - check.rhs),
                    kRelTol * std::abs(check.rhs));
      }
    }
    r.detail = "direct summation vs closed form, n <= 20, four bases";
  });
}

void check_weight_census(Suite& suite) {
  suite.run("06_weight_census", Budget{0.0}, [&](PropertyResult& r,
                                                 Deviation& dev) {
    for (int n = 1; n <= 4; ++n) {
      std::vector<std::uint64_t> counted(static_cast<std::size_t>(n) + 1, 0);
      const std::uint64_t total = std::uint64_t{1} << (2 * n);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        ++counted[static_cast<std::size_t>(weight_of_index(idx, n))];
      }
      std::uint64_t sum = 0;
      for (int w = 0; w <= n; ++w) {
        dev.violation(weight_census(n, w) != counted[static_cast<std::size_t>(w)]);
        sum += counted[static_cast<std::size_t>(w)];
      }
      dev.violation(sum != total);
    }
    r.detail = "exhaustive enumeration vs binomial counts, n <= 4";
  });
}

void check_enumeration_growth(Suite& suite) {
  suite.run("07_enumeration_growth", Budget{0.0}, [&](PropertyResult& r,
                                                      Deviation& dev) {
    constexpr double kTol = 1e-9;
    dev.observe(std::abs(growth_tilde(gate_unitary(GateKind::T, 1)).value - 0.5),
                kTol);
    dev.observe(
        std::abs(growth_tilde(gate_unitary(GateKind::CX, 2)).value - 1.0),
        kTol);

    Rng rng(suite.seed_for(0x07));
    const int circuits = suite.count(100, 20);
    for (int trial = 0; trial < circuits; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(5));
      const Circuit c =
          random_circuit(n, 20, CircuitClass::NON_SCRAMBLING, rng.next_u64());
      dev.observe(std::abs(growth_tilde(build_unitary(c)).value), kTol);
    }

    const int pairs = suite.count(50, 10);
    for (int trial = 0; trial < pairs; ++trial) {
      const int n1 = 1 + static_cast<int>(rng.below(4));
      const int n2 = 1 + static_cast<int>(rng.below(
                             static_cast<std::uint64_t>(5 - n1)));
      const MatrixXcd u1 = build_unitary(
          random_circuit(n1, 12, CircuitClass::GENERAL, rng.next_u64()));
      const MatrixXcd u2 = build_unitary(
          random_circuit(n2, 12, CircuitClass::GENERAL, rng.next_u64()));
      const MaxitivityCheck check = maxitivity_check(u1, u2);
      dev.observe(std::abs(check.lhs - check.rhs), kTol);
    }
    std::ostringstream msg;
    msg << "pinned gates, " << circuits << " non-scrambling circuits, " << pairs
        << " maxitivity pairs";
    r.detail = msg.str();
  });
}

void check_enumeration_growth_invariance(Suite& suite) {
  suite.run("08_enumeration_growth_invariance", Budget{0.0},
            [&](PropertyResult& r, Deviation& dev) {
              constexpr double kTol = 1e-8;
              const int triples = suite.count(50, 10);
              Rng rng(suite.seed_for(0x08));
              for (int trial = 0; trial < triples; ++trial) {
                const int n = 1 + static_cast<int>(rng.below(4));
                const MatrixXcd u = build_unitary(random_circuit(
                    n, 12, CircuitClass::GENERAL, rng.next_u64()));
                const MatrixXcd v1 = build_unitary(random_circuit(
                    n, 12, CircuitClass::NON_SCRAMBLING, rng.next_u64()));
                const MatrixXcd v2 = build_unitary(random_circuit(
                    n, 12, CircuitClass::NON_SCRAMBLING, rng.next_u64()));
                dev.observe(std::abs(growth_tilde(v1 * u * v2).value -
                                     growth_tilde(u).value),
                            kTol);
              }
              std::ostringstream msg;
              msg << triples << " non-scrambling dressings, n <= 4";
              r.detail = msg.str();
            });
}

void check_search_certification(Suite& suite) {
  suite.run("09_search_certification", Budget{0.0}, [&](PropertyResult& r,
                                                        Deviation& dev) {
    constexpr double kZeroTol = 1e-9;
    constexpr double kSeedSlack = 1e-12;
    SearchConfig cfg;
    cfg.restarts = 4;
    cfg.max_iters = 120;
    Rng rng(suite.seed_for(0x09));

    const auto certify = [&](const MatrixXcd& u, GrowthKind kind) {
      cfg.seed = rng.next_u64();
      const GrowthReport report = growth_search(u, kind, kDefaultBase, cfg);
      dev.observe(std::max(0.0, growth_pauli_exact(u, kind) - report.value),
                  kSeedSlack);
      for (std::size_t i = 1; i < report.trace.size(); ++i) {
        dev.violation(report.trace[i] < report.trace[i - 1]);
      }
      return report.value;
    };

    const int circuits = suite.count(6, 2);
    for (int trial = 0; trial < circuits; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(4));
      const MatrixXcd u = build_unitary(
          random_circuit(n, 12, CircuitClass::GENERAL, rng.next_u64()));
      certify(u, GrowthKind::ENTANGLEMENT);
      certify(u, GrowthKind::MAGIC);
      certify(u, GrowthKind::COMPLEXITY);
    }

    // The matching free class pins each kind to zero, swap included.
    dev.observe(std::abs(certify(gate_unitary(GateKind::SWAP, 2),
                                 GrowthKind::ENTANGLEMENT)),
                kZeroTol);
    const int free_runs = suite.count(3, 1);
    for (int trial = 0; trial < free_runs; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(4));
      dev.observe(
          std::abs(certify(
              build_unitary(random_circuit(n, 12, CircuitClass::NON_ENTANGLING,
                                           rng.next_u64())),
              GrowthKind::ENTANGLEMENT)),
          kZeroTol);
      dev.observe(
          std::abs(certify(build_unitary(random_circuit(
                               n, 12, CircuitClass::CLIFFORD, rng.next_u64())),
                           GrowthKind::MAGIC)),
          kZeroTol);
      dev.observe(
          std::abs(certify(
              build_unitary(random_circuit(n, 12, CircuitClass::NON_SCRAMBLING,
                                           rng.next_u64())),
              GrowthKind::COMPLEXITY)),
          kZeroTol);
    }
    r.detail = "seed dominance, monotone traces, free-class zeros";
  });
}

void check_transform_equivalence(Suite& suite) {
  suite.run("10_transform_equivalence", Budget{0.0}, [&](PropertyResult& r,
                                                         Deviation& dev) {
    constexpr double kCoeffTol = 1e-10;
    constexpr double kTransferTol = 1e-9;

    // Exhaustive basis inputs on up to three qubits.
    for (int n = 1; n <= 3; ++n) {
      const std::uint64_t total = std::uint64_t{1} << (2 * n);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        const MatrixXcd op = pauli_dense(PauliString::from_index(n, idx));
        const PauliSpectrum fast = decompose(op);
        for (std::uint64_t k = 0; k < total; ++k) {
          const std::complex<double> slow =
              trace_formula_coefficient(op, PauliString::from_index(n, k));
          dev.observe(std::abs(fast.coeffs[k] - slow), kCoeffTol);
        }
      }
    }

    // Random dense operators on four qubits.
    Rng rng(suite.seed_for(0x10));
    const int ops = suite.count(200, 30);
    for (int trial = 0; trial < ops; ++trial) {
      MatrixXcd op(16, 16);
      for (Eigen::Index row = 0; row < 16; ++row) {
        for (Eigen::Index col = 0; col < 16; ++col) {
          op(row, col) = std::complex<double>(rng.gaussian(), rng.gaussian());
        }
      }
      const PauliSpectrum fast = decompose(op);
      for (std::uint64_t k = 0; k < 256; ++k) {
        const std::complex<double> slow =
            trace_formula_coefficient(op, PauliString::from_index(4, k));
        dev.observe(std::abs(fast.coeffs[k] - slow), kCoeffTol);
      }
    }

    // Transfer matrices: orthogonal always, signed permutations for
    // Clifford circuits.
    for (int trial = 0; trial < 8; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(3));
      const Eigen::MatrixXd general = transfer_matrix(build_unitary(
          random_circuit(n, 12, CircuitClass::GENERAL, rng.next_u64())));
      const Eigen::MatrixXd gram = general.transpose() * general;
      dev.observe((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
                      .cwiseAbs()
                      .maxCoeff(),
                  kTransferTol);

      const Eigen::MatrixXd clifford = transfer_matrix(build_unitary(
          random_circuit(n, 12, CircuitClass::CLIFFORD, rng.next_u64())));
      for (Eigen::Index col = 0; col < clifford.cols(); ++col) {
        int support = 0;
        for (Eigen::Index row = 0; row < clifford.rows(); ++row) {
          const double v = std::abs(clifford(row, col));
          if (v > 0.5) {
            ++support;
            dev.observe(std::abs(v - 1.0), kTransferTol);
          } else {
            dev.observe(v, kTransferTol);
          }
        }
        dev.violation(support != 1);
      }
    }
    std::ostringstream msg;
    msg << "exhaustive bases to n=3 plus " << ops << " random operators at n=4";
    r.detail = msg.str();
  });
}

void check_frontier_consistency(Suite& suite) {
  suite.run("11_frontier_consistency", Budget{0.0}, [&](PropertyResult& r,
                                                        Deviation& dev) {
    constexpr double kTol = 1e-9;
    const double log4_3 = std::log(3.0) / std::log(4.0);
    for (int n = 1; n <= 6; ++n) {
      dev.observe(std::abs(frontier_max_entropy(n, 4.0, 0.75 * n) - n), kTol);
      dev.observe(std::abs(frontier_max_entropy(n, 4.0, n) - n * log4_3), kTol);
    }
    for (const double a : kBases) {
      for (int n = 1; n <= 6; ++n) {
        const PlanePoint at_beta = frontier_at_beta(n, a, std::log(a));
        const MeasureReport closed = omax_closed(n, a);
        dev.observe(std::abs(at_beta.average_weight - closed.average_weight),
                    kTol);
        dev.observe(std::abs(at_beta.entropy - closed.entropy), kTol);
      }
    }
    r.detail = "pinned frontier points and the extremal-operator crossing";
  });
}

void check_performance_envelope(Suite& suite) {
  suite.run("12_performance_envelope", Budget{0.0}, [&](PropertyResult& r,
                                                        Deviation& dev) {
    if (suite.options().cli_path.empty()) {
      r.detail = "skipped: no command-line binary provided";
      return;
    }

    namespace fs = std::filesystem;
    std::string dir_template =
        (fs::temp_directory_path() / "scramblemetry-selftest-XXXXXX").string();
    if (::mkdtemp(dir_template.data()) == nullptr) {
      throw std::runtime_error("could not create a temporary directory");
    }
    const fs::path dir(dir_template);
    const fs::path circuit_path = dir / "bench.circuit";
    const fs::path out_path = dir / "out.json";
    {
      std::ofstream out(circuit_path);
      out << format_circuit(
          random_circuit(8, 50, CircuitClass::GENERAL, suite.seed_for(0x12)));
    }

    const auto timed_run = [&](const std::string& args, double budget,
                               const char* label) {
      std::ostringstream cmd;
      cmd << '"' << suite.options().cli_path << "\" " << args << " --circuit \""
          << circuit_path.string() << "\" > \"" << out_path.string()
          << "\" 2>&1";
      const auto start = Clock::now();
      const int status = std::system(cmd.str().c_str());
      const double elapsed = seconds_since(start);
      dev.violation(status != 0);
      dev.violation(elapsed > budget);
      std::ostringstream note;
      note << label << " " << elapsed << " s (budget " << budget << " s)";
      return note.str();
    };

    const std::string measure_note = timed_run("measure", 10.0, "measure");
    const std::string growth_note =
        timed_run("growth --kind RT", 30.0, "growth");
    r.detail = measure_note + ", " + growth_note;

    std::error_code ec;
    fs::remove_all(dir, ec);
  });
}

// --- per-module property suites beyond the numbered checks ---------------

void check_module_pauli_algebra(Suite& suite) {
  suite.run("module_pauli_algebra", Budget{0.0}, [&](PropertyResult& r,
                                                     Deviation& dev) {
    constexpr double kTol = 1e-12;
    Rng rng(suite.seed_for(0xA1));
    const int trials = suite.count(200, 50);
    for (int trial = 0; trial < trials; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(4));
      const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
      const PauliString p(n, rng.next_u64() & mask, rng.next_u64() & mask);
      const PauliString q(n, rng.next_u64() & mask, rng.next_u64() & mask);
      const SignedPauli prod = multiply(p, q);
      const MatrixXcd dense_product = pauli_dense(p) * pauli_dense(q);
      dev.observe(
          (pauli_dense(prod) - dense_product).cwiseAbs().maxCoeff(), kTol);
      const MatrixXcd commutator =
          dense_product - pauli_dense(q) * pauli_dense(p);
      dev.violation(commutes(p, q) !=
                    (commutator.cwiseAbs().maxCoeff() < 1e-12));
    }
    r.detail = "products and commutators vs dense matrices";
  });
}

void check_module_tableau_agreement(Suite& suite) {
  suite.run("module_tableau_agreement", Budget{0.0}, [&](PropertyResult& r,
                                                         Deviation& dev) {
    constexpr double kTol = 1e-10;
    Rng rng(suite.seed_for(0xA2));
    const int circuits = suite.count(20, 6);
    for (int trial = 0; trial < circuits; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(4));
      const Circuit c =
          random_circuit(n, 15, CircuitClass::CLIFFORD, rng.next_u64());
      const MatrixXcd u = build_unitary(c);
      const CliffordTableau tableau = CliffordTableau::from_circuit(c);
      const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
      for (int k = 0; k < 6; ++k) {
        const PauliString p(n, rng.next_u64() & mask, rng.next_u64() & mask);
        const MatrixXcd expected = u.adjoint() * pauli_dense(p) * u;
        dev.observe(
            (pauli_dense(tableau.conjugate(p)) - expected).cwiseAbs().maxCoeff(),
            kTol);
      }
    }
    r.detail = "tableau conjugation vs dense conjugation, n <= 4";
  });
}

void check_module_circuit_io(Suite& suite) {
  suite.run("module_circuit_io", Budget{0.0}, [&](PropertyResult& r,
                                                  Deviation& dev) {
    Rng rng(suite.seed_for(0xA3));
    const int circuits = suite.count(40, 10);
    const CircuitClass classes[] = {
        CircuitClass::NON_ENTANGLING, CircuitClass::CLIFFORD,
        CircuitClass::NON_SCRAMBLING, CircuitClass::GENERAL};
    for (int trial = 0; trial < circuits; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(6));
      const Circuit c = random_circuit(n, 15, classes[trial % 4],
                                       rng.next_u64());
      dev.violation(parse_circuit(format_circuit(c)) != c);
    }
    // Dense operator files reproduce every bit of the matrix.
    for (int trial = 0; trial < suite.count(10, 3); ++trial) {
      const int n = 1 + static_cast<int>(rng.below(3));
      MatrixXcd m(1 << n, 1 << n);
      for (Eigen::Index row = 0; row < m.rows(); ++row) {
        for (Eigen::Index col = 0; col < m.cols(); ++col) {
          m(row, col) = std::complex<double>(rng.gaussian(), rng.gaussian());
        }
      }
      const MatrixXcd back = parse_operator(format_operator(m));
      dev.violation((back - m).cwiseAbs().maxCoeff() != 0.0);
    }
    r.detail = "print/parse round trips for circuits and operator files";
  });
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  Suite suite(options);
  const auto start = Clock::now();

  check_extremal_values(suite);
  check_global_bound(suite);
  check_invariance_suites(suite);
  check_additivity(suite);
  check_census_sum_identity(suite);
  check_weight_census(suite);
  check_enumeration_growth(suite);
  check_enumeration_growth_invariance(suite);
  check_search_certification(suite);
  check_transform_equivalence(suite);
  check_frontier_consistency(suite);
  if (options.level == SelftestLevel::FULL) {
    check_performance_envelope(suite);
  }
  check_module_pauli_algebra(suite);
  check_module_tableau_agreement(suite);
  check_module_circuit_io(suite);

  SelftestReport report;
  report.results = std::move(suite.results);
  report.all_passed = true;
  for (const auto& result : report.results) {
    report.all_passed = report.all_passed && result.passed;
  }
  report.total_seconds = seconds_since(start);
  return report;
}

}  // namespace scramblemetry
