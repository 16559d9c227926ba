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

#include "scramblemetry/growth.hpp"

#include "scramblemetry/parallel.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace scramblemetry {

namespace {

constexpr double kEntropyFloor = 1e-300;
constexpr double kTieTol = 1e-12;

void check_growth_limit(int n, int n_max, const char* what) {
  if (n > n_max) {
    std::ostringstream msg;
    msg << what << " at " << n << " qubits exceeds the limit of " << n_max;
    throw limit_error(msg.str());
  }
}

Eigen::VectorXd index_weights(int n) {
  const auto size = static_cast<Eigen::Index>(std::uint64_t{1} << (2 * n));
  Eigen::VectorXd weights(size);
  for (Eigen::Index i = 0; i < size; ++i) {
    weights[i] = weight_of_index(static_cast<std::uint64_t>(i), n);
  }
  return weights;
}

// The measure a growth kind maximizes the increase of, over a probability
// vector q on Pauli indices.
double measure_of(GrowthKind kind, const Eigen::VectorXd& q,
                  const Eigen::VectorXd& weights, double inv_ln_a) {
  double value = 0.0;
  if (kind != GrowthKind::MAGIC) {
    value += q.dot(weights);
  }
  if (kind != GrowthKind::ENTANGLEMENT) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < q.size(); ++i) {
      if (q[i] >= kEntropyFloor) {
        s -= q[i] * std::log(q[i]);
      }
    }
    value += s * inv_ln_a;
  }
  return value;
}

// dM/dq; the entropy branch clamps q at the floor so 0 log 0 stays smooth.
Eigen::VectorXd measure_grad(GrowthKind kind, const Eigen::VectorXd& q,
                             const Eigen::VectorXd& weights, double inv_ln_a) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(q.size());
  if (kind != GrowthKind::MAGIC) {
    g += weights;
  }
  if (kind != GrowthKind::ENTANGLEMENT) {
    for (Eigen::Index i = 0; i < q.size(); ++i) {
      g[i] -= (std::log(std::max(q[i], kEntropyFloor)) + 1.0) * inv_ln_a;
    }
  }
  return g;
}

// R_a of a spectrum's squared coefficients without normalization checks;
// internal use on vectors that are unit by construction.
double complexity_of_coeffs(const std::vector<std::complex<double>>& coeffs, int n,
                            double inv_ln_a) {
  double w = 0.0;
  double s = 0.0;
  for (std::uint64_t idx = 0; idx < coeffs.size(); ++idx) {
    const double q = std::norm(coeffs[idx]);
    w += q * weight_of_index(idx, n);
    if (q >= kEntropyFloor) {
      s -= q * std::log(q);
    }
  }
  return w + s * inv_ln_a;
}

// What a bare Pauli seed scores before conjugation: weight w(P), entropy 0.
double vertex_seed_measure(GrowthKind kind, double weight) {
  return kind == GrowthKind::MAGIC ? 0.0 : weight;
}

struct VertexSweep {
  double best_value = 0.0;
  std::uint64_t best_index = 0;
  std::vector<std::uint64_t> top_indices;  // a few best vertices, for seeding
};

// Evaluates the search objective at every single-Pauli coefficient vector;
// column j of the transfer matrix is already the image spectrum of P_j.
VertexSweep sweep_vertices(const Eigen::MatrixXd& transfer, GrowthKind kind,
                           const Eigen::VectorXd& weights, double inv_ln_a) {
  const Eigen::Index size = transfer.cols();
  std::vector<double> values(static_cast<std::size_t>(size), 0.0);
  parallel_for_ranges(size - 1, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t j = begin + 1; j < end + 1; ++j) {
      const Eigen::VectorXd q = transfer.col(j).array().square();
      values[static_cast<std::size_t>(j)] =
          measure_of(kind, q, weights, inv_ln_a) - vertex_seed_measure(kind, weights[j]);
    }
  });
  VertexSweep sweep;
  sweep.best_value = values[1];
  sweep.best_index = 1;
  std::vector<std::uint64_t> order;
  order.reserve(values.size() - 1);
  for (std::uint64_t j = 1; j < values.size(); ++j) {
    order.push_back(j);
    if (values[j] > sweep.best_value) {
      sweep.best_value = values[j];
      sweep.best_index = j;
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](std::uint64_t lhs, std::uint64_t rhs) {
    return values[lhs] > values[rhs];
  });
  order.resize(std::min<std::size_t>(order.size(), 4));
  sweep.top_indices = order;
  return sweep;
}

struct AscentSeed {
  std::string label;
  Eigen::VectorXd re;
  Eigen::VectorXd im;
};

struct AscentResult {
  double value = 0.0;
  Eigen::VectorXd re;
  Eigen::VectorXd im;
  int iterations = 0;
  std::vector<double> trace;  // best so far after each iteration
};

struct Evaluation {
  double f = 0.0;
  Eigen::VectorXd d_re, d_im;  // transfer applied to the two halves
  Eigen::VectorXd q_out, q_in;
};

Evaluation evaluate(const Eigen::MatrixXd& transfer, GrowthKind kind,
                    const Eigen::VectorXd& weights, double inv_ln_a,
                    const Eigen::VectorXd& re, const Eigen::VectorXd& im) {
  Evaluation e;
  e.d_re = transfer * re;
  e.d_im = transfer * im;
  e.q_out = e.d_re.array().square() + e.d_im.array().square();
  e.q_in = re.array().square() + im.array().square();
  e.f = measure_of(kind, e.q_out, weights, inv_ln_a) -
        measure_of(kind, e.q_in, weights, inv_ln_a);
  return e;
}

// Projected gradient ascent on the coefficient sphere with backtracking
// halving; the returned value never drops below the seed's objective.
AscentResult ascend(const Eigen::MatrixXd& transfer, GrowthKind kind,
                    const Eigen::VectorXd& weights, double inv_ln_a,
                    const SearchConfig& cfg, const AscentSeed& seed) {
  AscentResult result;
  result.re = seed.re;
  result.im = seed.im;
  Evaluation current = evaluate(transfer, kind, weights, inv_ln_a, result.re, result.im);
  result.value = current.f;
  double step = cfg.step;
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    const Eigen::VectorXd g_out =
        measure_grad(kind, current.q_out, weights, inv_ln_a);
    const Eigen::VectorXd g_in = measure_grad(kind, current.q_in, weights, inv_ln_a);
    const Eigen::VectorXd grad_re =
        2.0 * (transfer.transpose() * g_out.cwiseProduct(current.d_re)) -
        2.0 * g_in.cwiseProduct(result.re);
    const Eigen::VectorXd grad_im =
        2.0 * (transfer.transpose() * g_out.cwiseProduct(current.d_im)) -
        2.0 * g_in.cwiseProduct(result.im);

    Eigen::VectorXd next_re = result.re + step * grad_re;
    Eigen::VectorXd next_im = result.im + step * grad_im;
    const double norm =
        std::sqrt(next_re.squaredNorm() + next_im.squaredNorm());
    ++result.iterations;
    if (norm < 1e-12) {
      result.trace.push_back(result.value);
      break;
    }
    next_re /= norm;
    next_im /= norm;
    const Evaluation candidate =
        evaluate(transfer, kind, weights, inv_ln_a, next_re, next_im);
    if (candidate.f > result.value) {
      const double improvement = candidate.f - result.value;
      result.re = std::move(next_re);
      result.im = std::move(next_im);
      current = candidate;
      result.value = candidate.f;
      result.trace.push_back(result.value);
      if (improvement < cfg.tol) {
        break;
      }
    } else {
      result.trace.push_back(result.value);
      step *= 0.5;
      if (step < 1e-12) {
        break;
      }
    }
  }
  return result;
}

PauliSpectrum delta_spectrum(int n, std::uint64_t index) {
  PauliSpectrum spectrum(n);
  spectrum.coeffs[index] = 1.0;
  spectrum.normalized = true;
  return spectrum;
}

PauliSpectrum spectrum_from_parts(int n, const Eigen::VectorXd& re,
                                  const Eigen::VectorXd& im) {
  PauliSpectrum spectrum(n);
  for (std::uint64_t i = 0; i < spectrum.coeffs.size(); ++i) {
    spectrum.coeffs[i] = {re[static_cast<Eigen::Index>(i)],
                          im[static_cast<Eigen::Index>(i)]};
  }
  spectrum.normalized = true;
  return spectrum;
}

std::string site_label_of_index(int n, std::uint64_t index) {
  return pauli_site_label(PauliString::from_index(n, index));
}

void check_config(const SearchConfig& cfg) {
  if (cfg.restarts < 0 || cfg.max_iters < 1 || !(cfg.step > 0.0) || !(cfg.tol > 0.0)) {
    throw std::invalid_argument(
        "search config needs restarts >= 0, max_iters >= 1, step > 0, tol > 0");
  }
}

}  // namespace

GrowthKind growth_kind_from_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "E" || upper == "ENTANGLEMENT") {
    return GrowthKind::ENTANGLEMENT;
  }
  if (upper == "M" || upper == "MAGIC") {
    return GrowthKind::MAGIC;
  }
  if (upper == "R" || upper == "COMPLEXITY") {
    return GrowthKind::COMPLEXITY;
  }
  if (upper == "RT" || upper == "COMPLEXITY_TILDE") {
    return GrowthKind::COMPLEXITY_TILDE;
  }
  throw std::invalid_argument("unknown growth kind: " + std::string(name));
}

std::string_view growth_kind_name(GrowthKind kind) {
  switch (kind) {
    case GrowthKind::ENTANGLEMENT:
      return "ENTANGLEMENT";
    case GrowthKind::MAGIC:
      return "MAGIC";
    case GrowthKind::COMPLEXITY:
      return "COMPLEXITY";
    case GrowthKind::COMPLEXITY_TILDE:
      return "COMPLEXITY_TILDE";
  }
  throw std::invalid_argument("unknown growth kind value");
}

GrowthReport growth_tilde(const MatrixXcd& u, double a, int n_max) {
  require_base(a);
  const int n = require_unitary(u, kUnitarityTol);
  check_growth_limit(n, n_max, "exact growth");
  const double inv_ln_a = 1.0 / std::log(a);
  const MatrixXcd u_adj = u.adjoint();

  std::vector<std::uint64_t> seeds;
  for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << (2 * n)); ++idx) {
    if (weight_of_index(idx, n) == 1) {
      seeds.push_back(idx);
    }
  }
  std::vector<double> values(seeds.size(), 0.0);
  parallel_for_ranges(static_cast<std::int64_t>(seeds.size()),
                      [&](std::int64_t begin, std::int64_t end) {
                        for (std::int64_t i = begin; i < end; ++i) {
                          const PauliString p =
                              PauliString::from_index(n, seeds[static_cast<std::size_t>(i)]);
                          const MatrixXcd image = u_adj * pauli_times_unitary(p, u);
                          const PauliSpectrum spectrum = decompose(image, n);
                          values[static_cast<std::size_t>(i)] =
                              complexity_of_coeffs(spectrum.coeffs, n, inv_ln_a);
                        }
                      });

  const double best = *std::max_element(values.begin(), values.end());
  std::string ties;
  std::uint64_t witness_index = 0;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (values[i] >= best - kTieTol) {
      if (ties.empty()) {
        witness_index = seeds[i];
      } else {
        ties += ",";
      }
      ties += site_label_of_index(n, seeds[i]);
    }
  }

  GrowthReport report;
  report.kind = GrowthKind::COMPLEXITY_TILDE;
  report.method = GrowthMethod::EXACT;
  report.value = best - 1.0;
  report.a = a;
  report.witness = delta_spectrum(n, witness_index);
  report.witness_label = ties;
  report.iterations = 0;
  return report;
}

GrowthReport growth_search(const MatrixXcd& u, GrowthKind kind, double a,
                           const SearchConfig& cfg, int ptm_n_max) {
  if (kind == GrowthKind::COMPLEXITY_TILDE) {
    throw std::invalid_argument(
        "growth_search covers the continuous kinds; use growth_tilde instead");
  }
  require_base(a);
  check_config(cfg);
  const int n = require_unitary(u, kUnitarityTol);
  const Eigen::MatrixXd transfer = transfer_matrix(u, ptm_n_max);
  const Eigen::VectorXd weights = index_weights(n);
  const double inv_ln_a = 1.0 / std::log(a);
  const auto size = static_cast<Eigen::Index>(weights.size());

  const VertexSweep sweep = sweep_vertices(transfer, kind, weights, inv_ln_a);

  // Ascent seeds, in a fixed order: weight-1 Paulis, the extremal-operator
  // amplitudes, the best sweep vertices of higher weight, then the random
  // restarts drawn from one seeded stream.
  std::vector<AscentSeed> seeds;
  for (Eigen::Index j = 1; j < size; ++j) {
    if (weights[j] == 1.0) {
      AscentSeed seed;
      seed.label = "ascent:" + site_label_of_index(n, static_cast<std::uint64_t>(j));
      seed.re = Eigen::VectorXd::Zero(size);
      seed.im = Eigen::VectorXd::Zero(size);
      seed.re[j] = 1.0;
      seeds.push_back(std::move(seed));
    }
  }
  {
    const PauliSpectrum omax = omax_spectrum(n, a, n);
    AscentSeed seed;
    seed.label = "ascent:omax";
    seed.re = Eigen::VectorXd(size);
    seed.im = Eigen::VectorXd::Zero(size);
    for (Eigen::Index i = 0; i < size; ++i) {
      seed.re[i] = omax.coeffs[static_cast<std::size_t>(i)].real();
    }
    seeds.push_back(std::move(seed));
  }
  for (std::uint64_t j : sweep.top_indices) {
    if (weights[static_cast<Eigen::Index>(j)] == 1.0) {
      continue;  // already seeded above
    }
    AscentSeed seed;
    seed.label = "ascent:vertex:" + site_label_of_index(n, j);
    seed.re = Eigen::VectorXd::Zero(size);
    seed.im = Eigen::VectorXd::Zero(size);
    seed.re[static_cast<Eigen::Index>(j)] = 1.0;
    seeds.push_back(std::move(seed));
  }
  {
    // Explicit Box-Muller on the raw stream keeps restarts identical across
    // standard libraries.
    std::mt19937_64 rng(cfg.seed);
    const auto uniform = [&rng]() {
      return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    };
    for (int r = 0; r < cfg.restarts; ++r) {
      AscentSeed seed;
      seed.label = "ascent:random#" + std::to_string(r);
      seed.re = Eigen::VectorXd(size);
      seed.im = Eigen::VectorXd(size);
      double spare = 0.0;
      bool has_spare = false;
      const auto normal = [&]() {
        if (has_spare) {
          has_spare = false;
          return spare;
        }
        const double radius = std::sqrt(-2.0 * std::log(uniform()));
        const double angle = 2.0 * std::numbers::pi * uniform();
        spare = radius * std::sin(angle);
        has_spare = true;
        return radius * std::cos(angle);
      };
      for (Eigen::Index i = 0; i < size; ++i) {
        seed.re[i] = normal();
      }
      for (Eigen::Index i = 0; i < size; ++i) {
        seed.im[i] = normal();
      }
      const double norm = std::sqrt(seed.re.squaredNorm() + seed.im.squaredNorm());
      seed.re /= norm;
      seed.im /= norm;
      seeds.push_back(std::move(seed));
    }
  }

  std::vector<AscentResult> results(seeds.size());
  parallel_for_ranges(static_cast<std::int64_t>(seeds.size()),
                      [&](std::int64_t begin, std::int64_t end) {
                        for (std::int64_t i = begin; i < end; ++i) {
                          results[static_cast<std::size_t>(i)] =
                              ascend(transfer, kind, weights, inv_ln_a, cfg,
                                     seeds[static_cast<std::size_t>(i)]);
                        }
                      });

  GrowthReport report;
  report.kind = kind;
  report.method = GrowthMethod::LOWER_BOUND;
  report.a = a;
  report.value = sweep.best_value;
  report.witness = delta_spectrum(n, sweep.best_index);
  report.witness_label = "vertex:" + site_label_of_index(n, sweep.best_index);
  report.trace.push_back(sweep.best_value);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const AscentResult& r = results[i];
    report.iterations += r.iterations;
    for (double v : r.trace) {
      report.trace.push_back(std::max(report.trace.back(), v));
    }
    if (r.value > report.value) {
      report.value = r.value;
      report.witness = spectrum_from_parts(n, r.re, r.im);
      report.witness_label = seeds[i].label;
    }
  }
  return report;
}

double growth_pauli_exact(const MatrixXcd& u, GrowthKind kind, double a, int ptm_n_max) {
  if (kind == GrowthKind::COMPLEXITY_TILDE) {
    throw std::invalid_argument("use growth_tilde for the exact weight-1 measure");
  }
  require_base(a);
  const int n = require_unitary(u, kUnitarityTol);
  const Eigen::MatrixXd transfer = transfer_matrix(u, ptm_n_max);
  const Eigen::VectorXd weights = index_weights(n);
  return sweep_vertices(transfer, kind, weights, 1.0 / std::log(a)).best_value;
}

double growth_pauli_exact(const CliffordTableau& tableau, GrowthKind kind, double a,
                          int n_max) {
  if (kind == GrowthKind::COMPLEXITY_TILDE) {
    throw std::invalid_argument("use growth_tilde for the exact weight-1 measure");
  }
  require_base(a);
  const int n = tableau.n_qubits();
  check_growth_limit(n, n_max, "tableau enumeration");
  if (kind == GrowthKind::MAGIC) {
    return 0.0;  // images of Paulis are Paulis, and Paulis carry no entropy
  }
  double best = 0.0;
  for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << (2 * n)); ++idx) {
    const PauliString p = PauliString::from_index(n, idx);
    const SignedPauli image = tableau.conjugate(p);
    best = std::max(best, static_cast<double>(weight(image.pauli) - weight(p)));
  }
  return best;
}

MaxitivityCheck maxitivity_check(const MatrixXcd& u1, const MatrixXcd& u2, double a,
                                 int n_max) {
  const int n1 = require_unitary(u1, kUnitarityTol);
  const int n2 = require_unitary(u2, kUnitarityTol);
  check_growth_limit(n1 + n2, n_max, "the tensor-product check");
  MaxitivityCheck check;
  check.lhs = growth_tilde(tensor_unitary(u1, u2), a, n_max).value;
  check.rhs = std::max(growth_tilde(u1, a, n_max).value, growth_tilde(u2, a, n_max).value);
  return check;
}

}  // namespace scramblemetry
