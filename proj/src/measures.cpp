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

#include "scramblemetry/measures.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace scramblemetry {

namespace {

// Below this, a probability contributes nothing to the entropy (0 log 0 = 0).
constexpr double kEntropyFloor = 1e-300;

void check_probability_sum(double total) {
  if (std::abs(total - 1.0) > kNormalizedTol) {
    std::ostringstream msg;
    msg << "operator is not normalized: sum |c|^2 = " << total;
    throw std::invalid_argument(msg.str());
  }
}

// Weight histogram of the squared coefficients; one popcount-binned pass.
std::vector<double> weight_bins(const PauliSpectrum& spectrum) {
  std::vector<double> bins(static_cast<std::size_t>(spectrum.n) + 1, 0.0);
  for (std::uint64_t idx = 0; idx < spectrum.coeffs.size(); ++idx) {
    bins[static_cast<std::size_t>(weight_of_index(idx, spectrum.n))] +=
        std::norm(spectrum.coeffs[idx]);
  }
  return bins;
}

double entropy_ln(const std::vector<std::complex<double>>& coeffs) {
  double acc = 0.0;
  for (const auto& c : coeffs) {
    const double q = std::norm(c);
    if (q >= kEntropyFloor) {
      acc -= q * std::log(q);
    }
  }
  return acc;
}

// ln(1 + 3 e^beta) without overflow for large |beta|.
double log1p_3exp(double beta) {
  if (beta > 0.0) {
    return beta + std::log(3.0 + std::exp(-beta));
  }
  return std::log1p(3.0 * std::exp(beta));
}

// Mean Pauli weight of the Gibbs weight distribution p_w ~ C(n,w) 3^w e^{bw};
// factorizes per qubit, so no census sum is needed.
double gibbs_mean_weight(int n, double beta) {
  return 3.0 * n / (std::exp(-beta) + 3.0);
}

double gibbs_entropy(int n, double a, double beta) {
  return (n * log1p_3exp(beta) - beta * gibbs_mean_weight(n, beta)) / std::log(a);
}

void check_n_positive(int n) {
  if (n < 1) {
    throw std::invalid_argument("qubit count must be at least 1");
  }
}

}  // namespace

void require_base(double a) {
  if (!(a > 1.0)) {
    std::ostringstream msg;
    msg << "entropy base must be greater than 1, got " << a;
    throw std::invalid_argument(msg.str());
  }
}

double avg_weight(const PauliSpectrum& spectrum) {
  check_probability_sum(spectrum.norm_squared());
  const std::vector<double> bins = weight_bins(spectrum);
  double w = 0.0;
  for (std::size_t k = 1; k < bins.size(); ++k) {
    w += static_cast<double>(k) * bins[k];
  }
  return w;
}

double fourier_entropy(const PauliSpectrum& spectrum, double a) {
  require_base(a);
  check_probability_sum(spectrum.norm_squared());
  return entropy_ln(spectrum.coeffs) / std::log(a);
}

MeasureReport complexity(const PauliSpectrum& spectrum, double a) {
  require_base(a);
  check_probability_sum(spectrum.norm_squared());
  MeasureReport report;
  report.n = spectrum.n;
  report.a = a;
  const std::vector<double> bins = weight_bins(spectrum);
  for (std::size_t k = 1; k < bins.size(); ++k) {
    report.average_weight += static_cast<double>(k) * bins[k];
  }
  report.entropy = entropy_ln(spectrum.coeffs) / std::log(a);
  report.complexity = report.average_weight + report.entropy;
  return report;
}

MeasureReport complexity_of_probabilities(const std::vector<double>& q, int n, double a) {
  require_base(a);
  if (q.size() != (std::size_t{1} << (2 * n))) {
    throw std::invalid_argument("probability vector length does not match 4^n");
  }
  double total = 0.0;
  for (double value : q) {
    if (value < 0.0) {
      throw std::invalid_argument("probabilities must be non-negative");
    }
    total += value;
  }
  check_probability_sum(total);
  MeasureReport report;
  report.n = n;
  report.a = a;
  const double inv_ln_a = 1.0 / std::log(a);
  for (std::uint64_t idx = 0; idx < q.size(); ++idx) {
    const double value = q[idx];
    report.average_weight += value * weight_of_index(idx, n);
    if (value >= kEntropyFloor) {
      report.entropy -= value * std::log(value) * inv_ln_a;
    }
  }
  report.complexity = report.average_weight + report.entropy;
  return report;
}

MeasureReport omax_closed(int n, double a) {
  check_n_positive(n);
  require_base(a);
  MeasureReport report;
  report.n = n;
  report.a = a;
  report.average_weight = 3.0 * a * n / (1.0 + 3.0 * a);
  report.complexity = n * std::log(1.0 + 3.0 * a) / std::log(a);
  report.entropy = report.complexity - report.average_weight;
  return report;
}

PauliSpectrum omax_spectrum(int n, double a, int n_max) {
  check_n_positive(n);
  require_base(a);
  if (n > n_max) {
    std::ostringstream msg;
    msg << "the extremal spectrum at " << n << " qubits exceeds the limit of " << n_max;
    throw limit_error(msg.str());
  }
  PauliSpectrum spectrum(n);
  // amplitude(w) = sqrt(a^w / (1+3a)^n), evaluated in log space.
  const double ln_a = std::log(a);
  const double ln_z = n * std::log(1.0 + 3.0 * a);
  std::vector<double> amplitude(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) {
    amplitude[static_cast<std::size_t>(w)] = std::exp(0.5 * (w * ln_a - ln_z));
  }
  for (std::uint64_t idx = 0; idx < spectrum.coeffs.size(); ++idx) {
    spectrum.coeffs[idx] = amplitude[static_cast<std::size_t>(weight_of_index(idx, n))];
  }
  spectrum.normalized = true;
  return spectrum;
}

std::uint64_t weight_census(int n, int w) {
  check_n_positive(n);
  if (n > 31) {
    throw std::invalid_argument("census count would overflow past n = 31");
  }
  if (w < 0 || w > n) {
    std::ostringstream msg;
    msg << "weight " << w << " out of range [0, " << n << "]";
    throw std::invalid_argument(msg.str());
  }
  // C(n, w): the multiplicative form keeps every intermediate an integer.
  std::uint64_t binom = 1;
  for (int k = 1; k <= w; ++k) {
    binom = binom * static_cast<std::uint64_t>(n - k + 1) / static_cast<std::uint64_t>(k);
  }
  std::uint64_t count = binom;
  for (int k = 0; k < w; ++k) {
    count *= 3;
  }
  return count;
}

std::vector<std::uint64_t> weight_census_all(int n) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) {
    counts[static_cast<std::size_t>(w)] = weight_census(n, w);
  }
  return counts;
}

SnIdentity sn_identity_check(int n, double a) {
  check_n_positive(n);
  require_base(a);
  SnIdentity result;
  // Direct sum with C(n, w) carried through the double-precision recurrence.
  double binom = 1.0;
  double power = 1.0;  // (3a)^w
  for (int w = 0; w <= n; ++w) {
    if (w > 0) {
      binom *= static_cast<double>(n - w + 1) / static_cast<double>(w);
      power *= 3.0 * a;
    }
    result.lhs += binom * power * w;
  }
  result.rhs = 3.0 * a * n * std::pow(1.0 + 3.0 * a, n - 1);
  return result;
}

double frontier_max_entropy(int n, double a, double w_target) {
  check_n_positive(n);
  require_base(a);
  if (!(w_target >= 0.0) || !(w_target <= static_cast<double>(n))) {
    std::ostringstream msg;
    msg << "target weight " << w_target << " out of range [0, " << n << "]";
    throw std::invalid_argument(msg.str());
  }
  if (w_target == 0.0) {
    return 0.0;  // only the identity has zero mean weight
  }
  if (w_target == static_cast<double>(n)) {
    // Uniform over the 3^n full-weight strings.
    return n * std::log(3.0) / std::log(a);
  }
  // The mean weight is strictly increasing in beta; bisect it onto target.
  double lo = -50.0;
  double hi = 50.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double mean = gibbs_mean_weight(n, mid);
    if (std::abs(mean - w_target) <= 1e-12) {
      lo = hi = mid;
      break;
    }
    if (mean < w_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return gibbs_entropy(n, a, 0.5 * (lo + hi));
}

PlanePoint frontier_at_beta(int n, double a, double beta) {
  check_n_positive(n);
  require_base(a);
  return PlanePoint{"frontier", gibbs_mean_weight(n, beta), gibbs_entropy(n, a, beta)};
}

std::vector<PlanePoint> landmark_points(int n, double a) {
  check_n_positive(n);
  require_base(a);
  const double ln_a = std::log(a);
  const MeasureReport omax = omax_closed(n, a);
  return {
      PlanePoint{"O1", static_cast<double>(n), 0.0},
      PlanePoint{"O2", static_cast<double>(n), n * std::log(3.0) / ln_a},
      PlanePoint{"O3", 0.75 * n, n * std::log(4.0) / ln_a},
      PlanePoint{"OMax", omax.average_weight, omax.entropy},
  };
}

}  // namespace scramblemetry
