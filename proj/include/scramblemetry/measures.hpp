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

#include "scramblemetry/spectrum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace scramblemetry {

/// Default logarithm base for the entropy. Base 4 makes the uniform Pauli
/// distribution on n qubits carry entropy exactly n.
inline constexpr double kDefaultBase = 4.0;

/// Validates the entropy base; throws std::invalid_argument unless a > 1.
void require_base(double a);

/// All three measures of one normalized operator at entropy base a:
/// the average Pauli weight W, the Fourier entropy S, and their sum R.
struct MeasureReport {
  int n = 0;
  double a = kDefaultBase;
  double average_weight = 0.0;
  double entropy = 0.0;
  double complexity = 0.0;  // always average_weight + entropy
};

/// Mean Pauli weight sum_P |c_P|^2 w(P). Requires a normalized spectrum.
double avg_weight(const PauliSpectrum& spectrum);

/// Shannon entropy -sum_P |c_P|^2 log_a |c_P|^2 with the 0 log 0 = 0
/// convention. Requires a normalized spectrum and a > 1.
double fourier_entropy(const PauliSpectrum& spectrum, double a = kDefaultBase);

/// All three measures in one pass over the spectrum.
MeasureReport complexity(const PauliSpectrum& spectrum, double a = kDefaultBase);

/// Same measures straight from a probability vector over Pauli indices.
/// The vector must sum to one within tolerance.
MeasureReport complexity_of_probabilities(const std::vector<double>& q, int n,
                                          double a = kDefaultBase);

/// Closed-form measures of the extremal operator whose Pauli distribution
/// is q_P = a^{w(P)} / (1 + 3a)^n: W = 3an/(1+3a), R = n log_a(1+3a).
MeasureReport omax_closed(int n, double a = kDefaultBase);

/// Amplitude spectrum of the extremal operator, coefficient
/// sqrt(a^w / (1+3a)^n) on every Pauli of weight w, all phases zero.
PauliSpectrum omax_spectrum(int n, double a = kDefaultBase, int n_max = kDefaultNMax);

/// Number of Pauli strings of weight w on n qubits: C(n, w) 3^w.
std::uint64_t weight_census(int n, int w);

/// All census counts at once; sums to 4^n.
std::vector<std::uint64_t> weight_census_all(int n);

/// Both sides of the census identity
/// sum_w C(n,w) (3a)^w w = 3 a n (1 + 3a)^{n-1}:
/// lhs by direct summation, rhs by the closed form.
struct SnIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
};

SnIdentity sn_identity_check(int n, double a = kDefaultBase);

/// A labelled point of the weight / entropy plane.
struct PlanePoint {
  std::string label;
  double average_weight = 0.0;
  double entropy = 0.0;
};

/// Largest entropy among normalized spectra with mean weight exactly
/// w_target in [0, n]; attained by the Gibbs distribution over weights
/// p_w proportional to e^{beta w}, with beta solved by bisection.
double frontier_max_entropy(int n, double a, double w_target);

/// The (mean weight, entropy) point of the Gibbs weight distribution at a
/// given beta; beta = ln a reproduces the extremal-operator point.
PlanePoint frontier_at_beta(int n, double a, double beta);

/// The four landmark operators of the weight / entropy plane: the weight-n
/// Pauli ("O1"), the uniform weight-n-supported operator ("O2"), the
/// uniform operator ("O3"), and the extremal operator ("OMax").
std::vector<PlanePoint> landmark_points(int n, double a = kDefaultBase);

}  // namespace scramblemetry
