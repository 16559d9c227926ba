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

#include "scramblemetry/measures.hpp"
#include "scramblemetry/spectrum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace scramblemetry {

/// Which operator measure a growth quantity maximizes the increase of:
/// average weight (ENTANGLEMENT), entropy (MAGIC), or their sum
/// (COMPLEXITY). COMPLEXITY_TILDE restricts the maximization to weight-1
/// Pauli seeds, which makes it exactly computable.
enum class GrowthKind {
  ENTANGLEMENT,
  MAGIC,
  COMPLEXITY,
  COMPLEXITY_TILDE,
};

GrowthKind growth_kind_from_name(std::string_view name);
std::string_view growth_kind_name(GrowthKind kind);

enum class GrowthMethod {
  EXACT,        // enumeration over a finite seed set; COMPLEXITY_TILDE only
  LOWER_BOUND,  // certified value of the best operator the search found
};

/// Search knobs for the lower-bound optimizer.
struct SearchConfig {
  int restarts = 8;      // extra random unit-vector seeds
  int max_iters = 500;   // ascent iterations per seed
  double step = 0.1;     // initial gradient step
  double tol = 1e-8;     // stop when one iteration improves less than this
  std::uint64_t seed = 0;
};

struct GrowthReport {
  GrowthKind kind = GrowthKind::COMPLEXITY_TILDE;
  GrowthMethod method = GrowthMethod::EXACT;
  double value = 0.0;
  double a = kDefaultBase;
  PauliSpectrum witness;      // the normalized operator achieving `value`
  std::string witness_label;  // seed description; all argmax ties for EXACT
  int iterations = 0;         // total ascent iterations (0 for EXACT)
  std::vector<double> trace;  // best value so far after each iteration
};

/// Exact maximum of complexity(U^dag O U) - 1 over the 3n weight-1 Pauli
/// operators O. Ties within 1e-12 are all listed in witness_label; the
/// witness itself is the tie with the smallest Pauli index.
GrowthReport growth_tilde(const MatrixXcd& u, double a = kDefaultBase,
                          int n_max = kDefaultNMax);

/// Certified lower bound on the maximal increase of the kind's measure over
/// all normalized operators. Seeds: every Pauli operator (evaluated through
/// the transfer-matrix columns), the extremal-operator spectrum, and
/// cfg.restarts random unit vectors; gradient ascent on the coefficient
/// sphere then improves each seed. The result is never below the best seed.
GrowthReport growth_search(const MatrixXcd& u, GrowthKind kind,
                           double a = kDefaultBase, const SearchConfig& cfg = {},
                           int ptm_n_max = kDefaultPtmNMax);

/// Exact maximum of the search objective over single-Pauli seeds, by a full
/// sweep of the transfer-matrix columns. For Clifford unitaries and the
/// ENTANGLEMENT kind this is the true maximum over all Pauli operators.
double growth_pauli_exact(const MatrixXcd& u, GrowthKind kind,
                          double a = kDefaultBase, int ptm_n_max = kDefaultPtmNMax);

/// Same quantity through tableau enumeration; Clifford circuits only. The
/// 4^n sweep replaces the transfer matrix, so larger registers fit.
double growth_pauli_exact(const CliffordTableau& tableau, GrowthKind kind,
                          double a = kDefaultBase, int n_max = kDefaultNMax);

/// Both sides of the tensor-product maxitivity law for the exact measure:
/// lhs = growth_tilde(u1 (x) u2), rhs = max of the factors' values.
struct MaxitivityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};

MaxitivityCheck maxitivity_check(const MatrixXcd& u1, const MatrixXcd& u2,
                                 double a = kDefaultBase, int n_max = kDefaultNMax);

}  // namespace scramblemetry
