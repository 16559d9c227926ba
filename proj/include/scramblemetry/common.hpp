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

#include <stdexcept>
#include <string>

namespace scramblemetry {

// Largest qubit count for dense 2^n x 2^n operators unless overridden.
inline constexpr int kDefaultNMax = 10;

// Largest qubit count for 4^n x 4^n Pauli transfer matrices unless overridden.
inline constexpr int kDefaultPtmNMax = 5;

// Conjugation and construction gates accept this much unitarity deviation.
inline constexpr double kUnitarityTol = 1e-6;

// A spectrum counts as normalized when |sum |c|^2 - 1| stays below this.
inline constexpr double kNormalizedTol = 1e-9;

// Raised when a request exceeds a configured size limit (n_max, ptm_n_max).
class limit_error : public std::runtime_error {
 public:
  explicit limit_error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace scramblemetry
