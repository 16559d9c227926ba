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
#include <string>
#include <vector>

namespace scramblemetry {

enum class SelftestLevel {
  QUICK,  // reduced sample counts, skips the timing checks
  FULL,   // the complete verification suite
};

struct SelftestOptions {
  SelftestLevel level = SelftestLevel::QUICK;
  std::uint64_t seed = 0;

  // Path of the command-line binary, used by the end-to-end timing checks;
  // those checks are skipped when empty.
  std::string cli_path;

  // Deliberately perturbs one comparison input so the suite must detect and
  // name the failing property; exercises the failure path itself.
  bool fault_injection = false;
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  // Largest observed deviation divided by its tolerance, so 1.0 sits exactly
  // at the acceptance threshold and anything below passes. Checks without a
  // numeric tolerance report 0 when clean and 2 on any violation.
  double worst_deviation = 0.0;
  double seconds = 0.0;  // wall time, not part of serialized reports
  std::string detail;    // one line of context on the worst case
};

struct SelftestReport {
  std::vector<PropertyResult> results;
  bool all_passed = false;
  double total_seconds = 0.0;
};

/// Runs the verification suite: the numbered acceptance checks plus the
/// per-module property suites. Deterministic for a fixed seed.
SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace scramblemetry
