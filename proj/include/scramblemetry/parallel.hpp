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
#include <functional>

namespace scramblemetry {

/// Worker count used for internal parallel loops. Honors the
/// SCRAMBLEMETRY_THREADS environment variable, capped at hardware concurrency.
int thread_count();

/// Runs fn(begin, end) over a partition of [0, count). Workers receive
/// disjoint contiguous ranges and must only write to disjoint locations, so
/// results are independent of the worker count. Runs inline when count is
/// small or only one thread is configured.
void parallel_for_ranges(std::int64_t count, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace scramblemetry
