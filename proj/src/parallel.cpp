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

#include "scramblemetry/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string_view>
#include <thread>
#include <vector>

namespace scramblemetry {

int thread_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) {
    hw = 1;
  }
  const char* env = std::getenv("SCRAMBLEMETRY_THREADS");
  if (env == nullptr) {
    return hw;
  }
  std::string_view text(env);
  int requested = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), requested);
  if (ec != std::errc() || ptr != text.data() + text.size() || requested < 1) {
    return hw;
  }
  return std::min(requested, hw);
}

void parallel_for_ranges(std::int64_t count,
                         const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (count <= 0) {
    return;
  }
  const std::int64_t workers =
      std::min<std::int64_t>(thread_count(), count);
  // Threads are not worth spinning up for tiny ranges.
  if (workers <= 1 || count < 256) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const std::int64_t chunk = (count + workers - 1) / workers;
  for (std::int64_t w = 0; w < workers; ++w) {
    const std::int64_t begin = w * chunk;
    const std::int64_t end = std::min(begin + chunk, count);
    if (begin >= end) {
      break;
    }
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) {
    t.join();
  }
}

}  // namespace scramblemetry
