/*
 * Copyright 2026 The sact Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "sact/prng.hpp"

namespace sact::detail {

/// Fisher-Yates over {start, start+1, ..., start+count-1}.
inline std::vector<std::uint32_t> random_permutation(std::uint64_t count,
                                                     std::uint32_t start,
                                                     Prng& rng) {
  std::vector<std::uint32_t> v(count);
  for (std::uint64_t i = 0; i < count; ++i)
    v[i] = static_cast<std::uint32_t>(start + i);
  for (std::uint64_t i = count; i > 1; --i) {
    std::uint64_t j = rng.below(i);
    std::swap(v[i - 1], v[j]);
  }
  return v;
}

}  // namespace sact::detail
