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

namespace sact {

/// Exact query accounting for attacks.  Every call site goes through
/// CountingAction, so counters match a replayed trace bit for bit.
struct QueryCounters {
  std::uint64_t action_queries = 0;
  std::uint64_t compositions = 0;
  std::uint64_t inversions = 0;
  std::uint64_t equality_tests = 0;
  std::uint64_t table_entries = 0;
  std::uint64_t wall_steps = 0;  // total loop iterations

  QueryCounters& operator+=(const QueryCounters& o) {
    action_queries += o.action_queries;
    compositions += o.compositions;
    inversions += o.inversions;
    equality_tests += o.equality_tests;
    table_entries += o.table_entries;
    wall_steps += o.wall_steps;
    return *this;
  }

  friend bool operator==(const QueryCounters&, const QueryCounters&) = default;
};

}  // namespace sact
