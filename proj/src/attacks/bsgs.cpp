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

#include <cmath>
#include <unordered_map>

#include "attacks/unit_sampler.hpp"
#include "sact/attacks.hpp"

namespace sact {

namespace {

struct TableHash {
  std::size_t operator()(const std::string& key) const noexcept {
    return static_cast<std::size_t>(fnv1a64(key));
  }
};

// Hash hits are resolved by full-encoding comparison; routing the comparison
// through the counter keeps equality_tests exact.
struct CountingTableEqual {
  QueryCounters* counters;
  bool operator()(const std::string& a, const std::string& b) const {
    ++counters->equality_tests;
    return a == b;
  }
};

}  // namespace

BsgsParams balanced_bsgs_plan(std::uint64_t n) {
  auto side = static_cast<std::uint64_t>(
      std::ceil(std::sqrt(static_cast<double>(n) * std::log(2.0))));
  if (side == 0) side = 1;
  return BsgsParams{side, side};
}

AttackResult bsgs(const ProblemInstance& inst, const BsgsParams& params,
                  std::uint64_t seed) {
  AttackResult res;
  const ActionSystem& sys = *inst.system;
  const Semigroup& sg = sys.semigroup();
  if (!sg.unit()) {
    res.failure = "bsgs requires a monoid with samplable units";
    return res;
  }

  CountingAction ca(sys, res.counters);
  Prng rng(seed);
  detail::UnitSampler units(sg);

  using Table =
      std::unordered_map<std::string, Element, TableHash, CountingTableEqual>;
  Table table(0, TableHash{}, CountingTableEqual{&res.counters});
  table.reserve(params.table_size * 2);

  // (1) table of (b_j . y, b_j) for random units b_j
  for (std::uint64_t j = 0; j < params.table_size; ++j) {
    ca.step();
    auto b = units.sample(rng);
    if (!b) {
      res.failure = "unit sampling budget exhausted";
      res.unit_acceptance = units.acceptance();
      return res;
    }
    Point by = ca.act(*b, inst.y);
    auto [it, inserted] = table.emplace(by.bytes, *b);
    if (inserted) ca.count_table_entry();
  }
  res.unit_acceptance = units.acceptance();

  // (2) probe random a . x against the table
  for (std::uint64_t i = 0; i < params.probe_count; ++i) {
    ca.step();
    Element a = sg.sample(rng);
    Point ax = ca.act(a, inst.x);
    auto it = table.find(ax.bytes);
    if (it == table.end()) continue;

    Element s = ca.compose(ca.invert(it->second), a);
    res.verified = verify_solution(inst, s).verified;
    res.solution = std::move(s);
    return res;
  }

  res.failure = "no collision after " + std::to_string(params.probe_count) +
                " probes";
  return res;
}

}  // namespace sact
