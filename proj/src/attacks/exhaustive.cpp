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

#include <stdexcept>

#include "sact/attacks.hpp"

namespace sact {

namespace {

constexpr std::uint64_t kExhaustiveLimit = 1000000;

void require_enumerable(const Semigroup& sg) {
  if (!sg.carrier_exact() || sg.carrier_size() > kExhaustiveLimit)
    throw std::invalid_argument(
        "exhaustive: carrier exceeds the 10^6 scan limit");
}

}  // namespace

AttackResult exhaustive(const ProblemInstance& inst) {
  const Semigroup& sg = inst.system->semigroup();
  require_enumerable(sg);

  AttackResult res;
  CountingAction ca(*inst.system, res.counters);
  for (std::uint64_t i = 0; i < sg.carrier_size(); ++i) {
    ca.step();
    Element s = sg.element_at(i);
    if (ca.points_equal(ca.act(s, inst.x), inst.y)) {
      res.verified = true;
      res.solution = std::move(s);
      return res;
    }
  }
  res.failure = "no solution in the carrier (y not in S.x)";
  return res;
}

std::vector<Element> exhaustive_solutions(const ProblemInstance& inst) {
  const Semigroup& sg = inst.system->semigroup();
  require_enumerable(sg);

  std::vector<Element> out;
  for (std::uint64_t i = 0; i < sg.carrier_size(); ++i) {
    Element s = sg.element_at(i);
    if (inst.system->act(s, inst.x) == inst.y) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace sact
