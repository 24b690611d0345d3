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

#include "sact/reduction.hpp"

namespace sact {

NarrowedCandidates parallel_reduce(const ProblemInstance& inst,
                                   const std::vector<Reduction>& reductions) {
  NarrowedCandidates out;
  if (reductions.empty()) {
    out.failure = "no reductions given";
    return out;
  }
  for (const auto& red : reductions) {
    if (red.source.get() != inst.system.get())
      throw std::invalid_argument(
          "parallel_reduce: reduction source differs from the instance system");
  }

  // Solve each reduced instance; the sub-solutions t_i pin the constraint.
  auto shared_f = std::make_shared<std::vector<
      std::pair<std::function<Element(const Element&)>, Element>>>();
  for (const auto& red : reductions) {
    ProblemInstance sub;
    sub.system = red.target;
    {
      CountingAction ca(*inst.system, out.counters);
      ca.step();
      sub.x = red.G(inst.x);
      sub.y = red.F(inst.y);
    }
    AttackResult part = exhaustive(sub);
    out.counters += part.counters;
    if (!part.ok()) {
      out.failure = "sub-solve failed for " + red.name + ": " + part.failure;
      return out;
    }
    out.reduced_solutions.push_back(*part.solution);
    shared_f->emplace_back(red.f, *part.solution);
  }

  out.predicate = [shared_f](const Element& s) {
    for (const auto& [f, t] : *shared_f) {
      if (!(f(s) == t)) return false;
    }
    return true;
  };

  // Desk-scale enumeration of the intersection of the f_i^{-1}(t_i).
  const Semigroup& sg = inst.system->semigroup();
  if (sg.carrier_exact() && sg.carrier_size() <= 1000000) {
    for (std::uint64_t i = 0; i < sg.carrier_size(); ++i) {
      Element s = sg.element_at(i);
      if (out.predicate(s)) out.candidates.push_back(std::move(s));
    }
  }
  out.ok = true;
  return out;
}

}  // namespace sact
