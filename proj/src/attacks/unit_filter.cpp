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

#include "attacks/unit_sampler.hpp"
#include "sact/attacks.hpp"
#include "sact/instances.hpp"

namespace sact {

UnitFilterResult unit_filter(const ProblemInstance& inst, std::uint64_t budget,
                             std::uint64_t seed) {
  const ActionSystem& sys = *inst.system;
  const Semigroup& sg = sys.semigroup();
  if (!sg.unit())
    throw std::invalid_argument("unit_filter: system is not a monoid");

  UnitFilterResult res;
  CountingAction ca(sys, res.counters);

  // Group actions are their own unit restriction.
  if (sys.traits().group_action) {
    res.status = UnitFilterStatus::restricted;
    res.restricted = inst;
    return res;
  }

  auto make_restricted = [&]() {
    ProblemInstance out;
    out.system = restrict_to_units(inst.system);
    out.x = inst.x;
    out.y = inst.y;
    if (inst.witness && sg.is_unit(*inst.witness)) out.witness = inst.witness;
    return out;
  };

  // Exhaustive decision when the carrier fits in the budget; otherwise
  // sampled search, which can only be conclusive in the positive direction.
  if (sg.carrier_exact() && sg.carrier_size() <= budget) {
    for (std::uint64_t i = 0; i < sg.carrier_size(); ++i) {
      Element e = sg.element_at(i);
      if (!sg.is_unit(e)) continue;
      ca.step();
      ++res.probes;
      if (ca.points_equal(ca.act(e, inst.x), inst.y)) {
        res.status = UnitFilterStatus::restricted;
        res.restricted = make_restricted();
        return res;
      }
    }
    res.status = UnitFilterStatus::not_in_unit_orbit;
    return res;
  }

  Prng rng(seed);
  detail::UnitSampler units(sg);
  for (std::uint64_t i = 0; i < budget; ++i) {
    auto u = units.sample(rng);
    if (!u) break;
    ca.step();
    ++res.probes;
    if (ca.points_equal(ca.act(*u, inst.x), inst.y)) {
      res.status = UnitFilterStatus::restricted;
      res.restricted = make_restricted();
      return res;
    }
  }
  res.status = UnitFilterStatus::inconclusive;
  return res;
}

}  // namespace sact
