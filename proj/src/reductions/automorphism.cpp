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

#include "sact/reduction.hpp"

namespace sact {

Reduction automorphism_reduction(std::shared_ptr<const ActionSystem> system,
                                 std::vector<Element> H) {
  auto quotient = build_quotient(system, std::move(H));

  Reduction red;
  red.source = system;
  red.target = quotient;
  red.f = [q = quotient](const Element& s) { return q->canonical_element(s); };
  auto orbit_map = [q = quotient](const Point& x) {
    return q->canonical_point(x);
  };
  red.F = orbit_map;
  red.G = orbit_map;
  red.effective =
      quotient->semigroup().carrier_size() > 1 &&
      quotient->semigroup().carrier_size() <
          system->semigroup().carrier_size();
  red.name = "automorphism(|H|=" +
             std::to_string(quotient->subgroup().size()) + ")";
  return red;
}

}  // namespace sact
