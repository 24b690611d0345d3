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
#include "sact/instances.hpp"

namespace sact {

AttackResult binary_search_min(const ProblemInstance& inst,
                               std::uint64_t known_preimage) {
  const auto* chain = dynamic_cast<const MinChainSystem*>(inst.system.get());
  if (!chain)
    throw std::invalid_argument(
        "binary_search_min: instance is not on a min-chain system");
  if (known_preimage < 1 || known_preimage > chain->chain_length())
    throw std::invalid_argument("binary_search_min: bad preimage");

  AttackResult res;
  CountingAction ca(*inst.system, res.counters);

  // t.x = t.y  <=>  t <= s  for t <= a; find the largest t with the
  // property.  Each probe is two action queries plus one equality test.
  auto probe = [&](std::uint64_t t) {
    ca.step();
    Element e = chain->chain_element(t);
    return ca.points_equal(ca.act(e, inst.x), ca.act(e, inst.y));
  };

  std::uint64_t lo = 1;
  std::uint64_t hi = known_preimage;
  if (probe(hi)) {
    lo = hi;
  } else {
    // probe(1) is always true: 1.x = phi(1) = 1.y
    while (hi - lo > 1) {
      std::uint64_t mid = lo + (hi - lo) / 2;
      if (probe(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }

  Element s = chain->chain_element(lo);
  res.verified = verify_solution(inst, s).verified;
  res.solution = std::move(s);
  return res;
}

}  // namespace sact
