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

#include <numeric>
#include <stdexcept>
#include <vector>

#include "sact/attacks.hpp"
#include "sact/instances.hpp"

namespace sact {

namespace {

/// Permutation that is the identity on `fixed` and a cyclic shift on
/// `moved` (|moved| >= 2), so it fixes exactly the first set within the
/// candidate pool.
Element half_fixing_probe(const SymmetricSystem& sym,
                          const std::vector<std::uint32_t>& moved) {
  std::vector<std::uint32_t> images(sym.degree());
  std::iota(images.begin(), images.end(), 1);
  for (std::size_t i = 0; i < moved.size(); ++i)
    images[moved[i] - 1] = moved[(i + 1) % moved.size()];
  return sym.from_images(images);
}

}  // namespace

AttackResult symmetric_fixedpoint_search(const ProblemInstance& inst) {
  const auto* sym = dynamic_cast<const SymmetricSystem*>(inst.system.get());
  if (!sym)
    throw std::invalid_argument(
        "symmetric_fixedpoint_search: instance is not on a symmetric system");

  AttackResult res;
  CountingAction ca(*inst.system, res.counters);
  const std::uint64_t n = sym->degree();
  const std::uint64_t x = sym->point_value(inst.x);

  // Candidates for the hidden image s.x.  Each round probes c.y = y where c
  // fixes the left half of T pointwise and moves every point of the right
  // half; equality says s.x is in the fixed half (probability |fix|/|T|).
  std::vector<std::uint32_t> candidates(n);
  std::iota(candidates.begin(), candidates.end(), 1);

  while (candidates.size() > 2) {
    ca.step();
    std::size_t keep = candidates.size() / 2;
    std::vector<std::uint32_t> left(candidates.begin(),
                                    candidates.begin() + keep);
    std::vector<std::uint32_t> right(candidates.begin() + keep,
                                     candidates.end());
    Element c = half_fixing_probe(*sym, right);
    if (ca.points_equal(ca.act(c, inst.y), inst.y)) {
      candidates = std::move(left);   // s.x fixed by c
    } else {
      candidates = std::move(right);
    }
  }

  std::uint64_t located;
  if (candidates.size() == 1) {
    located = candidates[0];
  } else {
    // One cross probe a.x = y decides the final pair.
    ca.step();
    std::uint64_t u = candidates[0];
    Element to_u = x == u ? *sym->semigroup().unit()
                          : sym->transposition(x, u);
    located = ca.points_equal(ca.act(to_u, inst.x), inst.y) ? u
                                                            : candidates[1];
  }

  Element s = x == located ? *sym->semigroup().unit()
                           : sym->transposition(x, located);
  res.verified = verify_solution(inst, s).verified;
  res.solution = std::move(s);
  return res;
}

}  // namespace sact
