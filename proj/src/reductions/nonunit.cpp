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

#include <set>
#include <stdexcept>

#include "reductions/sub_system.hpp"
#include "sact/reduction.hpp"

namespace sact {

namespace {

constexpr std::uint64_t kMaxMaterialized = 100000;

}  // namespace

Reduction nonunit_reduction(std::shared_ptr<const ActionSystem> system,
                            const Element& m) {
  const Semigroup& sg = system->semigroup();
  if (!sg.unit())
    throw std::invalid_argument("nonunit_reduction: system is not a monoid");
  if (!sg.carrier_exact() || sg.carrier_size() > kMaxMaterialized)
    throw std::invalid_argument(
        "nonunit_reduction: carrier too large to materialize the ideal");

  // Materialize the right ideal mS = image of lambda_m.
  std::set<Element> ideal;
  for (std::uint64_t i = 0; i < sg.carrier_size(); ++i)
    ideal.insert(sg.compose(m, sg.element_at(i)));

  auto sub = std::make_shared<detail::MaterializedSubsemigroup>(
      system->semigroup_ptr(),
      std::vector<Element>(ideal.begin(), ideal.end()),
      "right ideal mS, m = " + system->format_element(m));
  auto target = std::make_shared<detail::SubActionSystem>(
      system, sub, system->name() + "-ideal");

  Reduction red;
  red.source = system;
  red.target = target;
  red.f = [sys = system, m](const Element& s) {
    return sys->semigroup().compose(m, s);
  };
  red.F = [sys = system, m](const Point& x) { return sys->act(m, x); };
  red.G = [](const Point& x) { return x; };
  // |mS| = 1 iff lambda_m is constant (left-absorbing), |mS| = |S| iff m is
  // invertible; effectiveness is exactly strict betweenness.
  red.effective =
      ideal.size() > 1 && ideal.size() < sg.carrier_size();
  red.name = "nonunit(m=" + system->format_element(m) + ")";
  return red;
}

}  // namespace sact
