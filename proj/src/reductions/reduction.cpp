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

ReductionCheckReport check_reduction(const Reduction& red,
                                     std::uint64_t trials,
                                     std::uint64_t seed) {
  ReductionCheckReport report;
  const ActionSystem& src = *red.source;
  const ActionSystem& tgt = *red.target;
  const Semigroup& sg = src.semigroup();

  auto law_holds = [&](const Element& s, const Point& x) {
    Point lhs = tgt.act(red.f(s), red.G(x));
    Point rhs = red.F(src.act(s, x));
    return lhs == rhs;
  };

  bool small = sg.carrier_exact() &&
               sg.carrier_size() * src.set_size() <= (1ULL << 16);
  if (small) {
    report.exhaustive = true;
    for (std::uint64_t i = 0; i < sg.carrier_size(); ++i) {
      Element s = sg.element_at(i);
      for (std::uint64_t j = 0; j < src.set_size(); ++j) {
        Point x = src.point_at(j);
        ++report.checked;
        if (!law_holds(s, x)) {
          report.passed = false;
          report.counterexample = {s, x};
          return report;
        }
      }
    }
    return report;
  }

  Prng rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i) {
    Element s = sg.sample(rng);
    Point x = src.sample_point(rng);
    ++report.checked;
    if (!law_holds(s, x)) {
      report.passed = false;
      report.counterexample = {s, x};
      return report;
    }
  }
  return report;
}

ReductionCheckReport check_f_homomorphism(const Reduction& red,
                                          std::uint64_t trials,
                                          std::uint64_t seed) {
  ReductionCheckReport report;
  const Semigroup& src = red.source->semigroup();
  const Semigroup& tgt = red.target->semigroup();
  Prng rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i) {
    Element s = src.sample(rng);
    Element t = src.sample(rng);
    ++report.checked;
    if (!(red.f(src.compose(s, t)) == tgt.compose(red.f(s), red.f(t)))) {
      report.passed = false;
      report.counterexample = {s, red.source->base_point()};
      return report;
    }
  }
  return report;
}

ReducedInstance reduce_instance(const Reduction& red,
                                const ProblemInstance& inst,
                                std::uint64_t preimage_budget) {
  ReducedInstance out;
  out.original = inst;
  out.reduced.system = red.target;
  out.reduced.x = red.G(inst.x);
  out.reduced.y = red.F(inst.y);
  if (inst.witness) out.reduced.witness = red.f(*inst.witness);
  out.preimage_budget = preimage_budget;
  return out;
}

}  // namespace sact
