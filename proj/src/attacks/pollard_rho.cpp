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

#include <vector>

#include "attacks/unit_sampler.hpp"
#include "sact/attacks.hpp"

namespace sact {

namespace {

// One walk state: the label element and its image point.  A step moves
//   elem <- f(point) * elem,   point <- f(point) . point
// so the point sequence iterates z -> f(z).z and the label tracks the
// product of multipliers.
struct Walk {
  Element elem;
  Point point;
};

class StepFunction {
 public:
  StepFunction(std::vector<Element> multipliers)
      : multipliers_(std::move(multipliers)) {}

  const Element& operator()(const Point& z) const {
    return multipliers_[fnv1a64(z.bytes) % multipliers_.size()];
  }

 private:
  std::vector<Element> multipliers_;
};

void advance(Walk& w, const StepFunction& f, CountingAction& ca) {
  const Element& m = f(w.point);
  w.elem = ca.compose(m, w.elem);
  w.point = ca.act(m, w.point);
}

/// Floyd: smallest iteration count i with z_{1+i} = z_{1+2i}.  i is a
/// multiple of the point-cycle period and at least the preperiod, which is
/// all the scan step needs.  Returns false if the bound is hit.
bool find_loop(Walk& tortoise, const StepFunction& f, CountingAction& ca,
               std::uint64_t bound, std::uint64_t& iterations) {
  Walk hare = tortoise;
  for (iterations = 0; iterations < bound;) {
    ca.step();
    ++iterations;
    advance(tortoise, f, ca);
    advance(hare, f, ca);
    advance(hare, f, ca);
    if (ca.points_equal(tortoise.point, hare.point)) return true;
  }
  return false;
}

}  // namespace

RhoOnceResult pollard_rho_once(const ProblemInstance& inst,
                               const WalkConfig& walk, std::uint64_t seed) {
  RhoOnceResult res;
  const ActionSystem& sys = *inst.system;
  const Semigroup& sg = sys.semigroup();
  if (!sg.unit()) {
    res.failure = "pollard_rho requires invertible walk elements";
    return res;
  }

  CountingAction ca(sys, res.counters);
  Prng rng(seed);
  detail::UnitSampler units(sg);

  std::vector<Element> multipliers;
  multipliers.reserve(walk.step_elements);
  for (std::uint32_t i = 0; i < walk.step_elements; ++i) {
    auto u = units.sample(rng);
    if (!u) {
      res.failure = "unit sampling budget exhausted";
      res.unit_acceptance = units.acceptance();
      return res;
    }
    multipliers.push_back(std::move(*u));
  }
  StepFunction f(std::move(multipliers));

  // a-walk starts anywhere in S; the b-walk must stay invertible.
  Walk a{sg.sample(rng), Point{}};
  a.point = ca.act(a.elem, inst.x);
  auto b_start = units.sample(rng);
  res.unit_acceptance = units.acceptance();
  if (!b_start) {
    res.failure = "unit sampling budget exhausted";
    return res;
  }
  Walk b{std::move(*b_start), Point{}};
  b.point = ca.act(b.elem, inst.y);

  const std::uint64_t bound = sys.set_size() + 2;

  // (1) loop construction on both walks
  if (!find_loop(a, f, ca, bound, res.a_loop) ||
      !find_loop(b, f, ca, bound, res.b_loop)) {
    res.failure = "cycle detection exceeded bound";
    return res;
  }

  // (2) scan the b-cycle against the a-meeting point.  The b-loop length is
  // a multiple of the b-cycle period, so b_loop probes cover the full cycle.
  Walk cur = b;
  for (std::uint64_t s = 0; s < res.b_loop; ++s) {
    ca.step();
    ++res.scan_used;
    if (ca.points_equal(a.point, cur.point)) {
      Element g = ca.compose(ca.invert(cur.elem), a.elem);
      res.verified = verify_solution(inst, g).verified;
      res.solution = std::move(g);
      return res;
    }
    advance(cur, f, ca);
  }

  res.failure = "loops disjoint (or preperiod exceeded period)";
  return res;
}

AttackResult pollard_rho(const ProblemInstance& inst, const RhoParams& params,
                         std::uint64_t seed) {
  AttackResult total;
  total.attempts = 0;
  for (std::uint64_t attempt = 0; attempt < params.max_retries; ++attempt) {
    RhoOnceResult one = pollard_rho_once(
        inst, params.walk,
        splitmix64_mix(seed + (attempt + 1) * 0x9E3779B97F4A7C15ULL));
    total.counters += one.counters;
    ++total.attempts;
    total.unit_acceptance = one.unit_acceptance;
    if (one.ok()) {
      total.solution = std::move(one.solution);
      total.verified = one.verified;
      return total;
    }
    total.failure = std::move(one.failure);
  }
  return total;
}

}  // namespace sact
