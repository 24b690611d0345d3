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

// Stage i reduces (x, y_i) over S_i to (x, m_{i+1}.y_i) over the ideal
// S_{i+1} = m_{i+1} S_i.  The innermost instance is solved exhaustively; a
// solution t_k is lifted back through preimage searches under each
// lambda_{m_i}.  A lift t is only kept if it solves its own stage, and the
// final candidates are verified against the original instance -- a solution
// of the reduced problem need not lift at all (caveat 1), and preimage sets
// can be large (caveat 2); the budget bounds the total enumeration.
AttackResult recursive_nonunit_solve(const ProblemInstance& inst,
                                     const std::vector<Element>& chain,
                                     std::uint64_t preimage_budget) {
  if (chain.empty()) return exhaustive(inst);

  AttackResult res;

  struct Stage {
    Reduction reduction;
    Point y;  // reduced right-hand side at this stage's target
  };
  std::vector<Stage> stages;
  std::shared_ptr<const ActionSystem> current = inst.system;
  Point y = inst.y;
  {
    CountingAction ca(*inst.system, res.counters);
    for (const Element& m : chain) {
      Reduction red = nonunit_reduction(current, m);
      y = ca.act(m, y);  // F_i = Phi_m, G_i = id
      stages.push_back(Stage{red, y});
      current = stages.back().reduction.target;
    }
  }

  // Innermost: find all t in the final ideal with t.x = y_k.
  ProblemInstance innermost;
  innermost.system = current;
  innermost.x = inst.x;
  innermost.y = stages.back().y;
  std::vector<Element> candidates;
  {
    CountingAction ca(*current, res.counters);
    const Semigroup& sg = current->semigroup();
    for (std::uint64_t i = 0; i < sg.carrier_size(); ++i) {
      ca.step();
      Element t = sg.element_at(i);
      if (ca.points_equal(ca.act(t, inst.x), innermost.y))
        candidates.push_back(std::move(t));
    }
  }
  if (candidates.empty()) {
    res.failure = "innermost reduced instance has no solution";
    return res;
  }

  // Lift stage by stage: preimages of t under lambda_m within the previous
  // carrier, pruned to elements that solve their own stage.
  std::uint64_t enumerated = 0;
  for (std::size_t level = stages.size(); level-- > 0;) {
    const ActionSystem& prev =
        level == 0 ? *inst.system : *stages[level - 1].reduction.target;
    const Point& prev_y = level == 0 ? inst.y : stages[level - 1].y;
    const Element& m = chain[level];
    const Semigroup& prev_sg = prev.semigroup();

    CountingAction ca(prev, res.counters);
    std::vector<Element> lifted;
    for (std::uint64_t i = 0; i < prev_sg.carrier_size(); ++i) {
      Element u = prev_sg.element_at(i);
      if (++enumerated > preimage_budget) {
        res.failure = "preimage budget exhausted during lifting";
        return res;
      }
      ca.step();
      Element mu = ca.compose(m, u);
      bool is_preimage = false;
      for (const Element& t : candidates) {
        ca.count_equality();
        if (mu == t) {
          is_preimage = true;
          break;
        }
      }
      if (!is_preimage) continue;
      if (ca.points_equal(ca.act(u, inst.x), prev_y))
        lifted.push_back(std::move(u));
    }
    if (lifted.empty()) {
      res.failure =
          "lift failure at stage " + std::to_string(level + 1) +
          " (no preimage solves the stage)";
      return res;
    }
    candidates = std::move(lifted);
  }

  // Caveat honesty: only a candidate verifying against the original
  // instance counts.
  for (const Element& s : candidates) {
    if (verify_solution(inst, s).verified) {
      res.solution = s;
      res.verified = true;
      return res;
    }
  }
  res.failure = "no lifted candidate verified against the original instance";
  return res;
}

}  // namespace sact
