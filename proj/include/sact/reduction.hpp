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

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sact/attacks.hpp"
#include "sact/instances.hpp"

namespace sact {

/// Maps (f, F, G) between two actions satisfying f(s).G(x) = F(s.x).
/// effective means: maps computable within budget and 1 < |T| < |S|.
struct Reduction {
  std::shared_ptr<const ActionSystem> source;
  std::shared_ptr<const ActionSystem> target;
  std::function<Element(const Element&)> f;
  std::function<Point(const Point&)> F;
  std::function<Point(const Point&)> G;
  bool effective = false;
  std::string name;
};

struct ReductionCheckReport {
  bool passed = true;
  std::uint64_t checked = 0;
  bool exhaustive = false;
  std::optional<std::pair<Element, Point>> counterexample;
};

/// Samples (s, x) pairs and asserts the commuting law; exhaustive when
/// |S| * |X| <= 2^16.
ReductionCheckReport check_reduction(const Reduction& red,
                                     std::uint64_t trials, std::uint64_t seed);

/// Checks that f is a semigroup homomorphism on sampled pairs (reasonable
/// whenever F = G).
ReductionCheckReport check_f_homomorphism(const Reduction& red,
                                          std::uint64_t trials,
                                          std::uint64_t seed);

struct ReducedInstance {
  ProblemInstance original;
  ProblemInstance reduced;  // (G(x), F(y)) on the target
  std::uint64_t preimage_budget = 100000;
};

ReducedInstance reduce_instance(const Reduction& red,
                                const ProblemInstance& inst,
                                std::uint64_t preimage_budget = 100000);

// ---------------------------------------------------------------------------
// (lambda_m, Phi_m, id): multiplication by m maps the problem into the right
// ideal mS.  Effective iff m is neither left-absorbing nor invertible.
// ---------------------------------------------------------------------------
Reduction nonunit_reduction(std::shared_ptr<const ActionSystem> system,
                            const Element& m);

// ---------------------------------------------------------------------------
// (pi, Phi_m, Phi_m) with m = n / q^e on a cyclic-exp system: the classical
// Pohlig-Hellman prime-power reduction.
// ---------------------------------------------------------------------------
Reduction ph_power_reduction(std::shared_ptr<const CyclicExpSystem> system,
                             std::uint64_t prime_power);

// ---------------------------------------------------------------------------
// (f, F, F) from a subgroup H of units acting as automorphisms: the natural
// maps onto S/~ and X/~ (wraps build_quotient).
// ---------------------------------------------------------------------------
Reduction automorphism_reduction(std::shared_ptr<const ActionSystem> system,
                                 std::vector<Element> H);

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

/// Classical Pohlig-Hellman on a cyclic-exp instance: reduce per prime power
/// q^e || n, solve each reduced instance (exhaustive for small q^e, BSGS
/// with retries otherwise), recombine by CRT.
AttackResult ph_cyclic_solve(const ProblemInstance& inst, std::uint64_t seed);

/// Recursive non-unit reductions m_1, m_2, ...: solve the innermost reduced
/// instance exhaustively, then lift stage by stage through preimage search.
/// Every lifted solution is verified against the original instance.
AttackResult recursive_nonunit_solve(const ProblemInstance& inst,
                                     const std::vector<Element>& chain,
                                     std::uint64_t preimage_budget = 100000);

/// Several reductions applied in parallel; the result is the constraint
/// s in the intersection of f_i^{-1}(t_i), as a predicate plus its explicit
/// desk-scale enumeration.
struct NarrowedCandidates {
  bool ok = false;
  std::string failure;
  std::vector<Element> reduced_solutions;  // t_i per reduction
  std::function<bool(const Element&)> predicate;
  std::vector<Element> candidates;
  QueryCounters counters;
};

NarrowedCandidates parallel_reduce(const ProblemInstance& inst,
                                   const std::vector<Reduction>& reductions);

}  // namespace sact
