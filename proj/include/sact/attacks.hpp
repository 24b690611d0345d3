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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sact/action.hpp"

namespace sact {

struct AttackResult {
  std::optional<Element> solution;
  bool verified = false;
  std::string failure;  // nonempty iff no solution
  QueryCounters counters;
  std::uint64_t attempts = 1;
  /// Fraction of semigroup samples that passed the is_unit filter where
  /// unit sampling was needed (BSGS table, rho walks).
  double unit_acceptance = 1.0;

  bool ok() const { return solution.has_value(); }
};

// ---------------------------------------------------------------------------
// Baby-step giant-step: precompute a table of (b_j.y, b_j) for random units
// b_j, then probe random a.x against it; a hit a.x = b_j.y yields
// s = invert(b_j) * a.
// ---------------------------------------------------------------------------
struct BsgsParams {
  std::uint64_t table_size = 0;   // l = |B|
  std::uint64_t probe_count = 0;  // k = |A|
};

/// k = l = ceil(sqrt(n ln 2)), so k*l >= n ln 2 and the success probability
/// is at least 1/2.
BsgsParams balanced_bsgs_plan(std::uint64_t n);

AttackResult bsgs(const ProblemInstance& inst, const BsgsParams& params,
                  std::uint64_t seed);

// ---------------------------------------------------------------------------
// Pollard rho for group actions: two pseudorandom walks
//   a_{i+1} = f(a_i.x) a_i,   b_{j+1} = f(b_j.y) b_j
// with unit step elements, Floyd cycle detection on both, then a scan of the
// b-cycle against the a-cycle meeting point.
// ---------------------------------------------------------------------------
struct WalkConfig {
  /// Number of precomputed unit multipliers; f picks one by hashing the
  /// point encoding (FNV-1a mod step_elements).
  std::uint32_t step_elements = 16;
};

struct RhoParams {
  WalkConfig walk;
  std::uint64_t max_retries = 10;
};

struct RhoOnceResult : AttackResult {
  std::uint64_t a_loop = 0;     // Floyd iterations on the a-walk
  std::uint64_t b_loop = 0;     // Floyd iterations on the b-walk
  std::uint64_t scan_used = 0;  // probes spent in step (2)
};

RhoOnceResult pollard_rho_once(const ProblemInstance& inst,
                               const WalkConfig& walk, std::uint64_t seed);

/// Retries with fresh derived seeds on failure (disjoint loops), up to
/// params.max_retries attempts.  Counters accumulate across attempts.
AttackResult pollard_rho(const ProblemInstance& inst, const RhoParams& params,
                         std::uint64_t seed);

// ---------------------------------------------------------------------------
// Binary search on a min-chain instance.  known_preimage is a = phi^{-1}(x),
// which the worked example supposes known; the instance builder exposes it.
// Uses t.x = t.y  <=>  t <= s, at most 2*(ceil(log2 n) + 1) action queries.
// ---------------------------------------------------------------------------
AttackResult binary_search_min(const ProblemInstance& inst,
                               std::uint64_t known_preimage);

// ---------------------------------------------------------------------------
// Divide and conquer on Sym(X): halve the candidate set for s.x with probes
// c.y = y where c fixes exactly the kept half, then resolve the final pair
// with one cross probe a.x = y.  Rounds are reported in counters.wall_steps.
// ---------------------------------------------------------------------------
AttackResult symmetric_fixedpoint_search(const ProblemInstance& inst);

// ---------------------------------------------------------------------------
// Unit filter: decide whether y lies in the unit-subgroup orbit S^*.x and if
// so restrict the instance to the action of S^*.
// ---------------------------------------------------------------------------
enum class UnitFilterStatus { restricted, not_in_unit_orbit, inconclusive };

struct UnitFilterResult {
  UnitFilterStatus status = UnitFilterStatus::inconclusive;
  std::optional<ProblemInstance> restricted;
  QueryCounters counters;
  std::uint64_t probes = 0;
};

UnitFilterResult unit_filter(const ProblemInstance& inst, std::uint64_t budget,
                             std::uint64_t seed);

// ---------------------------------------------------------------------------
// Exhaustive scan in canonical element order; the ground-truth oracle.
// ---------------------------------------------------------------------------
AttackResult exhaustive(const ProblemInstance& inst);

/// All solutions, for oracle-equivalence tests.
std::vector<Element> exhaustive_solutions(const ProblemInstance& inst);

}  // namespace sact
