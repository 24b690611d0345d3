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
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sact/action.hpp"

namespace sact {

// Abstract model of computation over M = S/~x, realized through points of
// the orbit: the class [s] is represented by the point s.x, which is sound
// because s ~x t iff s.x = t.x.  State variables hold points the adversary
// can never read; it only applies Phi_a, asks equality, and finally
// extracts a guess.  Operation applications count toward m; equality
// queries are free.

struct ModelLimits {
  std::uint64_t max_operations = 1 << 20;
};

/// Equality query between two state variables, with the provenance needed
/// to classify collisions: each variable is a known element applied to
/// either V1 = [1] or V2 = [s].
struct EqualityEvent {
  bool lhs_from_v2 = false;
  bool rhs_from_v2 = false;
  Element lhs_element;
  Element rhs_element;
  bool equal = false;
};

struct ModelRunResult {
  bool success = false;
  bool extracted = false;
  bool budget_exceeded = false;
  std::uint64_t operations = 0;        // m
  std::uint64_t equality_queries = 0;  // not counted toward m
  Element hidden;                      // harness-side record of s
  std::vector<EqualityEvent> equality_log;  // filled when logging enabled
};

class ModelView {
 public:
  using Handle = std::uint32_t;
  static constexpr Handle kV1 = 0;  // [1], the point x
  static constexpr Handle kV2 = 1;  // [s], the point s.x

  virtual ~ModelView() = default;

  /// V_new = Phi_a(V_src).  Counts one operation; throws past the ceiling.
  virtual Handle apply(const Element& a, Handle src) = 0;

  /// Free relation query.
  virtual bool query_equal(Handle a, Handle b) = 0;

  /// Terminal: accepted iff [guess] = [s], i.e. guess.x = s.x.
  virtual void extract(const Element& guess) = 0;

  virtual std::uint64_t operations() const = 0;
  virtual const ActionSystem& system() const = 0;
  virtual const Point& base_x() const = 0;
  virtual Prng& rng() = 0;
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual void run(ModelView& view) = 0;
  virtual std::string name() const = 0;
};

/// Draws the hidden s uniformly, initializes V1 = [1] and V2 = [s], runs the
/// adversary, and scores the extraction.  Requires a transitive group
/// action; whether the m^2/(4n) bound applies additionally needs the
/// abelian-or-free declaration (reported by bound experiments, not enforced
/// here, so hypothesis-necessity demos can run).
ModelRunResult run_adversary(std::shared_ptr<const ActionSystem> system,
                             Adversary& adversary, std::uint64_t seed,
                             const ModelLimits& limits = {},
                             bool log_equalities = false);

// ---------------------------------------------------------------------------
// Stock adversaries
// ---------------------------------------------------------------------------

/// Extracts element_at(0) without any operation; success 1/n.
std::unique_ptr<Adversary> make_fixed_guess_adversary();

/// Extracts a uniformly sampled element; success 1/n.
std::unique_ptr<Adversary> make_blind_guess_adversary();

/// u applications a_i.[1] and v applications b_j.[s] with unit b_j; on a
/// cross collision extracts invert(b_j) a_i, else falls back to a blind
/// guess.  The balanced split u = floor(m/2) is the best collision strategy.
std::unique_ptr<Adversary> make_collision_adversary(std::uint64_t u,
                                                    std::uint64_t v);

/// Divide-and-conquer on Sym(X) using c.[s] = [s] probes with c fixing half
/// of the candidate set; O(log n) operations.
std::unique_ptr<Adversary> make_sym_fixedpoint_adversary();

struct AdversaryInfo {
  std::string name;
  std::string summary;
};
std::vector<AdversaryInfo> list_adversaries();

/// Factory by name with an operation budget m ("fixed-guess", "blind",
/// "collision", "sym-fixedpoint").
std::unique_ptr<Adversary> make_adversary(const std::string& name,
                                          std::uint64_t m);

// ---------------------------------------------------------------------------
// Stabilizer conjugation
// ---------------------------------------------------------------------------

/// Samples s and stabilizer elements t of x and tests whether s t s^{-1}
/// still stabilizes x.  Abelian or free actions must show no violation;
/// for others the search is expected to find one.
struct StabilizerCheckReport {
  std::uint64_t trials = 0;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::optional<std::pair<Element, Element>> example;  // (s, t) violating
};

StabilizerCheckReport stabilizer_conjugation_check(
    std::shared_ptr<const ActionSystem> system, std::uint64_t trials,
    std::uint64_t seed);

}  // namespace sact
