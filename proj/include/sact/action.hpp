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
#include <memory>
#include <optional>
#include <string>

#include "sact/bytes.hpp"
#include "sact/counters.hpp"
#include "sact/prng.hpp"
#include "sact/semigroup.hpp"

namespace sact {

/// Declared structural properties of an action.  Spot-checked on
/// registration where cheap, never proven.
struct SystemTraits {
  bool group_action = false;    // every carrier element is a unit
  bool transitive = false;      // single orbit
  bool free = false;            // trivial stabilizers
  bool abelian = false;         // the acting semigroup is commutative
};

// A finite semigroup action S x X -> X with canonical point encodings.
// Immutable after construction; operations are pure given the Prng.
class ActionSystem {
 public:
  virtual ~ActionSystem() = default;

  virtual const Semigroup& semigroup() const = 0;
  virtual std::shared_ptr<const Semigroup> semigroup_ptr() const = 0;

  virtual std::uint64_t set_size() const = 0;

  virtual Point act(const Element& s, const Point& x) const = 0;

  virtual Point sample_point(Prng& rng) const = 0;

  /// index -> point, a bijection onto X for index < set_size().
  virtual Point point_at(std::uint64_t index) const = 0;

  /// Conventional starting point for problem instances (the generator for
  /// exponentiation systems, the top of the chain for min-chain, e for the
  /// flat semilattice).
  virtual Point base_point() const = 0;

  virtual std::size_t point_width() const = 0;

  virtual SystemTraits traits() const = 0;

  virtual std::string name() const = 0;
  virtual std::string describe() const = 0;

  /// CLI-facing point parsing/formatting.  Default: decimal value of the
  /// little-endian encoding.
  virtual std::optional<Point> parse_point(const std::string& text) const;
  virtual std::string format_point(const Point& p) const;
  virtual std::optional<Element> parse_element(const std::string& text) const;
  virtual std::string format_element(const Element& e) const;
};

/// A problem instance y = s.x.  The witness is harness-only: it exists so
/// tests can cross-check results, and no attack reads it.
struct ProblemInstance {
  std::shared_ptr<const ActionSystem> system;
  Point x;
  Point y;
  std::optional<Element> witness;
};

struct Solution {
  Element s;
  bool verified = false;
};

/// Re-evaluates the action to set the verified flag.
Solution verify_solution(const ProblemInstance& inst, const Element& s);

/// x = base point, witness = uniform element.
ProblemInstance sample_instance(std::shared_ptr<const ActionSystem> system,
                                Prng& rng);

/// x = uniform point, witness = uniform element.
ProblemInstance sample_instance_random_x(
    std::shared_ptr<const ActionSystem> system, Prng& rng);

struct DhTranscript {
  Element alice_secret;
  Element bob_secret;
  Point alice_sends;  // a.x
  Point bob_sends;    // b.x
  Point alice_key;    // a.(b.x)
  Point bob_key;      // b.(a.x)
};

/// Two-party key agreement over a commutative action.  Throws
/// std::invalid_argument when the semigroup is not declared commutative.
DhTranscript dh_simulate(const ActionSystem& system, const Point& x,
                         std::uint64_t seed);

/// Same, with the secrets pinned (used by tests and worked examples).
DhTranscript dh_with(const ActionSystem& system, const Point& x,
                     const Element& a, const Element& b);

/// Counting facade: attacks route every semigroup/action/equality call
/// through one of these so QueryCounters stay exact.
class CountingAction {
 public:
  CountingAction(const ActionSystem& system, QueryCounters& counters)
      : system_(system), counters_(counters) {}

  Point act(const Element& s, const Point& x) {
    ++counters_.action_queries;
    return system_.act(s, x);
  }
  Element compose(const Element& a, const Element& b) {
    ++counters_.compositions;
    return system_.semigroup().compose(a, b);
  }
  Element invert(const Element& s) {
    ++counters_.inversions;
    return system_.semigroup().invert(s);
  }
  bool points_equal(const Point& a, const Point& b) {
    ++counters_.equality_tests;
    return a == b;
  }
  bool elements_equal(const Element& a, const Element& b) {
    ++counters_.equality_tests;
    return a == b;
  }
  void count_equality() { ++counters_.equality_tests; }
  void count_table_entry() { ++counters_.table_entries; }
  void step() { ++counters_.wall_steps; }

  const ActionSystem& system() const { return system_; }
  QueryCounters& counters() { return counters_; }

 private:
  const ActionSystem& system_;
  QueryCounters& counters_;
};

}  // namespace sact
