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

#include "sact/model.hpp"

namespace sact {

namespace {

struct OperationBudgetExceeded {};

class ModelState final : public ModelView {
 public:
  ModelState(std::shared_ptr<const ActionSystem> system, const Element& s,
             std::uint64_t adversary_seed, const ModelLimits& limits,
             bool log_equalities)
      : system_(std::move(system)),
        limits_(limits),
        log_(log_equalities),
        rng_(adversary_seed),
        x_(system_->base_point()) {
    const Semigroup& sg = system_->semigroup();
    Element unit = *sg.unit();
    // V1 = [1] and V2 = [s], stored as the points x and s.x.
    vars_.push_back(Var{system_->act(unit, x_), unit, false});
    vars_.push_back(Var{system_->act(s, x_), unit, true});
    target_ = vars_[1].value;
  }

  Handle apply(const Element& a, Handle src) override {
    if (extracted_)
      throw std::logic_error("model: apply after extract");
    if (src >= vars_.size()) throw std::out_of_range("model: bad handle");
    if (operations_ >= limits_.max_operations) throw OperationBudgetExceeded{};
    ++operations_;
    const Var& v = vars_[src];
    Var next;
    next.value = system_->act(a, v.value);
    next.applied = system_->semigroup().compose(a, v.applied);
    next.from_v2 = v.from_v2;
    vars_.push_back(std::move(next));
    return static_cast<Handle>(vars_.size() - 1);
  }

  bool query_equal(Handle a, Handle b) override {
    if (a >= vars_.size() || b >= vars_.size())
      throw std::out_of_range("model: bad handle");
    ++equality_queries_;
    bool eq = vars_[a].value == vars_[b].value;
    if (log_) {
      log_events_.push_back(EqualityEvent{vars_[a].from_v2, vars_[b].from_v2,
                                          vars_[a].applied, vars_[b].applied,
                                          eq});
    }
    return eq;
  }

  void extract(const Element& guess) override {
    if (extracted_) throw std::logic_error("model: double extract");
    extracted_ = true;
    success_ = system_->act(guess, x_) == target_;
  }

  std::uint64_t operations() const override { return operations_; }
  const ActionSystem& system() const override { return *system_; }
  const Point& base_x() const override { return x_; }
  Prng& rng() override { return rng_; }

  bool extracted_flag() const { return extracted_; }
  bool success_flag() const { return success_; }
  std::uint64_t equality_queries() const { return equality_queries_; }
  std::vector<EqualityEvent> take_log() { return std::move(log_events_); }

 private:
  struct Var {
    Point value;
    Element applied;  // product of all elements applied on this lineage
    bool from_v2 = false;
  };

  std::shared_ptr<const ActionSystem> system_;
  ModelLimits limits_;
  bool log_;
  Prng rng_;
  Point x_;
  Point target_;
  std::vector<Var> vars_;
  std::uint64_t operations_ = 0;
  std::uint64_t equality_queries_ = 0;
  bool extracted_ = false;
  bool success_ = false;
  std::vector<EqualityEvent> log_events_;
};

}  // namespace

ModelRunResult run_adversary(std::shared_ptr<const ActionSystem> system,
                             Adversary& adversary, std::uint64_t seed,
                             const ModelLimits& limits, bool log_equalities) {
  SystemTraits traits = system->traits();
  if (!traits.group_action || !traits.transitive)
    throw std::invalid_argument(
        "run_adversary: the model needs a transitive group action");
  if (!system->semigroup().unit())
    throw std::invalid_argument("run_adversary: acting group has no unit");

  // Hidden s uniform over the carrier; for free (and for constant-fiber)
  // actions this is uniform over the classes of ~x as well.
  Prng hidden_rng = Prng::stream(seed, 0);
  Element s = system->semigroup().sample(hidden_rng);

  ModelRunResult result;
  result.hidden = s;
  ModelState state(system, s, splitmix64_mix(seed ^ 0xAD5E7ABCDULL), limits,
                   log_equalities);
  try {
    adversary.run(state);
  } catch (const OperationBudgetExceeded&) {
    result.budget_exceeded = true;
  }
  result.extracted = state.extracted_flag();
  result.success = state.success_flag() && !result.budget_exceeded;
  result.operations = state.operations();
  result.equality_queries = state.equality_queries();
  result.equality_log = state.take_log();
  return result;
}

StabilizerCheckReport stabilizer_conjugation_check(
    std::shared_ptr<const ActionSystem> system, std::uint64_t trials,
    std::uint64_t seed) {
  const Semigroup& sg = system->semigroup();
  if (!system->traits().group_action)
    throw std::invalid_argument(
        "stabilizer_conjugation_check: needs a group action");

  StabilizerCheckReport report;
  Prng rng(seed);
  Point x = system->base_point();
  for (std::uint64_t i = 0; i < trials; ++i) {
    ++report.trials;
    // Find a stabilizer element by rejection; the unit always works, so a
    // miss just degrades to the trivial check.
    Element t = *sg.unit();
    for (int tries = 0; tries < 256; ++tries) {
      Element cand = sg.sample(rng);
      if (system->act(cand, x) == x) {
        t = std::move(cand);
        break;
      }
    }
    Element s = sg.sample(rng);
    Element conj = sg.compose(s, sg.compose(t, sg.invert(s)));
    ++report.checked;
    if (!(system->act(conj, x) == x)) {
      ++report.violations;
      if (!report.example) report.example = {{s, t}};
    }
  }
  return report;
}

}  // namespace sact
