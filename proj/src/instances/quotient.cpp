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

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sact/instances.hpp"

namespace sact {

namespace {

constexpr std::uint64_t kMaxSubgroup = 10000;
constexpr std::uint64_t kMaxMaterialized = 100000;

std::vector<Element> close_subgroup(const Semigroup& sg,
                                    const std::vector<Element>& gens) {
  auto unit = sg.unit();
  if (!unit)
    throw std::invalid_argument("build_quotient: base must be a monoid");
  for (const auto& g : gens) {
    if (!sg.is_unit(g))
      throw std::invalid_argument("build_quotient: generator is not a unit");
  }
  std::set<Element> members{*unit};
  std::vector<Element> frontier{*unit};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& e : frontier) {
      for (const auto& g : gens) {
        Element prod = sg.compose(e, g);
        if (members.insert(prod).second) {
          next.push_back(prod);
          if (members.size() > kMaxSubgroup)
            throw std::invalid_argument(
                "build_quotient: subgroup closure exceeds desk-scale bound");
        }
      }
    }
    frontier = std::move(next);
  }
  // A finite set of units closed under multiplication contains inverses.
  return {members.begin(), members.end()};
}

}  // namespace

// Classes sH of the base monoid, materialized.  Representative = minimum
// encoding in the class.
class QuotientSemigroup final : public Semigroup {
 public:
  QuotientSemigroup(std::shared_ptr<const Semigroup> base,
                    std::vector<Element> subgroup)
      : base_(std::move(base)), subgroup_(std::move(subgroup)) {
    if (!base_->carrier_exact() || base_->carrier_size() > kMaxMaterialized)
      throw std::invalid_argument(
          "build_quotient: base carrier too large to materialize");
    std::set<Element> reps;
    for (std::uint64_t i = 0; i < base_->carrier_size(); ++i)
      reps.insert(canonical(base_->element_at(i)));
    reps_.assign(reps.begin(), reps.end());
  }

  Element canonical(const Element& s) const {
    Element best = base_->compose(s, subgroup_.front());
    for (std::size_t i = 1; i < subgroup_.size(); ++i) {
      Element cand = base_->compose(s, subgroup_[i]);
      if (cand.bytes < best.bytes) best = cand;
    }
    return best;
  }

  std::uint64_t carrier_size() const override { return reps_.size(); }

  Element compose(const Element& a, const Element& b) const override {
    return canonical(base_->compose(a, b));
  }

  std::optional<Element> unit() const override {
    return canonical(*base_->unit());
  }

  bool is_unit(const Element& s) const override { return base_->is_unit(s); }

  Element invert(const Element& s) const override {
    return canonical(base_->invert(s));
  }

  Element sample(Prng& rng) const override {
    return reps_[rng.below(reps_.size())];
  }

  Element element_at(std::uint64_t index) const override {
    if (index >= reps_.size()) throw std::out_of_range("element_at");
    return reps_[index];
  }

  bool commutative() const override { return base_->commutative(); }
  std::size_t element_width() const override {
    return base_->element_width();
  }
  std::string describe() const override {
    return base_->describe() + " / H (|H| = " +
           std::to_string(subgroup_.size()) + ")";
  }

  const std::vector<Element>& subgroup() const { return subgroup_; }

 private:
  std::shared_ptr<const Semigroup> base_;
  std::vector<Element> subgroup_;
  std::vector<Element> reps_;
};

QuotientSystem::QuotientSystem(std::shared_ptr<const ActionSystem> base,
                               std::vector<Element> unit_generators)
    : base_(std::move(base)) {
  if (!base_->semigroup().commutative())
    throw std::invalid_argument(
        "build_quotient: base must be a commutative monoid action");
  auto subgroup = close_subgroup(base_->semigroup(), unit_generators);
  sg_ = std::make_shared<QuotientSemigroup>(base_->semigroup_ptr(),
                                            std::move(subgroup));
  if (base_->set_size() > kMaxMaterialized)
    throw std::invalid_argument(
        "build_quotient: base point set too large to materialize");
  std::set<Point> reps;
  for (std::uint64_t i = 0; i < base_->set_size(); ++i)
    reps.insert(canonical_point(base_->point_at(i)));
  orbit_reps_.assign(reps.begin(), reps.end());
}

const std::vector<Element>& QuotientSystem::subgroup() const {
  return static_cast<const QuotientSemigroup&>(*sg_).subgroup();
}

Point QuotientSystem::canonical_point(const Point& x) const {
  const auto& H = subgroup();
  Point best = base_->act(H.front(), x);
  for (std::size_t i = 1; i < H.size(); ++i) {
    Point cand = base_->act(H[i], x);
    if (cand.bytes < best.bytes) best = cand;
  }
  return best;
}

Element QuotientSystem::canonical_element(const Element& s) const {
  return static_cast<const QuotientSemigroup&>(*sg_).canonical(s);
}

std::vector<Point> QuotientSystem::orbit_of(const Point& x) const {
  std::set<Point> orbit;
  for (const auto& h : subgroup()) orbit.insert(base_->act(h, x));
  return {orbit.begin(), orbit.end()};
}

std::uint64_t QuotientSystem::set_size() const { return orbit_reps_.size(); }

Point QuotientSystem::act(const Element& s, const Point& x) const {
  return canonical_point(base_->act(s, x));
}

Point QuotientSystem::sample_point(Prng& rng) const {
  return orbit_reps_[rng.below(orbit_reps_.size())];
}

Point QuotientSystem::point_at(std::uint64_t index) const {
  if (index >= orbit_reps_.size()) throw std::out_of_range("point_at");
  return orbit_reps_[index];
}

Point QuotientSystem::base_point() const {
  return canonical_point(base_->base_point());
}

std::size_t QuotientSystem::point_width() const {
  return base_->point_width();
}

SystemTraits QuotientSystem::traits() const {
  SystemTraits t = base_->traits();
  t.free = false;  // H-orbits typically merge stabilizer cosets
  return t;
}

std::string QuotientSystem::describe() const {
  return base_->describe() + ", reduced by a unit subgroup of order " +
         std::to_string(subgroup().size());
}

}  // namespace sact
