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

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sact/instances.hpp"

namespace sact::detail {

/// A materialized subsemigroup of a base semigroup (e.g. the right ideal mS),
/// carrier stored sorted by encoding.  Unit and inverses are recomputed
/// relative to the sub-carrier, by scan, which is fine at desk scale.
class MaterializedSubsemigroup final : public Semigroup {
 public:
  MaterializedSubsemigroup(std::shared_ptr<const Semigroup> base,
                           std::vector<Element> carrier, std::string label)
      : base_(std::move(base)),
        carrier_(std::move(carrier)),
        label_(std::move(label)) {
    std::sort(carrier_.begin(), carrier_.end());
    if (auto u = base_->unit(); u && contains(*u)) unit_ = *u;
  }

  std::uint64_t carrier_size() const override { return carrier_.size(); }

  Element compose(const Element& a, const Element& b) const override {
    return base_->compose(a, b);
  }

  std::optional<Element> unit() const override { return unit_; }

  bool is_unit(const Element& s) const override {
    if (!unit_) return false;
    for (const auto& t : carrier_) {
      if (base_->compose(s, t) == *unit_ && base_->compose(t, s) == *unit_)
        return true;
    }
    return false;
  }

  Element invert(const Element& s) const override {
    if (unit_) {
      for (const auto& t : carrier_) {
        if (base_->compose(s, t) == *unit_ && base_->compose(t, s) == *unit_)
          return t;
      }
    }
    throw std::domain_error("invert: element is not a unit of the subsemigroup");
  }

  Element sample(Prng& rng) const override {
    return carrier_[rng.below(carrier_.size())];
  }

  Element element_at(std::uint64_t index) const override {
    if (index >= carrier_.size()) throw std::out_of_range("element_at");
    return carrier_[index];
  }

  bool commutative() const override { return base_->commutative(); }
  std::size_t element_width() const override {
    return base_->element_width();
  }
  std::string describe() const override { return label_; }

  bool contains(const Element& e) const {
    return std::binary_search(carrier_.begin(), carrier_.end(), e);
  }

 private:
  std::shared_ptr<const Semigroup> base_;
  std::vector<Element> carrier_;
  std::string label_;
  std::optional<Element> unit_;
};

/// The base action restricted to a materialized subsemigroup; the point set
/// is unchanged.
class SubActionSystem final : public ActionSystem {
 public:
  SubActionSystem(std::shared_ptr<const ActionSystem> base,
                  std::shared_ptr<const Semigroup> sub, std::string name)
      : base_(std::move(base)), sg_(std::move(sub)), name_(std::move(name)) {}

  const Semigroup& semigroup() const override { return *sg_; }
  std::shared_ptr<const Semigroup> semigroup_ptr() const override {
    return sg_;
  }
  std::uint64_t set_size() const override { return base_->set_size(); }
  Point act(const Element& s, const Point& x) const override {
    return base_->act(s, x);
  }
  Point sample_point(Prng& rng) const override {
    return base_->sample_point(rng);
  }
  Point point_at(std::uint64_t index) const override {
    return base_->point_at(index);
  }
  Point base_point() const override { return base_->base_point(); }
  std::size_t point_width() const override { return base_->point_width(); }
  SystemTraits traits() const override {
    SystemTraits t = base_->traits();
    t.group_action = false;
    t.transitive = false;
    t.free = false;
    return t;
  }
  std::string name() const override { return name_; }
  std::string describe() const override {
    return sg_->describe() + " acting within " + base_->describe();
  }

 private:
  std::shared_ptr<const ActionSystem> base_;
  std::shared_ptr<const Semigroup> sg_;
  std::string name_;
};

}  // namespace sact::detail
