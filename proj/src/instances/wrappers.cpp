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
#include <utility>

#include "sact/instances.hpp"

namespace sact {

namespace {

constexpr std::uint64_t kMaxMaterialized = 1000000;

class UnitSubgroupSemigroup final : public Semigroup {
 public:
  UnitSubgroupSemigroup(std::shared_ptr<const Semigroup> base,
                        std::vector<Element> units)
      : base_(std::move(base)), units_(std::move(units)) {}

  std::uint64_t carrier_size() const override { return units_.size(); }
  Element compose(const Element& a, const Element& b) const override {
    return base_->compose(a, b);
  }
  std::optional<Element> unit() const override { return base_->unit(); }
  bool unit_is_adjoined() const override { return base_->unit_is_adjoined(); }
  bool is_unit(const Element&) const override { return true; }
  Element invert(const Element& s) const override { return base_->invert(s); }
  Element sample(Prng& rng) const override {
    return units_[rng.below(units_.size())];
  }
  Element element_at(std::uint64_t index) const override {
    if (index >= units_.size()) throw std::out_of_range("element_at");
    return units_[index];
  }
  bool commutative() const override { return base_->commutative(); }
  std::size_t element_width() const override {
    return base_->element_width();
  }
  std::string describe() const override {
    return "unit group of " + base_->describe();
  }

 private:
  std::shared_ptr<const Semigroup> base_;
  std::vector<Element> units_;
};

class UnitRestrictedSystem final : public ActionSystem {
 public:
  UnitRestrictedSystem(std::shared_ptr<const ActionSystem> base,
                       std::shared_ptr<const Semigroup> units)
      : base_(std::move(base)), sg_(std::move(units)) {}

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
    t.group_action = true;
    return t;
  }
  std::string name() const override { return base_->name() + "-units"; }
  std::string describe() const override {
    return base_->describe() + ", restricted to the unit subgroup";
  }

 private:
  std::shared_ptr<const ActionSystem> base_;
  std::shared_ptr<const Semigroup> sg_;
};

// Acting-side wrapper for a semigroup with an adjoined unit: the fresh unit
// acts as the identity transformation.  Relies on the adjoin_unit encoding
// convention (one trailing tag byte).
class AdjoinedUnitActionSystem final : public ActionSystem {
 public:
  explicit AdjoinedUnitActionSystem(std::shared_ptr<const ActionSystem> base)
      : base_(std::move(base)), sg_(adjoin_unit(base_->semigroup_ptr())) {}

  const Semigroup& semigroup() const override { return *sg_; }
  std::shared_ptr<const Semigroup> semigroup_ptr() const override {
    return sg_;
  }
  std::uint64_t set_size() const override { return base_->set_size(); }
  Point act(const Element& s, const Point& x) const override {
    if (sg_->is_unit(s)) return x;
    return base_->act(Element{s.bytes.substr(0, s.bytes.size() - 1)}, x);
  }
  Point sample_point(Prng& rng) const override {
    return base_->sample_point(rng);
  }
  Point point_at(std::uint64_t index) const override {
    return base_->point_at(index);
  }
  Point base_point() const override { return base_->base_point(); }
  std::size_t point_width() const override { return base_->point_width(); }
  SystemTraits traits() const override { return base_->traits(); }
  std::string name() const override { return base_->name(); }
  std::string describe() const override {
    return base_->describe() + " (unit adjoined)";
  }

 private:
  std::shared_ptr<const ActionSystem> base_;
  std::shared_ptr<const Semigroup> sg_;
};

}  // namespace

std::shared_ptr<const ActionSystem> restrict_to_units(
    std::shared_ptr<const ActionSystem> base) {
  const Semigroup& sg = base->semigroup();
  if (!sg.unit())
    throw std::invalid_argument("restrict_to_units: base is not a monoid");
  if (!sg.carrier_exact() || sg.carrier_size() > kMaxMaterialized)
    throw std::invalid_argument(
        "restrict_to_units: carrier too large to materialize");
  std::vector<Element> units;
  for (std::uint64_t i = 0; i < sg.carrier_size(); ++i) {
    Element e = sg.element_at(i);
    if (sg.is_unit(e)) units.push_back(std::move(e));
  }
  auto usg = std::make_shared<UnitSubgroupSemigroup>(base->semigroup_ptr(),
                                                     std::move(units));
  return std::make_shared<UnitRestrictedSystem>(std::move(base),
                                                std::move(usg));
}

std::shared_ptr<const ActionSystem> ensure_unit(
    std::shared_ptr<const ActionSystem> base) {
  if (base->semigroup().unit()) return base;
  return std::make_shared<AdjoinedUnitActionSystem>(std::move(base));
}

}  // namespace sact
