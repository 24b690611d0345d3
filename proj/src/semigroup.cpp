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

#include "sact/semigroup.hpp"

#include <stdexcept>

namespace sact {

namespace {

class AdjoinedUnitSemigroup final : public Semigroup {
 public:
  explicit AdjoinedUnitSemigroup(std::shared_ptr<const Semigroup> base)
      : base_(std::move(base)), width_(base_->element_width() + 1) {
    if (base_->unit())
      throw std::invalid_argument("adjoin_unit: base already has a unit");
    if (!base_->carrier_exact())
      throw std::invalid_argument("adjoin_unit: base carrier not enumerable");
  }

  std::uint64_t carrier_size() const override {
    return base_->carrier_size() + 1;
  }

  Element compose(const Element& a, const Element& b) const override {
    if (is_adjoined(a)) return b;
    if (is_adjoined(b)) return a;
    return wrap(base_->compose(unwrap(a), unwrap(b)));
  }

  std::optional<Element> unit() const override { return unit_element(); }
  bool unit_is_adjoined() const override { return true; }

  // The adjoined unit is fresh, so nothing else can be invertible.
  bool is_unit(const Element& s) const override { return is_adjoined(s); }

  Element invert(const Element& s) const override {
    if (!is_adjoined(s))
      throw std::domain_error("invert: element is not a unit");
    return s;
  }

  Element sample(Prng& rng) const override {
    std::uint64_t i = rng.below(carrier_size());
    if (i == base_->carrier_size()) return unit_element();
    return wrap(base_->element_at(i));
  }

  Element element_at(std::uint64_t index) const override {
    if (index == base_->carrier_size()) return unit_element();
    return wrap(base_->element_at(index));
  }

  bool commutative() const override { return base_->commutative(); }
  std::size_t element_width() const override { return width_; }
  std::string describe() const override {
    return base_->describe() + " with adjoined unit";
  }

  Element wrap(const Element& e) const {
    return Element{e.bytes + std::string(1, '\0')};
  }
  Element unwrap(const Element& e) const {
    return Element{e.bytes.substr(0, width_ - 1)};
  }
  bool is_adjoined(const Element& e) const {
    return e.bytes.back() == '\x01';
  }
  Element unit_element() const {
    std::string b(width_, '\0');
    b.back() = '\x01';
    return Element{b};
  }

 private:
  std::shared_ptr<const Semigroup> base_;
  std::size_t width_;
};

}  // namespace

std::shared_ptr<const Semigroup> adjoin_unit(
    std::shared_ptr<const Semigroup> base) {
  return std::make_shared<AdjoinedUnitSemigroup>(std::move(base));
}

}  // namespace sact
