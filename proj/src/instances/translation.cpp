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

#include "sact/instances.hpp"

namespace sact {

namespace {

/// The cyclic group <g> of order n inside Z_p^*, elements stored as their
/// residues.  Inverses are e^(n-1), which stays inside the subgroup.
class CyclicSubgroupSemigroup final : public Semigroup {
 public:
  CyclicSubgroupSemigroup(std::uint64_t p, std::uint64_t n, std::uint64_t g)
      : p_(p), n_(n), g_(g), width_(byte_width(p - 1)) {}

  std::uint64_t carrier_size() const override { return n_; }

  Element compose(const Element& a, const Element& b) const override {
    return make(mulmod(value(a), value(b), p_));
  }

  std::optional<Element> unit() const override { return make(1); }

  bool is_unit(const Element& s) const override {
    return powmod(value(s), n_, p_) == 1;  // subgroup membership
  }

  Element invert(const Element& s) const override {
    if (!is_unit(s)) throw std::domain_error("invert: not in the subgroup");
    return make(powmod(value(s), n_ - 1, p_));
  }

  Element sample(Prng& rng) const override {
    return make(powmod(g_, rng.below(n_), p_));
  }

  Element element_at(std::uint64_t index) const override {
    if (index >= n_) throw std::out_of_range("element_at");
    return make(powmod(g_, index, p_));
  }

  bool commutative() const override { return true; }
  std::size_t element_width() const override { return width_; }
  std::string describe() const override {
    return "<" + std::to_string(g_) + "> of order " + std::to_string(n_) +
           " in Z_" + std::to_string(p_) + "^*";
  }

  Element make(std::uint64_t v) const { return Element{encode_le(v, width_)}; }
  std::uint64_t value(const Element& e) const { return decode_le(e.bytes); }

 private:
  std::uint64_t p_, n_, g_;
  std::size_t width_;
};

}  // namespace

TranslationSystem::TranslationSystem(std::uint64_t p, std::uint64_t n,
                                     std::uint64_t g)
    : p_(p),
      n_(n),
      g_(g % p),
      sg_(std::make_shared<CyclicSubgroupSemigroup>(p, n, g % p)) {}

Point TranslationSystem::act(const Element& s, const Point& x) const {
  return Point{
      encode_le(mulmod(decode_le(s.bytes), decode_le(x.bytes), p_),
                point_width())};
}

Point TranslationSystem::sample_point(Prng& rng) const {
  return point_at(rng.below(n_));
}

Point TranslationSystem::point_at(std::uint64_t index) const {
  if (index >= n_) throw std::out_of_range("point_at");
  return Point{encode_le(powmod(g_, index, p_), point_width())};
}

Point TranslationSystem::base_point() const {
  return Point{encode_le(1, point_width())};
}

std::size_t TranslationSystem::point_width() const {
  return byte_width(p_ - 1);
}

std::string TranslationSystem::describe() const {
  return "cyclic group <" + std::to_string(g_) + "> of order " +
         std::to_string(n_) + " in Z_" + std::to_string(p_) +
         "^* acting on itself by multiplication";
}

}  // namespace sact
