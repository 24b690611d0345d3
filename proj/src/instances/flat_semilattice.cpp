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

#include "instances/perm_util.hpp"
#include "sact/instances.hpp"

namespace sact {

namespace {

// Carrier values: 0 <-> bottom, 1..m <-> atoms s_i, m+1 <-> top.
class FlatMeetSemigroup final : public Semigroup {
 public:
  explicit FlatMeetSemigroup(std::uint64_t m)
      : m_(m), width_(byte_width(m + 1)) {}

  std::uint64_t carrier_size() const override { return m_ + 2; }

  Element compose(const Element& a, const Element& b) const override {
    return make(meet(value(a), value(b)));
  }

  std::optional<Element> unit() const override { return make(m_ + 1); }

  bool is_unit(const Element& s) const override { return value(s) == m_ + 1; }

  Element invert(const Element& s) const override {
    if (!is_unit(s)) throw std::domain_error("invert: element is not a unit");
    return s;
  }

  Element sample(Prng& rng) const override {
    return make(rng.below(m_ + 2));
  }

  Element element_at(std::uint64_t index) const override {
    if (index >= m_ + 2) throw std::out_of_range("element_at");
    return make(index);
  }

  bool commutative() const override { return true; }
  std::size_t element_width() const override { return width_; }
  std::string describe() const override {
    return "flat semilattice with " + std::to_string(m_) + " atoms";
  }

  std::uint64_t meet(std::uint64_t a, std::uint64_t b) const {
    if (a == m_ + 1) return b;
    if (b == m_ + 1) return a;
    return a == b ? a : 0;
  }

  Element make(std::uint64_t v) const { return Element{encode_le(v, width_)}; }
  std::uint64_t value(const Element& e) const { return decode_le(e.bytes); }

 private:
  std::uint64_t m_;
  std::size_t width_;
};

}  // namespace

FlatSemilatticeSystem::FlatSemilatticeSystem(std::uint64_t m,
                                             std::uint64_t seed)
    : m_(m),
      width_(byte_width(m + 1)),
      sg_(std::make_shared<FlatMeetSemigroup>(m)) {
  Prng rng(seed);
  phi_ = detail::random_permutation(m + 2, 0, rng);
  phi_inv_.resize(m + 2);
  for (std::uint64_t v = 0; v < m + 2; ++v) phi_inv_[phi_[v]] = v;
}

std::uint64_t FlatSemilatticeSystem::meet(std::uint64_t a,
                                          std::uint64_t b) const {
  if (a == m_ + 1) return b;
  if (b == m_ + 1) return a;
  return a == b ? a : 0;
}

Point FlatSemilatticeSystem::act(const Element& s, const Point& x) const {
  std::uint64_t v = phi_inv_[decode_le(x.bytes)];
  return Point{encode_le(phi_[meet(decode_le(s.bytes), v)], width_)};
}

Point FlatSemilatticeSystem::sample_point(Prng& rng) const {
  return point_at(rng.below(m_ + 2));
}

Point FlatSemilatticeSystem::point_at(std::uint64_t index) const {
  if (index >= m_ + 2) throw std::out_of_range("point_at");
  return Point{encode_le(index, width_)};
}

Element FlatSemilatticeSystem::zero_element() const {
  return Element{encode_le(0, width_)};
}

Element FlatSemilatticeSystem::top_element() const {
  return Element{encode_le(m_ + 1, width_)};
}

Element FlatSemilatticeSystem::atom(std::uint64_t i) const {
  if (i < 1 || i > m_) throw std::out_of_range("atom");
  return Element{encode_le(i, width_)};
}

Point FlatSemilatticeSystem::origin_point() const {
  return Point{encode_le(phi_[0], width_)};
}

Point FlatSemilatticeSystem::top_point() const {
  return Point{encode_le(phi_[m_ + 1], width_)};
}

std::string FlatSemilatticeSystem::describe() const {
  return "flat semilattice ({0, s_1..s_" + std::to_string(m_) +
         ", 1}, meet) acting through a hidden bijection phi";
}

}  // namespace sact
