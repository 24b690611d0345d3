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
#include <stdexcept>

#include "instances/perm_util.hpp"
#include "sact/instances.hpp"

namespace sact {

namespace {

/// ({1..n}, min).  n is the neutral element and the only unit.
class MinSemigroup final : public Semigroup {
 public:
  explicit MinSemigroup(std::uint64_t n) : n_(n), width_(byte_width(n)) {}

  std::uint64_t carrier_size() const override { return n_; }

  Element compose(const Element& a, const Element& b) const override {
    return make(std::min(value(a), value(b)));
  }

  std::optional<Element> unit() const override { return make(n_); }

  bool is_unit(const Element& s) const override { return value(s) == n_; }

  Element invert(const Element& s) const override {
    if (!is_unit(s)) throw std::domain_error("invert: element is not a unit");
    return s;
  }

  Element sample(Prng& rng) const override { return make(rng.below(n_) + 1); }

  Element element_at(std::uint64_t index) const override {
    if (index >= n_) throw std::out_of_range("element_at");
    return make(index + 1);
  }

  bool commutative() const override { return true; }
  std::size_t element_width() const override { return width_; }
  std::string describe() const override {
    return "({1.." + std::to_string(n_) + "}, min)";
  }

  Element make(std::uint64_t v) const { return Element{encode_le(v, width_)}; }
  std::uint64_t value(const Element& e) const { return decode_le(e.bytes); }

 private:
  std::uint64_t n_;
  std::size_t width_;
};

}  // namespace

MinChainSystem::MinChainSystem(std::uint64_t n, std::uint64_t seed)
    : n_(n), width_(byte_width(n)), sg_(std::make_shared<MinSemigroup>(n)) {
  Prng rng(seed);
  phi_ = detail::random_permutation(n, 1, rng);
  phi_inv_.resize(n);
  for (std::uint64_t t = 0; t < n; ++t) phi_inv_[phi_[t] - 1] = t + 1;
}

MinChainSystem::MinChainSystem(std::uint64_t n, std::vector<std::uint32_t> phi)
    : n_(n),
      width_(byte_width(n)),
      phi_(std::move(phi)),
      sg_(std::make_shared<MinSemigroup>(n)) {
  if (phi_.size() != n)
    throw std::invalid_argument("MinChainSystem: phi size mismatch");
  phi_inv_.assign(n, 0);
  for (std::uint64_t t = 0; t < n; ++t) {
    if (phi_[t] < 1 || phi_[t] > n || phi_inv_[phi_[t] - 1] != 0)
      throw std::invalid_argument("MinChainSystem: phi is not a permutation");
    phi_inv_[phi_[t] - 1] = t + 1;
  }
}

Element MinChainSystem::chain_element(std::uint64_t value) const {
  if (value < 1 || value > n_)
    throw std::out_of_range("chain_element: value outside {1..n}");
  return Element{encode_le(value, width_)};
}

std::uint64_t MinChainSystem::element_value(const Element& e) const {
  return decode_le(e.bytes);
}

Point MinChainSystem::act(const Element& s, const Point& x) const {
  std::uint64_t label = decode_le(x.bytes);
  std::uint64_t t = phi_inv_[label - 1];
  std::uint64_t m = std::min(decode_le(s.bytes), t);
  return Point{encode_le(phi_[m - 1], width_)};
}

Point MinChainSystem::sample_point(Prng& rng) const {
  return point_at(rng.below(n_));
}

Point MinChainSystem::point_at(std::uint64_t index) const {
  if (index >= n_) throw std::out_of_range("point_at");
  return Point{encode_le(index + 1, width_)};
}

Point MinChainSystem::phi_point(std::uint64_t t) const {
  if (t < 1 || t > n_) throw std::out_of_range("phi_point");
  return Point{encode_le(phi_[t - 1], width_)};
}

std::uint64_t MinChainSystem::phi_preimage(const Point& x) const {
  return phi_inv_[decode_le(x.bytes) - 1];
}

std::string MinChainSystem::describe() const {
  return "({1.." + std::to_string(n_) +
         "}, min) acting through a hidden bijection phi";
}

}  // namespace sact
