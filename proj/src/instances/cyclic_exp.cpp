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

CyclicExpSystem::CyclicExpSystem(std::uint64_t p, std::uint64_t n,
                                 std::uint64_t g)
    : p_(p),
      n_(n),
      g_(g % p),
      point_width_(byte_width(p - 1)),
      sg_(std::make_shared<ZnMulSemigroup>(n)) {}

Point CyclicExpSystem::make_point(std::uint64_t value) const {
  return Point{encode_le(value % p_, point_width_)};
}

std::uint64_t CyclicExpSystem::point_value(const Point& p) const {
  return decode_le(p.bytes);
}

Point CyclicExpSystem::act(const Element& s, const Point& x) const {
  return make_point(powmod(point_value(x), sg_->value(s), p_));
}

Point CyclicExpSystem::sample_point(Prng& rng) const {
  return point_at(rng.below(n_));
}

Point CyclicExpSystem::point_at(std::uint64_t index) const {
  if (index >= n_) throw std::out_of_range("point_at");
  return make_point(powmod(g_, index, p_));
}

std::string CyclicExpSystem::describe() const {
  return "(Z_" + std::to_string(n_) + ", *) acting on the order-" +
         std::to_string(n_) + " subgroup <" + std::to_string(g_) +
         "> of Z_" + std::to_string(p_) + "^* by s.h = h^s";
}

}  // namespace sact
