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

ModMulSystem::ModMulSystem(std::uint64_t n)
    : n_(n), sg_(std::make_shared<ZnMulSemigroup>(n)) {}

Point ModMulSystem::make_point(std::uint64_t value) const {
  return Point{encode_le(value % n_, point_width())};
}

std::uint64_t ModMulSystem::point_value(const Point& p) const {
  return decode_le(p.bytes);
}

Point ModMulSystem::act(const Element& s, const Point& x) const {
  return make_point(mulmod(sg_->value(s), point_value(x), n_));
}

Point ModMulSystem::sample_point(Prng& rng) const {
  return make_point(rng.below(n_));
}

Point ModMulSystem::point_at(std::uint64_t index) const {
  if (index >= n_) throw std::out_of_range("point_at");
  return make_point(index);
}

Point ModMulSystem::base_point() const { return make_point(1); }

std::size_t ModMulSystem::point_width() const {
  return byte_width(n_ - 1);
}

std::string ModMulSystem::describe() const {
  return "(Z_" + std::to_string(n_) + ", *) acting on Z_" +
         std::to_string(n_) + " by multiplication";
}

}  // namespace sact
