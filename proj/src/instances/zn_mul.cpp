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

ZnMulSemigroup::ZnMulSemigroup(std::uint64_t n)
    : n_(n), width_(byte_width(n > 0 ? n - 1 : 0)) {
  if (n < 2) throw std::invalid_argument("ZnMulSemigroup: modulus must be >= 2");
}

Element ZnMulSemigroup::make(std::uint64_t value) const {
  return Element{encode_le(value % n_, width_)};
}

std::uint64_t ZnMulSemigroup::value(const Element& e) const {
  return decode_le(e.bytes);
}

Element ZnMulSemigroup::compose(const Element& a, const Element& b) const {
  return make(mulmod(value(a), value(b), n_));
}

std::optional<Element> ZnMulSemigroup::unit() const { return make(1); }

bool ZnMulSemigroup::is_unit(const Element& s) const {
  return gcd_u64(value(s), n_) == 1;
}

Element ZnMulSemigroup::invert(const Element& s) const {
  auto inv = inverse_mod(value(s), n_);
  if (!inv) throw std::domain_error("invert: element is not a unit");
  return make(*inv);
}

Element ZnMulSemigroup::sample(Prng& rng) const { return make(rng.below(n_)); }

Element ZnMulSemigroup::element_at(std::uint64_t index) const {
  if (index >= n_) throw std::out_of_range("element_at");
  return make(index);
}

std::string ZnMulSemigroup::describe() const {
  return "(Z_" + std::to_string(n_) + ", *)";
}

}  // namespace sact
