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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "sact/bytes.hpp"
#include "sact/prng.hpp"

namespace sact {

// A finite semigroup with canonical element encodings.  Implementations are
// immutable after construction and safe to share across threads; all methods
// are pure given the Prng state.
//
// Equality of elements is equality of encodings.  compose() always returns
// the canonical encoding, so laws like associativity are checked by
// comparing bytes.
class Semigroup {
 public:
  virtual ~Semigroup() = default;

  /// Number of elements.  Saturates at UINT64_MAX when the carrier is too
  /// large to count in 64 bits (see carrier_exact).
  virtual std::uint64_t carrier_size() const = 0;
  virtual bool carrier_exact() const { return true; }

  virtual Element compose(const Element& a, const Element& b) const = 0;

  /// Neutral element, if this semigroup is a monoid.
  virtual std::optional<Element> unit() const = 0;

  /// True when the unit was adjoined on registration rather than being part
  /// of the original carrier.  Unit-dependent attacks may exclude it.
  virtual bool unit_is_adjoined() const { return false; }

  virtual bool is_unit(const Element& s) const = 0;

  /// Inverse of a unit.  Throws std::domain_error on non-units.
  virtual Element invert(const Element& s) const = 0;

  /// Uniform draw from the carrier.
  virtual Element sample(Prng& rng) const = 0;

  /// index -> element, a bijection onto the carrier for index <
  /// carrier_size(), monotone in the canonical encoding where the carrier is
  /// integer-valued.  Only callable when carrier_exact().
  virtual Element element_at(std::uint64_t index) const = 0;

  /// Declared (spot-checked, not proven) commutativity.
  virtual bool commutative() const = 0;

  /// Fixed encoding width in bytes.
  virtual std::size_t element_width() const = 0;

  virtual std::string describe() const = 0;
};

/// S^1: adjoins a fresh neutral element to a semigroup that lacks one.
/// Encodings gain one tag byte so the new unit cannot collide with the
/// carrier.  The adjoined unit is the only unit of S^1.
std::shared_ptr<const Semigroup> adjoin_unit(
    std::shared_ptr<const Semigroup> base);

}  // namespace sact
