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
#include <optional>

#include "sact/prng.hpp"
#include "sact/semigroup.hpp"

namespace sact::detail {

/// Rejection sampling of units through is_unit, with the acceptance rate
/// recorded (how "random" units are sampled when S^* is unknown is left open
/// upstream; this is the documented policy).
class UnitSampler {
 public:
  explicit UnitSampler(const Semigroup& sg) : sg_(sg) {}

  std::optional<Element> sample(Prng& rng, std::uint64_t max_attempts = 4096) {
    for (std::uint64_t i = 0; i < max_attempts; ++i) {
      ++attempts_;
      Element e = sg_.sample(rng);
      if (sg_.is_unit(e)) {
        ++accepted_;
        return e;
      }
    }
    return std::nullopt;
  }

  double acceptance() const {
    return attempts_ ? static_cast<double>(accepted_) /
                           static_cast<double>(attempts_)
                     : 1.0;
  }

 private:
  const Semigroup& sg_;
  std::uint64_t attempts_ = 0;
  std::uint64_t accepted_ = 0;
};

}  // namespace sact::detail
