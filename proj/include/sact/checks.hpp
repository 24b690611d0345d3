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
#include <ostream>
#include <string>

#include "sact/action.hpp"

namespace sact {

struct CheckOptions {
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0xC0FFEE;
  /// Exhaustive sweeps where the per-law work stays within carrier <= this.
  std::uint64_t exhaustive_carrier = 1 << 12;
};

struct CheckStats {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  bool ok() const { return failed == 0; }
};

/// Algebra laws, action compatibility, encoding injectivity, DH agreement
/// and witness verification for one system.
CheckStats check_system(std::shared_ptr<const ActionSystem> system,
                        const CheckOptions& opts, std::ostream& out);

/// The full property suite over the standard roster: per-system laws,
/// instance-specific collision structure, reduction commuting squares,
/// rho collision propagation, replay determinism, and the Monte-Carlo
/// bound comparisons at reduced trial counts.
CheckStats run_all_checks(const CheckOptions& opts, std::ostream& out);

}  // namespace sact
