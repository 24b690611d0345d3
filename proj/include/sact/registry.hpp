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

#include <memory>
#include <string>
#include <vector>

#include "sact/action.hpp"

namespace sact {

/// Builds a system from a one-line descriptor, e.g.
///   cyclic-exp:p=59,n=29,g=4
///   cyclic-exp:n=1024            (p and g found deterministically)
///   translation:n=1024
///   modmul:n=28
///   min-chain:n=8,seed=1
///   flat-semilattice:m=4,seed=1
///   symmetric:n=8
///   quotient-exp:p=59,n=29,g=4,h=7+12
/// Throws std::invalid_argument on unknown names or bad parameters.
std::shared_ptr<const ActionSystem> build_system(const std::string& descriptor);

struct BuilderInfo {
  std::string name;
  std::string parameters;
  std::string summary;
};

std::vector<BuilderInfo> list_system_builders();

}  // namespace sact
