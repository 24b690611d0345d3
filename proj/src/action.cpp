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

#include "sact/action.hpp"

#include <charconv>
#include <stdexcept>

namespace sact {

std::optional<Point> ActionSystem::parse_point(const std::string& text) const {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    return std::nullopt;
  if (point_width() < 8 && value >> (8 * point_width())) return std::nullopt;
  return Point{encode_le(value, point_width())};
}

std::string ActionSystem::format_point(const Point& p) const {
  return std::to_string(decode_le(p.bytes));
}

std::optional<Element> ActionSystem::parse_element(
    const std::string& text) const {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    return std::nullopt;
  const auto w = semigroup().element_width();
  if (w < 8 && value >> (8 * w)) return std::nullopt;
  return Element{encode_le(value, w)};
}

std::string ActionSystem::format_element(const Element& e) const {
  return std::to_string(decode_le(e.bytes));
}

Solution verify_solution(const ProblemInstance& inst, const Element& s) {
  Point reached = inst.system->act(s, inst.x);
  return Solution{s, reached == inst.y};
}

ProblemInstance sample_instance(std::shared_ptr<const ActionSystem> system,
                                Prng& rng) {
  ProblemInstance inst;
  inst.system = system;
  inst.x = system->base_point();
  Element s = system->semigroup().sample(rng);
  inst.y = system->act(s, inst.x);
  inst.witness = s;
  return inst;
}

ProblemInstance sample_instance_random_x(
    std::shared_ptr<const ActionSystem> system, Prng& rng) {
  ProblemInstance inst;
  inst.system = system;
  inst.x = system->sample_point(rng);
  Element s = system->semigroup().sample(rng);
  inst.y = system->act(s, inst.x);
  inst.witness = s;
  return inst;
}

DhTranscript dh_with(const ActionSystem& system, const Point& x,
                     const Element& a, const Element& b) {
  if (!system.semigroup().commutative())
    throw std::invalid_argument(
        "dh_simulate: system is not declared commutative");
  DhTranscript t;
  t.alice_secret = a;
  t.bob_secret = b;
  t.alice_sends = system.act(a, x);
  t.bob_sends = system.act(b, x);
  t.alice_key = system.act(a, t.bob_sends);
  t.bob_key = system.act(b, t.alice_sends);
  return t;
}

DhTranscript dh_simulate(const ActionSystem& system, const Point& x,
                         std::uint64_t seed) {
  Prng rng(seed);
  Element a = system.semigroup().sample(rng);
  Element b = system.semigroup().sample(rng);
  return dh_with(system, x, a, b);
}

}  // namespace sact
