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

#include "sact/reduction.hpp"

namespace sact {

namespace {

constexpr std::uint64_t kSmallSolveLimit = 32;  // exhaustive below this
constexpr std::uint64_t kBsgsRetries = 32;

/// Solve a reduced prime-power instance; exhaustive when tiny, balanced
/// BSGS with fresh-seed retries otherwise.
AttackResult solve_part(const ProblemInstance& inst, std::uint64_t order,
                        std::uint64_t seed) {
  if (order <= kSmallSolveLimit) return exhaustive(inst);
  BsgsParams plan = balanced_bsgs_plan(order);
  AttackResult last;
  QueryCounters accumulated;
  for (std::uint64_t r = 0; r < kBsgsRetries; ++r) {
    last = bsgs(inst, plan,
                splitmix64_mix(seed + (r + 1) * 0x9E3779B97F4A7C15ULL));
    accumulated += last.counters;
    last.attempts = r + 1;
    if (last.ok()) break;
  }
  last.counters = accumulated;
  return last;
}

}  // namespace

Reduction ph_power_reduction(std::shared_ptr<const CyclicExpSystem> system,
                             std::uint64_t prime_power) {
  std::uint64_t n = system->order();
  if (prime_power < 2 || n % prime_power != 0)
    throw std::invalid_argument(
        "ph_power_reduction: prime power does not divide the order");
  std::uint64_t m = n / prime_power;

  auto target = build_cyclic_exp(
      system->modulus(), prime_power,
      powmod(system->generator(), m, system->modulus()));

  Reduction red;
  red.source = system;
  red.target = target;
  red.f = [tgt = target, prime_power](const Element& s) {
    return tgt->exponents().make(decode_le(s.bytes) % prime_power);
  };
  Element m_elem = system->exponents().make(m);
  red.F = [src = system, m_elem](const Point& x) {
    return src->act(m_elem, x);
  };
  red.G = red.F;
  red.effective = prime_power > 1 && prime_power < n;
  red.name = "ph(q^e=" + std::to_string(prime_power) + ")";
  return red;
}

AttackResult ph_cyclic_solve(const ProblemInstance& inst, std::uint64_t seed) {
  auto system =
      std::dynamic_pointer_cast<const CyclicExpSystem>(inst.system);
  if (!system)
    throw std::invalid_argument(
        "ph_cyclic_solve: instance is not on a cyclic-exp system");

  AttackResult res;
  std::uint64_t n = system->order();

  std::vector<PrimePower> factors;
  try {
    factors = factorize(n);
  } catch (const std::runtime_error& e) {
    res.failure = std::string("factorization budget exceeded: ") + e.what();
    return res;
  }

  // Prime order: no proper reduction available, fall through to one BSGS.
  if (factors.size() == 1 && factors[0].exponent == 1) {
    return solve_part(inst, n, seed);
  }

  CountingAction ca(*inst.system, res.counters);
  std::vector<std::uint64_t> residues;
  std::vector<std::uint64_t> moduli;
  std::uint64_t part_index = 0;
  for (const auto& pp : factors) {
    Reduction red = ph_power_reduction(system, pp.value);
    // Phi_m applied to both x and y: two action queries on the source.
    ProblemInstance sub;
    sub.system = red.target;
    Element m_elem =
        system->exponents().make(n / pp.value);
    sub.x = ca.act(m_elem, inst.x);
    sub.y = ca.act(m_elem, inst.y);

    AttackResult part = solve_part(
        sub, pp.value,
        splitmix64_mix(seed + (++part_index) * 0x9E3779B97F4A7C15ULL));
    res.counters += part.counters;
    if (!part.ok()) {
      res.failure = "prime-power part q^e = " + std::to_string(pp.value) +
                    " failed: " + part.failure;
      return res;
    }
    residues.push_back(decode_le(part.solution->bytes));
    moduli.push_back(pp.value);
  }

  std::uint64_t s_value = crt_combine(residues, moduli);
  Element s = system->exponents().make(s_value);
  res.verified = verify_solution(inst, s).verified;
  if (!res.verified) {
    res.failure = "CRT recombination failed verification";
    return res;
  }
  res.solution = std::move(s);
  return res;
}

}  // namespace sact
