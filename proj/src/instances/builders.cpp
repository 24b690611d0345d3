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

namespace {

constexpr std::uint64_t kMaxSymmetricDegree = 1000000;

/// Commutativity is declared, not proven; registration spot-checks it on
/// 1000 seeded pairs.
void spot_check_commutativity(const ActionSystem& sys) {
  if (!sys.semigroup().commutative()) return;
  const Semigroup& sg = sys.semigroup();
  Prng rng(0x5AC7C0DEULL);
  for (int i = 0; i < 1000; ++i) {
    Element a = sg.sample(rng);
    Element b = sg.sample(rng);
    if (!(sg.compose(a, b) == sg.compose(b, a)))
      throw std::logic_error(sys.name() +
                             ": declared commutative but ab != ba");
  }
}

void check_cyclic_params(std::uint64_t p, std::uint64_t n, std::uint64_t g) {
  if (!is_prime_u64(p))
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not prime");
  if (n < 2) throw std::invalid_argument("subgroup order must be >= 2");
  auto n_factors = factorize(n);
  if (!has_exact_order(g % p, n, p, n_factors))
    throw std::invalid_argument(
        "order check failure: " + std::to_string(g) +
        " does not have exact order " + std::to_string(n) + " mod " +
        std::to_string(p));
}

}  // namespace

std::shared_ptr<const CyclicExpSystem> build_cyclic_exp(std::uint64_t p,
                                                        std::uint64_t n,
                                                        std::uint64_t g) {
  check_cyclic_params(p, n, g);
  auto sys = std::make_shared<CyclicExpSystem>(p, n, g);
  spot_check_commutativity(*sys);
  return sys;
}

std::shared_ptr<const CyclicExpSystem> build_cyclic_exp_auto(std::uint64_t n) {
  CyclicParams params = find_cyclic_params(n);
  return build_cyclic_exp(params.p, params.n, params.g);
}

std::shared_ptr<const TranslationSystem> build_translation(std::uint64_t p,
                                                           std::uint64_t n,
                                                           std::uint64_t g) {
  check_cyclic_params(p, n, g);
  auto sys = std::make_shared<TranslationSystem>(p, n, g);
  spot_check_commutativity(*sys);
  return sys;
}

std::shared_ptr<const TranslationSystem> build_translation_auto(
    std::uint64_t n) {
  CyclicParams params = find_cyclic_params(n);
  return build_translation(params.p, params.n, params.g);
}

std::shared_ptr<const ModMulSystem> build_mod_mul(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("modmul: modulus must be >= 2");
  auto sys = std::make_shared<ModMulSystem>(n);
  spot_check_commutativity(*sys);
  return sys;
}

std::shared_ptr<const MinChainSystem> build_min_chain(std::uint64_t n,
                                                      std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("min-chain: n must be >= 2");
  auto sys = std::make_shared<MinChainSystem>(n, seed);
  spot_check_commutativity(*sys);
  return sys;
}

std::shared_ptr<const FlatSemilatticeSystem> build_flat_semilattice(
    std::uint64_t m, std::uint64_t seed) {
  if (m < 1)
    throw std::invalid_argument("flat-semilattice: m must be >= 1");
  auto sys = std::make_shared<FlatSemilatticeSystem>(m, seed);
  spot_check_commutativity(*sys);
  return sys;
}

std::shared_ptr<const SymmetricSystem> build_symmetric(std::uint64_t n) {
  if (n < 1 || n > kMaxSymmetricDegree)
    throw std::invalid_argument("symmetric: degree out of range");
  auto sys = std::make_shared<SymmetricSystem>(n);
  spot_check_commutativity(*sys);
  return sys;
}

std::shared_ptr<const QuotientSystem> build_quotient(
    std::shared_ptr<const ActionSystem> base, std::vector<Element> H) {
  auto sys = std::make_shared<QuotientSystem>(std::move(base), std::move(H));
  spot_check_commutativity(*sys);
  return sys;
}

}  // namespace sact
