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
#include <stdexcept>
#include <vector>

namespace sact {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp,
                            std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Inverse of a modulo n via extended Euclid, if gcd(a, n) = 1.
inline std::optional<std::uint64_t> inverse_mod(std::uint64_t a,
                                                std::uint64_t n) {
  if (n == 0) return std::nullopt;
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(n),
               nr = static_cast<std::int64_t>(a % n);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(t);
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  std::uint64_t value;  // prime^exponent
};

/// Trial division up to `limit`.  Throws if a composite cofactor survives
/// every divisor below the limit; factoring harder numbers is out of scope.
inline std::vector<PrimePower> factorize(std::uint64_t n,
                                         std::uint64_t limit = 1000000) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p <= limit && p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) {
    if (!is_prime_u64(n))
      throw std::runtime_error("factorize: cofactor exceeds trial-division budget");
    out.push_back(PrimePower{n, 1, n});
  }
  return out;
}

struct CyclicParams {
  std::uint64_t p;  // prime modulus
  std::uint64_t n;  // subgroup order, n | p-1
  std::uint64_t g;  // element of exact order n mod p
};

inline bool has_exact_order(std::uint64_t g, std::uint64_t n, std::uint64_t p,
                            const std::vector<PrimePower>& n_factors) {
  if (g == 0 || powmod(g, n, p) != 1) return false;
  for (const auto& f : n_factors) {
    if (powmod(g, n / f.prime, p) == 1) return false;
  }
  return true;
}

/// Smallest prime p = c*n + 1 together with an element of exact order n.
/// Deterministic in n, so experiment configs need only record n.
inline CyclicParams find_cyclic_params(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("find_cyclic_params: n must be >= 2");
  auto n_factors = factorize(n);
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t p = c * n + 1;
    if (p <= n) throw std::runtime_error("find_cyclic_params: overflow");
    if (!is_prime_u64(p)) continue;
    for (std::uint64_t h = 2; h < p; ++h) {
      std::uint64_t g = powmod(h, c, p);
      if (has_exact_order(g, n, p, n_factors)) return CyclicParams{p, n, g};
    }
  }
}

/// CRT combination of pairwise-coprime congruences s = r_i (mod m_i).
inline std::uint64_t crt_combine(const std::vector<std::uint64_t>& residues,
                                 const std::vector<std::uint64_t>& moduli) {
  if (residues.size() != moduli.size() || residues.empty())
    throw std::invalid_argument("crt_combine: mismatched inputs");
  std::uint64_t r = residues[0] % moduli[0];
  std::uint64_t m = moduli[0];
  for (std::size_t i = 1; i < residues.size(); ++i) {
    std::uint64_t mi = moduli[i];
    auto inv = inverse_mod(m % mi, mi);
    if (!inv) throw std::invalid_argument("crt_combine: moduli not coprime");
    std::uint64_t diff = (residues[i] % mi + mi - r % mi) % mi;
    std::uint64_t k = mulmod(diff, *inv, mi);
    r += m * k;
    m *= mi;
  }
  return r % m;
}

inline std::uint64_t saturating_factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (r > UINT64_MAX / i) return UINT64_MAX;
    r *= i;
  }
  return r;
}

}  // namespace sact
