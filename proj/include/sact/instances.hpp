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
#include <vector>

#include "sact/action.hpp"
#include "sact/numeric.hpp"

namespace sact {

// ---------------------------------------------------------------------------
// Acting semigroups
// ---------------------------------------------------------------------------

/// (Z_n, ·): the multiplicative monoid of integers mod n.  Units are the
/// residues coprime to n; inversion is extended Euclid.
class ZnMulSemigroup final : public Semigroup {
 public:
  explicit ZnMulSemigroup(std::uint64_t n);

  std::uint64_t carrier_size() const override { return n_; }
  Element compose(const Element& a, const Element& b) const override;
  std::optional<Element> unit() const override;
  bool is_unit(const Element& s) const override;
  Element invert(const Element& s) const override;
  Element sample(Prng& rng) const override;
  Element element_at(std::uint64_t index) const override;
  bool commutative() const override { return true; }
  std::size_t element_width() const override { return width_; }
  std::string describe() const override;

  std::uint64_t modulus() const { return n_; }
  Element make(std::uint64_t value) const;
  std::uint64_t value(const Element& e) const;

 private:
  std::uint64_t n_;
  std::size_t width_;
};

// ---------------------------------------------------------------------------
// cyclic-exp: (Z_n, ·) acting on the order-n subgroup <g> of Z_p^* by
// s.h = h^s.  The action problem on it is the discrete logarithm problem.
// ---------------------------------------------------------------------------
class CyclicExpSystem final : public ActionSystem {
 public:
  CyclicExpSystem(std::uint64_t p, std::uint64_t n, std::uint64_t g);

  const Semigroup& semigroup() const override { return *sg_; }
  std::shared_ptr<const Semigroup> semigroup_ptr() const override {
    return sg_;
  }
  std::uint64_t set_size() const override { return n_; }
  Point act(const Element& s, const Point& x) const override;
  Point sample_point(Prng& rng) const override;
  Point point_at(std::uint64_t index) const override;
  Point base_point() const override { return make_point(g_); }
  std::size_t point_width() const override { return point_width_; }
  SystemTraits traits() const override {
    return {.group_action = false, .transitive = false, .free = false,
            .abelian = true};
  }
  std::string name() const override { return "cyclic-exp"; }
  std::string describe() const override;

  std::uint64_t modulus() const { return p_; }
  std::uint64_t order() const { return n_; }
  std::uint64_t generator() const { return g_; }
  Point make_point(std::uint64_t value) const;
  std::uint64_t point_value(const Point& p) const;
  const ZnMulSemigroup& exponents() const { return *sg_; }

 private:
  std::uint64_t p_, n_, g_;
  std::size_t point_width_;
  std::shared_ptr<const ZnMulSemigroup> sg_;
};

// ---------------------------------------------------------------------------
// translation: the cyclic group <g> of order n in Z_p^* acting on itself by
// multiplication mod p.  Simply transitive, abelian, free -- the desk-scale
// hard homogeneous space.
// ---------------------------------------------------------------------------
class TranslationSystem final : public ActionSystem {
 public:
  TranslationSystem(std::uint64_t p, std::uint64_t n, std::uint64_t g);

  const Semigroup& semigroup() const override { return *sg_; }
  std::shared_ptr<const Semigroup> semigroup_ptr() const override {
    return sg_;
  }
  std::uint64_t set_size() const override { return n_; }
  Point act(const Element& s, const Point& x) const override;
  Point sample_point(Prng& rng) const override;
  Point point_at(std::uint64_t index) const override;
  Point base_point() const override;  // the identity of <g>
  std::size_t point_width() const override;
  SystemTraits traits() const override {
    return {.group_action = true, .transitive = true, .free = true,
            .abelian = true};
  }
  std::string name() const override { return "translation"; }
  std::string describe() const override;

  std::uint64_t modulus() const { return p_; }
  std::uint64_t order() const { return n_; }
  std::uint64_t generator() const { return g_; }

 private:
  std::uint64_t p_, n_, g_;
  std::shared_ptr<const Semigroup> sg_;
};

// ---------------------------------------------------------------------------
// modmul: (Z_n, ·) acting on Z_n by multiplication.  The natural action of
// the monoid on itself; its non-units feed the Pohlig-Hellman style
// reductions.
// ---------------------------------------------------------------------------
class ModMulSystem final : public ActionSystem {
 public:
  explicit ModMulSystem(std::uint64_t n);

  const Semigroup& semigroup() const override { return *sg_; }
  std::shared_ptr<const Semigroup> semigroup_ptr() const override {
    return sg_;
  }
  std::uint64_t set_size() const override { return n_; }
  Point act(const Element& s, const Point& x) const override;
  Point sample_point(Prng& rng) const override;
  Point point_at(std::uint64_t index) const override;
  Point base_point() const override;  // 1
  std::size_t point_width() const override;
  SystemTraits traits() const override {
    return {.group_action = false, .transitive = false, .free = false,
            .abelian = true};
  }
  std::string name() const override { return "modmul"; }
  std::string describe() const override;

  std::uint64_t modulus() const { return n_; }
  Point make_point(std::uint64_t value) const;
  std::uint64_t point_value(const Point& p) const;

 private:
  std::uint64_t n_;
  std::shared_ptr<const ZnMulSemigroup> sg_;
};

// ---------------------------------------------------------------------------
// min-chain: ({1..n}, min) acting through a hidden seeded bijection phi,
// s.phi(t) = phi(min(s, t)).  Point encodings expose only the permuted
// label, never phi itself.
// ---------------------------------------------------------------------------
class MinChainSystem final : public ActionSystem {
 public:
  MinChainSystem(std::uint64_t n, std::uint64_t seed);
  /// Explicit permutation, for worked examples (phi[t-1] = label of phi(t)).
  MinChainSystem(std::uint64_t n, std::vector<std::uint32_t> phi);

  const Semigroup& semigroup() const override { return *sg_; }
  std::shared_ptr<const Semigroup> semigroup_ptr() const override {
    return sg_;
  }
  std::uint64_t set_size() const override { return n_; }
  Point act(const Element& s, const Point& x) const override;
  Point sample_point(Prng& rng) const override;
  Point point_at(std::uint64_t index) const override;
  Point base_point() const override { return phi_point(n_); }
  std::size_t point_width() const override { return width_; }
  SystemTraits traits() const override {
    return {.group_action = false, .transitive = false, .free = false,
            .abelian = true};
  }
  std::string name() const override { return "min-chain"; }
  std::string describe() const override;

  std::uint64_t chain_length() const { return n_; }
  Element chain_element(std::uint64_t value) const;
  std::uint64_t element_value(const Element& e) const;

  // Harness-only: the worked example assumes the preimage of x is known.
  // Attacks receive it as an explicit argument, never by calling these.
  Point phi_point(std::uint64_t t) const;
  std::uint64_t phi_preimage(const Point& x) const;

 private:
  std::uint64_t n_;
  std::size_t width_;
  std::vector<std::uint32_t> phi_;      // phi_[t-1] = label
  std::vector<std::uint32_t> phi_inv_;  // phi_inv_[label-1] = t
  std::shared_ptr<const Semigroup> sg_;
};

// ---------------------------------------------------------------------------
// flat-semilattice: carrier {0, s_1..s_m, 1} with the meet table
//   0 ^ s_i = 0,  1 ^ s_i = s_i,  s_i ^ s_j = 0 for i != j,
// acting through a hidden bijection phi.  o = phi(0), e = phi(1).
// ---------------------------------------------------------------------------
class FlatSemilatticeSystem final : public ActionSystem {
 public:
  FlatSemilatticeSystem(std::uint64_t m, std::uint64_t seed);

  const Semigroup& semigroup() const override { return *sg_; }
  std::shared_ptr<const Semigroup> semigroup_ptr() const override {
    return sg_;
  }
  std::uint64_t set_size() const override { return m_ + 2; }
  Point act(const Element& s, const Point& x) const override;
  Point sample_point(Prng& rng) const override;
  Point point_at(std::uint64_t index) const override;
  Point base_point() const override { return top_point(); }
  std::size_t point_width() const override { return width_; }
  SystemTraits traits() const override {
    return {.group_action = false, .transitive = false, .free = false,
            .abelian = true};
  }
  std::string name() const override { return "flat-semilattice"; }
  std::string describe() const override;

  std::uint64_t atom_count() const { return m_; }
  Element zero_element() const;            // 0
  Element top_element() const;             // 1
  Element atom(std::uint64_t i) const;     // s_i, 1 <= i <= m
  Point origin_point() const;              // o = phi(0)
  Point top_point() const;                 // e = phi(1)

 private:
  std::uint64_t meet(std::uint64_t a, std::uint64_t b) const;

  std::uint64_t m_;
  std::size_t width_;
  std::vector<std::uint32_t> phi_, phi_inv_;
  std::shared_ptr<const Semigroup> sg_;
};

// ---------------------------------------------------------------------------
// symmetric: Sym({1..n}) acting naturally on {1..n}.  Elements are stored as
// image arrays and encoded coordinate-wise.
// ---------------------------------------------------------------------------
class SymmetricSystem final : public ActionSystem {
 public:
  explicit SymmetricSystem(std::uint64_t n);

  const Semigroup& semigroup() const override { return *sg_; }
  std::shared_ptr<const Semigroup> semigroup_ptr() const override {
    return sg_;
  }
  std::uint64_t set_size() const override { return n_; }
  Point act(const Element& s, const Point& x) const override;
  Point sample_point(Prng& rng) const override;
  Point point_at(std::uint64_t index) const override;
  Point base_point() const override { return point_at(0); }
  std::size_t point_width() const override { return coord_width_; }
  SystemTraits traits() const override {
    return {.group_action = true, .transitive = n_ >= 2, .free = n_ == 1,
            .abelian = n_ <= 2};
  }
  std::string name() const override { return "symmetric"; }
  std::string describe() const override;

  std::uint64_t degree() const { return n_; }
  /// images[i] = sigma(i+1), values 1..n forming a permutation.
  Element from_images(const std::vector<std::uint32_t>& images) const;
  std::vector<std::uint32_t> to_images(const Element& e) const;
  Element transposition(std::uint64_t a, std::uint64_t b) const;
  Point make_point(std::uint64_t value) const;  // value in 1..n
  std::uint64_t point_value(const Point& p) const;

 private:
  std::uint64_t n_;
  std::size_t coord_width_;
  std::shared_ptr<const Semigroup> sg_;
};

// ---------------------------------------------------------------------------
// quotient: a commutative monoid action divided by a subgroup H of units
// acting as automorphisms.  Carrier and point set are materialized by orbit
// enumeration; canonical representatives minimize the encoding.
// ---------------------------------------------------------------------------
class QuotientSystem final : public ActionSystem {
 public:
  QuotientSystem(std::shared_ptr<const ActionSystem> base,
                 std::vector<Element> unit_generators);

  const Semigroup& semigroup() const override { return *sg_; }
  std::shared_ptr<const Semigroup> semigroup_ptr() const override {
    return sg_;
  }
  std::uint64_t set_size() const override;
  Point act(const Element& s, const Point& x) const override;
  Point sample_point(Prng& rng) const override;
  Point point_at(std::uint64_t index) const override;
  Point base_point() const override;
  std::size_t point_width() const override;
  SystemTraits traits() const override;
  std::string name() const override { return "quotient"; }
  std::string describe() const override;

  const ActionSystem& base() const { return *base_; }
  /// The subgroup <H>, sorted by encoding.
  const std::vector<Element>& subgroup() const;
  /// Canonical representative of the H-orbit of x.
  Point canonical_point(const Point& x) const;
  /// Canonical representative of the class sH.
  Element canonical_element(const Element& s) const;
  /// The full H-orbit of x, sorted by encoding.
  std::vector<Point> orbit_of(const Point& x) const;

 private:
  std::shared_ptr<const ActionSystem> base_;
  std::shared_ptr<const Semigroup> sg_;  // materialized quotient semigroup
  std::vector<Point> orbit_reps_;

  friend class QuotientSemigroup;
};

// ---------------------------------------------------------------------------
// Wrappers
// ---------------------------------------------------------------------------

/// Restriction of a monoid action to its unit subgroup S^*.  The point set
/// is unchanged; the carrier is the materialized unit list.
std::shared_ptr<const ActionSystem> restrict_to_units(
    std::shared_ptr<const ActionSystem> base);

/// Adjoins a unit to the acting semigroup when it lacks one (the new unit
/// acts as the identity map).  Returns the input unchanged for monoids.
std::shared_ptr<const ActionSystem> ensure_unit(
    std::shared_ptr<const ActionSystem> base);

// ---------------------------------------------------------------------------
// Builders (registration points: validate parameters and spot-check
// declared commutativity on 1000 seeded pairs)
// ---------------------------------------------------------------------------

std::shared_ptr<const CyclicExpSystem> build_cyclic_exp(std::uint64_t p,
                                                        std::uint64_t n,
                                                        std::uint64_t g);
/// Deterministically finds (p, g) for the requested order.
std::shared_ptr<const CyclicExpSystem> build_cyclic_exp_auto(std::uint64_t n);

std::shared_ptr<const TranslationSystem> build_translation(std::uint64_t p,
                                                           std::uint64_t n,
                                                           std::uint64_t g);
std::shared_ptr<const TranslationSystem> build_translation_auto(
    std::uint64_t n);

std::shared_ptr<const ModMulSystem> build_mod_mul(std::uint64_t n);

std::shared_ptr<const MinChainSystem> build_min_chain(std::uint64_t n,
                                                      std::uint64_t seed);

std::shared_ptr<const FlatSemilatticeSystem> build_flat_semilattice(
    std::uint64_t m, std::uint64_t seed);

std::shared_ptr<const SymmetricSystem> build_symmetric(std::uint64_t n);

std::shared_ptr<const QuotientSystem> build_quotient(
    std::shared_ptr<const ActionSystem> base, std::vector<Element> H);

}  // namespace sact
