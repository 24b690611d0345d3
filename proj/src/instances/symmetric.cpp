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

class SymSemigroup final : public Semigroup {
 public:
  explicit SymSemigroup(std::uint64_t n)
      : n_(n),
        coord_width_(byte_width(n)),
        carrier_(saturating_factorial(n)) {}

  std::uint64_t carrier_size() const override { return carrier_; }
  bool carrier_exact() const override { return n_ <= 20; }

  Element compose(const Element& a, const Element& b) const override {
    auto pa = decode(a);
    auto pb = decode(b);
    std::vector<std::uint32_t> out(n_);
    for (std::uint64_t i = 0; i < n_; ++i) out[i] = pa[pb[i] - 1];
    return encode(out);
  }

  std::optional<Element> unit() const override {
    std::vector<std::uint32_t> id(n_);
    for (std::uint64_t i = 0; i < n_; ++i) id[i] = i + 1;
    return encode(id);
  }

  bool is_unit(const Element&) const override { return true; }

  Element invert(const Element& s) const override {
    auto p = decode(s);
    std::vector<std::uint32_t> inv(n_);
    for (std::uint64_t i = 0; i < n_; ++i) inv[p[i] - 1] = i + 1;
    return encode(inv);
  }

  Element sample(Prng& rng) const override {
    std::vector<std::uint32_t> v(n_);
    for (std::uint64_t i = 0; i < n_; ++i) v[i] = i + 1;
    for (std::uint64_t i = n_; i > 1; --i) {
      std::uint64_t j = rng.below(i);
      std::swap(v[i - 1], v[j]);
    }
    return encode(v);
  }

  /// Lehmer unranking; index order coincides with lexicographic (and hence
  /// encoding) order of the image arrays.
  Element element_at(std::uint64_t index) const override {
    if (!carrier_exact() || index >= carrier_)
      throw std::out_of_range("element_at: carrier too large or index out");
    std::vector<std::uint32_t> pool(n_);
    for (std::uint64_t i = 0; i < n_; ++i) pool[i] = i + 1;
    std::vector<std::uint32_t> out;
    out.reserve(n_);
    std::uint64_t f = carrier_;
    for (std::uint64_t k = n_; k > 0; --k) {
      f /= k;
      std::uint64_t d = index / f;
      index %= f;
      out.push_back(pool[d]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return encode(out);
  }

  bool commutative() const override { return n_ <= 2; }
  std::size_t element_width() const override { return n_ * coord_width_; }
  std::string describe() const override {
    return "Sym({1.." + std::to_string(n_) + "})";
  }

  std::vector<std::uint32_t> decode(const Element& e) const {
    std::vector<std::uint32_t> out(n_);
    for (std::uint64_t i = 0; i < n_; ++i) {
      out[i] = static_cast<std::uint32_t>(decode_le(
          std::string_view(e.bytes).substr(i * coord_width_, coord_width_)));
    }
    return out;
  }

  Element encode(const std::vector<std::uint32_t>& images) const {
    std::string bytes;
    bytes.reserve(n_ * coord_width_);
    for (auto v : images) bytes += encode_le(v, coord_width_);
    return Element{std::move(bytes)};
  }

 private:
  std::uint64_t n_;
  std::size_t coord_width_;
  std::uint64_t carrier_;
};

}  // namespace

SymmetricSystem::SymmetricSystem(std::uint64_t n)
    : n_(n),
      coord_width_(byte_width(n)),
      sg_(std::make_shared<SymSemigroup>(n)) {}

Point SymmetricSystem::act(const Element& s, const Point& x) const {
  std::uint64_t i = decode_le(x.bytes);
  auto bytes = std::string_view(s.bytes)
                   .substr((i - 1) * coord_width_, coord_width_);
  return Point{encode_le(decode_le(bytes), coord_width_)};
}

Point SymmetricSystem::sample_point(Prng& rng) const {
  return make_point(rng.below(n_) + 1);
}

Point SymmetricSystem::point_at(std::uint64_t index) const {
  if (index >= n_) throw std::out_of_range("point_at");
  return make_point(index + 1);
}

Element SymmetricSystem::from_images(
    const std::vector<std::uint32_t>& images) const {
  if (images.size() != n_)
    throw std::invalid_argument("from_images: size mismatch");
  std::vector<bool> seen(n_, false);
  for (auto v : images) {
    if (v < 1 || v > n_ || seen[v - 1])
      throw std::invalid_argument("from_images: not a permutation");
    seen[v - 1] = true;
  }
  std::string bytes;
  bytes.reserve(n_ * coord_width_);
  for (auto v : images) bytes += encode_le(v, coord_width_);
  return Element{std::move(bytes)};
}

std::vector<std::uint32_t> SymmetricSystem::to_images(const Element& e) const {
  std::vector<std::uint32_t> out(n_);
  for (std::uint64_t i = 0; i < n_; ++i) {
    out[i] = static_cast<std::uint32_t>(decode_le(
        std::string_view(e.bytes).substr(i * coord_width_, coord_width_)));
  }
  return out;
}

Element SymmetricSystem::transposition(std::uint64_t a, std::uint64_t b) const {
  std::vector<std::uint32_t> images(n_);
  for (std::uint64_t i = 0; i < n_; ++i) images[i] = i + 1;
  std::swap(images[a - 1], images[b - 1]);
  return from_images(images);
}

Point SymmetricSystem::make_point(std::uint64_t value) const {
  if (value < 1 || value > n_) throw std::out_of_range("make_point");
  return Point{encode_le(value, coord_width_)};
}

std::uint64_t SymmetricSystem::point_value(const Point& p) const {
  return decode_le(p.bytes);
}

std::string SymmetricSystem::describe() const {
  return "Sym({1.." + std::to_string(n_) + "}) acting naturally on {1.." +
         std::to_string(n_) + "}";
}

}  // namespace sact
