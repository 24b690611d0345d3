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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace sact {

// Semigroup elements and set points are carried as their canonical byte
// encodings: unsigned little-endian, fixed width per system.  Equality of
// elements/points is equality of encodings.  The two wrappers exist only to
// keep elements and points from being mixed up (several instances use the
// same underlying value range for both).

struct Element {
  std::string bytes;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct Point {
  std::string bytes;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Minimal number of whole bytes that can hold values 0..max_value.
constexpr std::size_t byte_width(std::uint64_t max_value) {
  std::size_t w = 1;
  while (max_value > 0xFF) {
    max_value >>= 8;
    ++w;
  }
  return w;
}

inline std::string encode_le(std::uint64_t value, std::size_t width) {
  std::string out(width, '\0');
  for (std::size_t i = 0; i < width; ++i) {
    out[i] = static_cast<char>(value & 0xFF);
    value >>= 8;
  }
  return out;
}

inline std::uint64_t decode_le(std::string_view bytes) {
  std::uint64_t value = 0;
  for (std::size_t i = bytes.size(); i-- > 0;) {
    value = (value << 8) | static_cast<std::uint8_t>(bytes[i]);
  }
  return value;
}

/// FNV-1a over a byte string.  Used as the fixed, documented hash behind
/// pseudorandom walk functions; never std::hash, whose value is
/// implementation-defined and would break bit-for-bit replay.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string to_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (char c : bytes) {
    auto b = static_cast<std::uint8_t>(c);
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    return static_cast<std::size_t>(fnv1a64(e.bytes));
  }
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    return static_cast<std::size_t>(fnv1a64(p.bytes));
  }
};

}  // namespace sact
