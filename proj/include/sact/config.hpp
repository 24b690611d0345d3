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
#include <string>
#include <utility>
#include <vector>

namespace sact {

// Flat key=value configuration in named sections.  Grammar (documented in
// docs/formats.md):
//
//   file     := line*
//   line     := blank | comment | section | entry
//   comment  := '#' any*
//   section  := '[' name ']'
//   entry    := key '=' value        (whitespace around tokens ignored)
//
// Keys keep their order within a section; serialization is canonical
// ("key = value", one blank line between sections), so parse(serialize(c))
// round-trips exactly.

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigSection {
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;

  const std::string* find(const std::string& key) const;
  std::string get(const std::string& key) const;  // throws if missing
  std::string get_or(const std::string& key, const std::string& dflt) const;
  std::uint64_t get_number(const std::string& key) const;
  std::uint64_t get_number_or(const std::string& key,
                              std::uint64_t dflt) const;
  std::vector<std::uint64_t> get_number_list(const std::string& key) const;
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, std::uint64_t value);

  friend bool operator==(const ConfigSection&, const ConfigSection&) = default;
};

struct Config {
  std::vector<ConfigSection> sections;

  static Config parse(const std::string& text);
  std::string serialize() const;

  const ConfigSection* find(const std::string& name) const;
  ConfigSection& section(const std::string& name);  // creates if missing

  friend bool operator==(const Config&, const Config&) = default;
};

}  // namespace sact
