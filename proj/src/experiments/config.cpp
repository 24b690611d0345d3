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

#include "sact/config.hpp"

#include <charconv>

namespace sact {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(const std::string& value, const std::string& key) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || p != value.data() + value.size())
    throw ConfigError("value of '" + key + "' is not a number: " + value);
  return v;
}

}  // namespace

const std::string* ConfigSection::find(const std::string& key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string ConfigSection::get(const std::string& key) const {
  if (const auto* v = find(key)) return *v;
  throw ConfigError("missing key '" + key + "' in section [" + name + "]");
}

std::string ConfigSection::get_or(const std::string& key,
                                  const std::string& dflt) const {
  if (const auto* v = find(key)) return *v;
  return dflt;
}

std::uint64_t ConfigSection::get_number(const std::string& key) const {
  return parse_u64(get(key), key);
}

std::uint64_t ConfigSection::get_number_or(const std::string& key,
                                           std::uint64_t dflt) const {
  if (const auto* v = find(key)) return parse_u64(*v, key);
  return dflt;
}

std::vector<std::uint64_t> ConfigSection::get_number_list(
    const std::string& key) const {
  std::string text = get(key);
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = trim(text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (!tok.empty()) out.push_back(parse_u64(tok, key));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ConfigError("key '" + key + "' has an empty list");
  return out;
}

void ConfigSection::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries.emplace_back(key, value);
}

void ConfigSection::set(const std::string& key, std::uint64_t value) {
  set(key, std::to_string(value));
}

Config Config::parse(const std::string& text) {
  Config cfg;
  ConfigSection* current = nullptr;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(
        pos, nl == std::string::npos ? std::string::npos : nl - pos);
    ++line_no;
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;

    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError("line " + std::to_string(line_no) +
                          ": unterminated section header");
      std::string name = trim(t.substr(1, t.size() - 2));
      if (name.empty())
        throw ConfigError("line " + std::to_string(line_no) +
                          ": empty section name");
      cfg.sections.push_back(ConfigSection{name, {}});
      current = &cfg.sections.back();
      continue;
    }
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected key = value");
    if (!current)
      throw ConfigError("line " + std::to_string(line_no) +
                        ": entry before any [section]");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    current->entries.emplace_back(key, value);
  }
  return cfg;
}

std::string Config::serialize() const {
  std::string out;
  for (std::size_t i = 0; i < sections.size(); ++i) {
    if (i) out += '\n';
    out += '[' + sections[i].name + "]\n";
    for (const auto& [k, v] : sections[i].entries)
      out += k + " = " + v + '\n';
  }
  return out;
}

const ConfigSection* Config::find(const std::string& name) const {
  for (const auto& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

ConfigSection& Config::section(const std::string& name) {
  for (auto& s : sections) {
    if (s.name == name) return s;
  }
  sections.push_back(ConfigSection{name, {}});
  return sections.back();
}

}  // namespace sact
