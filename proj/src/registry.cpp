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

#include "sact/registry.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

#include "sact/instances.hpp"

namespace sact {

namespace {

struct Params {
  std::map<std::string, std::string> kv;

  bool has(const std::string& key) const { return kv.count(key) > 0; }

  std::uint64_t number(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end())
      throw std::invalid_argument("missing parameter '" + key + "'");
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(it->second.data(),
                                   it->second.data() + it->second.size(), v);
    if (ec != std::errc() || p != it->second.data() + it->second.size())
      throw std::invalid_argument("parameter '" + key +
                                  "' is not a number: " + it->second);
    return v;
  }

  std::uint64_t number_or(const std::string& key, std::uint64_t dflt) const {
    return has(key) ? number(key) : dflt;
  }

  std::vector<std::uint64_t> number_list(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end())
      throw std::invalid_argument("missing parameter '" + key + "'");
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    const std::string& s = it->second;
    while (pos <= s.size()) {
      std::size_t next = s.find('+', pos);
      std::string tok = s.substr(pos, next == std::string::npos
                                          ? std::string::npos
                                          : next - pos);
      std::uint64_t v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw std::invalid_argument("parameter '" + key +
                                    "' has a bad list entry: " + tok);
      out.push_back(v);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return out;
  }
};

Params parse_params(const std::string& text) {
  Params out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string pair = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t eq = pair.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("bad parameter '" + pair +
                                  "' (expected key=value)");
    out.kv[pair.substr(0, eq)] = pair.substr(eq + 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::shared_ptr<const CyclicExpSystem> cyclic_from(const Params& p) {
  if (p.has("p") || p.has("g")) return build_cyclic_exp(
      p.number("p"), p.number("n"), p.number("g"));
  return build_cyclic_exp_auto(p.number("n"));
}

}  // namespace

std::shared_ptr<const ActionSystem> build_system(
    const std::string& descriptor) {
  std::size_t colon = descriptor.find(':');
  std::string name = descriptor.substr(0, colon);
  Params params = colon == std::string::npos
                      ? Params{}
                      : parse_params(descriptor.substr(colon + 1));

  if (name == "cyclic-exp") return cyclic_from(params);
  if (name == "translation") {
    if (params.has("p") || params.has("g"))
      return build_translation(params.number("p"), params.number("n"),
                               params.number("g"));
    return build_translation_auto(params.number("n"));
  }
  if (name == "modmul") return build_mod_mul(params.number("n"));
  if (name == "min-chain")
    return build_min_chain(params.number("n"), params.number_or("seed", 0));
  if (name == "flat-semilattice")
    return build_flat_semilattice(params.number("m"),
                                  params.number_or("seed", 0));
  if (name == "symmetric") return build_symmetric(params.number("n"));
  if (name == "quotient-exp") {
    auto base = cyclic_from(params);
    std::vector<Element> gens;
    for (auto v : params.number_list("h"))
      gens.push_back(base->exponents().make(v));
    return build_quotient(base, std::move(gens));
  }
  throw std::invalid_argument("unknown system builder '" + name + "'");
}

std::vector<BuilderInfo> list_system_builders() {
  return {
      {"cyclic-exp", "p,n,g | n",
       "(Z_n,*) acting on the order-n subgroup <g> of Z_p^* by s.h = h^s"},
      {"translation", "p,n,g | n",
       "cyclic group <g> of order n acting on itself by multiplication"},
      {"modmul", "n", "(Z_n,*) acting on Z_n by multiplication"},
      {"min-chain", "n,seed",
       "({1..n},min) acting through a hidden seeded bijection"},
      {"flat-semilattice", "m,seed",
       "flat meet semilattice {0,s_1..s_m,1} through a hidden bijection"},
      {"symmetric", "n", "Sym({1..n}) acting naturally on {1..n}"},
      {"quotient-exp", "p,n,g|n + h=v1+v2+...",
       "cyclic-exp reduced by the unit subgroup generated by h"},
  };
}

}  // namespace sact
