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

#include "sact/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sact/attacks.hpp"
#include "sact/checks.hpp"
#include "sact/experiments.hpp"
#include "sact/instances.hpp"
#include "sact/reduction.hpp"
#include "sact/registry.hpp"

namespace sact {

namespace {

std::string resolve_out_path(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  if (const char* dir = std::getenv("SACT_OUT_DIR")) {
    if (*dir) return std::string(dir) + "/" + path;
  }
  return path;
}

void print_counters(const QueryCounters& c) {
  std::cout << "action_queries=" << c.action_queries
            << " compositions=" << c.compositions
            << " inversions=" << c.inversions
            << " equality_tests=" << c.equality_tests
            << " table_entries=" << c.table_entries
            << " wall_steps=" << c.wall_steps << '\n';
}

struct AttackSpec {
  std::string name;
  std::map<std::string, std::string> params;

  std::uint64_t number_or(const std::string& key, std::uint64_t dflt) const {
    auto it = params.find(key);
    if (it == params.end()) return dflt;
    return std::stoull(it->second);
  }
};

AttackSpec parse_attack(const std::string& descriptor) {
  AttackSpec spec;
  std::size_t colon = descriptor.find(':');
  spec.name = descriptor.substr(0, colon);
  if (colon == std::string::npos) return spec;
  std::string rest = descriptor.substr(colon + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    std::size_t comma = rest.find(',', pos);
    std::string pair = rest.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t eq = pair.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("bad attack parameter '" + pair + "'");
    spec.params[pair.substr(0, eq)] = pair.substr(eq + 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return spec;
}

std::vector<Element> parse_chain(const ActionSystem& system,
                                 const std::string& text) {
  std::vector<Element> chain;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t plus = text.find('+', pos);
    std::string tok = text.substr(
        pos, plus == std::string::npos ? std::string::npos : plus - pos);
    auto e = system.parse_element(tok);
    if (!e)
      throw std::invalid_argument("bad chain element '" + tok + "'");
    chain.push_back(std::move(*e));
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return chain;
}

int do_solve(const std::string& system_desc, const std::string& x_text,
             const std::string& y_text, const std::string& attack_desc,
             std::uint64_t seed, bool apply_unit_filter,
             std::uint64_t budget) {
  std::shared_ptr<const ActionSystem> system = build_system(system_desc);

  ProblemInstance inst;
  inst.system = system;
  auto x = system->parse_point(x_text);
  auto y = system->parse_point(y_text);
  if (!x || !y) {
    std::cerr << "error: cannot parse points for " << system->name() << '\n';
    return 2;
  }
  inst.x = *x;
  inst.y = *y;

  if (apply_unit_filter) {
    UnitFilterResult uf = unit_filter(inst, budget, seed);
    switch (uf.status) {
      case UnitFilterStatus::restricted:
        std::cout << "unit-filter: y in S*.x, restricted to the unit group\n";
        inst = *uf.restricted;
        break;
      case UnitFilterStatus::not_in_unit_orbit:
        std::cout << "unit-filter: y is not in S*.x; a non-unit witness is "
                     "required\n";
        return 1;
      case UnitFilterStatus::inconclusive:
        std::cout << "unit-filter: inconclusive after " << uf.probes
                  << " probes, attacking the full semigroup\n";
        break;
    }
  }

  AttackSpec spec = parse_attack(attack_desc);
  AttackResult res;
  if (spec.name == "bsgs") {
    BsgsParams plan = balanced_bsgs_plan(system->semigroup().carrier_size());
    plan.table_size = spec.number_or("l", plan.table_size);
    plan.probe_count = spec.number_or("k", plan.probe_count);
    res = bsgs(inst, plan, seed);
  } else if (spec.name == "rho") {
    RhoParams params;
    params.max_retries = spec.number_or("retries", 10);
    params.walk.step_elements =
        static_cast<std::uint32_t>(spec.number_or("steps", 16));
    res = pollard_rho(inst, params, seed);
  } else if (spec.name == "exhaustive") {
    res = exhaustive(inst);
  } else if (spec.name == "binary-search-min") {
    const auto* chain =
        dynamic_cast<const MinChainSystem*>(system.get());
    if (!chain) {
      std::cerr << "error: binary-search-min needs a min-chain system\n";
      return 2;
    }
    res = binary_search_min(inst, spec.number_or("a", chain->chain_length()));
  } else if (spec.name == "sym-fixedpoint") {
    res = symmetric_fixedpoint_search(inst);
  } else if (spec.name == "pohlig-hellman") {
    res = ph_cyclic_solve(inst, seed);
  } else if (spec.name == "recursive-nonunit") {
    auto it = spec.params.find("chain");
    if (it == spec.params.end()) {
      std::cerr << "error: recursive-nonunit needs chain=m1+m2+...\n";
      return 2;
    }
    res = recursive_nonunit_solve(inst, parse_chain(*system, it->second),
                                  spec.number_or("budget", 100000));
  } else {
    std::cerr << "error: unknown attack '" << spec.name << "'\n";
    return 2;
  }

  if (!res.ok()) {
    std::cout << "failure: " << res.failure << '\n';
    print_counters(res.counters);
    return 1;
  }
  std::cout << "solution: s = " << inst.system->format_element(*res.solution)
            << (res.verified ? " (verified: s.x = y)" : " (NOT VERIFIED)")
            << '\n';
  if (res.attempts > 1) std::cout << "attempts: " << res.attempts << '\n';
  print_counters(res.counters);
  return res.verified ? 0 : 1;
}

int do_experiment(const std::string& name, const Config& config,
                  const std::string& out_path) {
  ExperimentReport report = run_experiment(config);
  std::string csv = report.to_csv();
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::string resolved = resolve_out_path(out_path);
    std::ofstream out(resolved, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << resolved << " for writing\n";
      return 2;
    }
    out << csv;
    std::cout << "wrote " << resolved << " (" << report.rows.size()
              << " rows)\n";
    for (const auto& [k, v] : report.aggregates)
      std::cout << "  " << k << " = " << v << '\n';
  }
  (void)name;
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"sact: attacks, reductions and generic-model experiments for "
               "finite semigroup and group actions"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "solve one action-problem instance");
  std::string system_desc, x_text, y_text, attack = "bsgs";
  std::uint64_t seed = 1, budget = 100000;
  bool use_unit_filter = false;
  solve->add_option("--system", system_desc, "system descriptor")->required();
  solve->add_option("--x", x_text, "start point")->required();
  solve->add_option("--y", y_text, "target point")->required();
  solve->add_option("--attack", attack,
                    "attack descriptor (bsgs, rho, exhaustive, "
                    "binary-search-min, sym-fixedpoint, pohlig-hellman, "
                    "recursive-nonunit:chain=...)");
  solve->add_option("--seed", seed, "PRNG seed");
  solve->add_flag("--unit-filter", use_unit_filter,
                  "restrict to the unit subgroup first");
  solve->add_option("--budget", budget, "unit-filter / preimage budget");

  // experiment
  auto* exper = app.add_subcommand("experiment", "run a Monte-Carlo experiment");
  std::string exp_name, config_path, out_path, exp_system, exp_attack;
  std::string adversary = "collision";
  std::uint64_t exp_seed = 1;
  unsigned threads = 1;
  std::vector<std::string> kv;
  std::uint64_t n = 0, k = 0, l = 0, m = 0, trials = 0, retries = 10;
  std::string orders, sizes, m_grid;
  exper->add_option("name", exp_name, "experiment name (see `sact list`)");
  exper->add_option("--config", config_path, "config file (overrides flags)");
  exper->add_option("--n", n, "ground-set / order parameter");
  exper->add_option("--k", k, "subset size k / probe count");
  exper->add_option("--l", l, "subset size l / table size");
  exper->add_option("--m", m, "atom count (semilattice)");
  exper->add_option("--m-grid", m_grid, "operation grid, comma separated");
  exper->add_option("--trials", trials, "trial count");
  exper->add_option("--retries", retries, "rho retry budget");
  exper->add_option("--orders", orders, "orders list, comma separated");
  exper->add_option("--sizes", sizes, "n grid, comma separated");
  exper->add_option("--attack", exp_attack, "attack for scaling");
  exper->add_option("--adversary", adversary, "model adversary name");
  exper->add_option("--system", exp_system, "system descriptor (model-bound)");
  exper->add_option("--seed", exp_seed, "master seed");
  exper->add_option("--threads", threads, "worker threads (default 1)");
  exper->add_option("--out", out_path,
                    "CSV output path (stdout if omitted; relative paths "
                    "resolve under $SACT_OUT_DIR)");

  // check
  auto* check = app.add_subcommand("check", "run the property suites");
  std::uint64_t check_seed = 0xC0FFEE, check_samples = 1000;
  check->add_option("--seed", check_seed, "PRNG seed");
  check->add_option("--samples", check_samples, "samples per law");

  // list
  app.add_subcommand("list", "list systems, attacks, adversaries, experiments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) {
      return do_solve(system_desc, x_text, y_text, attack, seed,
                      use_unit_filter, budget);
    }
    if (exper->parsed()) {
      Config config;
      if (!config_path.empty()) {
        std::ifstream in(config_path, std::ios::binary);
        if (!in) {
          std::cerr << "error: cannot read " << config_path << '\n';
          return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        config = Config::parse(ss.str());
      } else {
        if (exp_name.empty()) {
          std::cerr << "error: experiment name or --config required\n";
          return 2;
        }
        std::vector<std::pair<std::string, std::string>> grid;
        if (n) grid.emplace_back("n", std::to_string(n));
        if (k) grid.emplace_back("k", std::to_string(k));
        if (l) grid.emplace_back("l", std::to_string(l));
        if (m) grid.emplace_back("m", std::to_string(m));
        if (trials) grid.emplace_back("trials", std::to_string(trials));
        if (exp_name == "rho")
          grid.emplace_back("retries", std::to_string(retries));
        if (!orders.empty()) grid.emplace_back("orders", orders);
        if (!sizes.empty()) grid.emplace_back("sizes", sizes);
        if (!m_grid.empty()) grid.emplace_back("m", m_grid);
        if (!exp_attack.empty()) grid.emplace_back("attack", exp_attack);
        if (exp_name == "model-bound")
          grid.emplace_back("adversary", adversary);
        config = experiment_config(exp_name, grid, exp_seed, threads);
        if (!exp_system.empty())
          config.section("system").set("descriptor", exp_system);
      }
      return do_experiment(exp_name, config, out_path);
    }
    if (check->parsed()) {
      CheckOptions opts;
      opts.seed = check_seed;
      opts.samples = check_samples;
      CheckStats stats = run_all_checks(opts, std::cout);
      return stats.ok() ? 0 : 1;
    }
    // list
    std::cout << "systems:\n";
    for (const auto& b : list_system_builders())
      std::cout << "  " << b.name << " (" << b.parameters << "): "
                << b.summary << '\n';
    std::cout << "attacks:\n"
              << "  bsgs (k,l): baby-step giant-step collision table\n"
              << "  rho (retries,steps): Pollard rho with Floyd cycles\n"
              << "  exhaustive: canonical-order carrier scan\n"
              << "  binary-search-min (a): min-chain binary search\n"
              << "  sym-fixedpoint: Sym(X) divide-and-conquer\n"
              << "  pohlig-hellman: prime-power reduction + CRT\n"
              << "  recursive-nonunit (chain): non-unit ideal reductions\n";
    std::cout << "adversaries:\n";
    for (const auto& a : list_adversaries())
      std::cout << "  " << a.name << ": " << a.summary << '\n';
    std::cout << "experiments:\n";
    for (const auto& e : list_experiments())
      std::cout << "  " << e.name << " (" << e.parameters << "): "
                << e.summary << '\n';
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace sact
