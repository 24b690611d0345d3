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

#include <cmath>
#include <unordered_set>

#include "sact/attacks.hpp"
#include "sact/experiments.hpp"
#include "sact/instances.hpp"
#include "sact/parallel.hpp"
#include "sact/reduction.hpp"
#include "sact/registry.hpp"
#include "sact/stats.hpp"

namespace sact {

namespace {

constexpr double kSlack = 3.0;  // Monte-Carlo acceptance slack in sigmas

template <typename RowFn>
void run_trials(ExperimentReport& rep, std::uint64_t trials, unsigned threads,
                RowFn&& fn) {
  std::vector<std::vector<std::string>> rows(trials);
  parallel_for(trials, threads,
               [&](std::uint64_t i) { rows[i] = fn(i); });
  for (auto& r : rows) rep.add_row(std::move(r));
}

std::string yn(bool b) { return b ? "1" : "0"; }

/// Floyd's k-of-n distinct subset sampler; O(k) draws.
std::unordered_set<std::uint64_t> sample_subset(std::uint64_t n,
                                                std::uint64_t k, Prng& rng) {
  std::unordered_set<std::uint64_t> s;
  s.reserve(k * 2);
  for (std::uint64_t j = n - k; j < n; ++j) {
    std::uint64_t t = rng.below(j + 1);
    if (!s.insert(t).second) s.insert(j);
  }
  return s;
}

AttackResult bsgs_with_retries(const ProblemInstance& inst,
                               const BsgsParams& plan, std::uint64_t seed,
                               std::uint64_t retries) {
  AttackResult last;
  QueryCounters total;
  for (std::uint64_t r = 0; r < retries; ++r) {
    last = bsgs(inst, plan,
                splitmix64_mix(seed + (r + 1) * 0x9E3779B97F4A7C15ULL));
    total += last.counters;
    last.attempts = r + 1;
    if (last.ok()) break;
  }
  last.counters = total;
  return last;
}

}  // namespace

ExperimentReport lemma_intersect_experiment(std::uint64_t n, std::uint64_t k,
                                            std::uint64_t l,
                                            std::uint64_t trials,
                                            const RunOptions& opts) {
  if (k > n || l > n)
    throw std::invalid_argument("lemma-intersect: need k, l <= n");
  ExperimentReport rep;
  rep.experiment = "lemma-intersect";
  rep.columns = {"trial", "disjoint"};

  std::vector<int> disjoint(trials);
  run_trials(rep, trials, opts.threads, [&](std::uint64_t i) {
    Prng rng = Prng::stream(opts.seed, i);
    auto a = k ? sample_subset(n, k, rng)
               : std::unordered_set<std::uint64_t>{};
    bool dis = true;
    if (l) {
      for (auto b : sample_subset(n, l, rng)) {
        if (a.count(b)) {
          dis = false;
          break;
        }
      }
    }
    disjoint[i] = dis ? 1 : 0;
    return std::vector<std::string>{std::to_string(i), yn(dis)};
  });

  double hits = 0;
  for (int d : disjoint) hits += d;
  double empirical = hits / static_cast<double>(trials);
  double sigma = binomial_sigma(empirical, trials);
  double ratio = static_cast<double>(k) * static_cast<double>(l) /
                 static_cast<double>(n);
  double lower = std::max(0.0, 1.0 - ratio);
  double upper = std::exp(-ratio);
  rep.add_aggregate("n", static_cast<double>(n));
  rep.add_aggregate("k", static_cast<double>(k));
  rep.add_aggregate("l", static_cast<double>(l));
  rep.add_aggregate("trials", static_cast<double>(trials));
  rep.add_aggregate("empirical_disjoint", empirical);
  rep.add_aggregate("sigma", sigma);
  rep.add_aggregate("lower_bound", lower);
  rep.add_aggregate("upper_bound", upper);
  rep.add_aggregate("within_bounds",
                    yn(empirical >= lower - kSlack * sigma &&
                       empirical <= upper + kSlack * sigma));
  return rep;
}

ExperimentReport bsgs_law_experiment(std::uint64_t n, std::uint64_t trials,
                                     const RunOptions& opts) {
  auto system = build_cyclic_exp_auto(n);
  BsgsParams plan = balanced_bsgs_plan(n);

  ExperimentReport rep;
  rep.experiment = "bsgs-law";
  rep.columns = {"trial",          "success",      "verified",
                 "action_queries", "compositions", "inversions",
                 "equality_tests", "table_entries", "wall_steps"};

  std::vector<int> success(trials), verified(trials);
  run_trials(rep, trials, opts.threads, [&](std::uint64_t i) {
    Prng rng = Prng::stream(opts.seed, i);
    ProblemInstance inst = sample_instance(system, rng);
    AttackResult res = bsgs(inst, plan, rng.next());
    success[i] = res.ok() ? 1 : 0;
    verified[i] = res.verified ? 1 : 0;
    const QueryCounters& c = res.counters;
    return std::vector<std::string>{
        std::to_string(i),
        yn(res.ok()),
        yn(res.verified),
        std::to_string(c.action_queries),
        std::to_string(c.compositions),
        std::to_string(c.inversions),
        std::to_string(c.equality_tests),
        std::to_string(c.table_entries),
        std::to_string(c.wall_steps)};
  });

  double wins = 0, checks = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    wins += success[i];
    checks += (success[i] == verified[i]) ? 1 : 0;
  }
  double rate = wins / static_cast<double>(trials);
  double sigma = binomial_sigma(rate, trials);
  double kl = static_cast<double>(plan.probe_count) *
              static_cast<double>(plan.table_size);
  double fail_lower = std::max(0.0, 1.0 - kl / static_cast<double>(n));
  double fail_upper = std::exp(-kl / static_cast<double>(n));
  rep.add_aggregate("n", static_cast<double>(n));
  rep.add_aggregate("k", static_cast<double>(plan.probe_count));
  rep.add_aggregate("l", static_cast<double>(plan.table_size));
  rep.add_aggregate("success_rate", rate);
  rep.add_aggregate("sigma", sigma);
  rep.add_aggregate("half_minus_3sigma", 0.5 - kSlack * sigma);
  rep.add_aggregate("failure_rate", 1.0 - rate);
  rep.add_aggregate("failure_lower_bound", fail_lower);
  rep.add_aggregate("failure_upper_bound", fail_upper);
  rep.add_aggregate("failure_within_bounds",
                    yn(1.0 - rate >= fail_lower - kSlack * sigma &&
                       1.0 - rate <= fail_upper + kSlack * sigma));
  rep.add_aggregate("success_at_least_half",
                    yn(rate >= 0.5 - kSlack * sigma));
  rep.add_aggregate("all_successes_verified",
                    yn(checks == static_cast<double>(trials)));
  return rep;
}

ExperimentReport rho_experiment(std::uint64_t n, std::uint64_t trials,
                                std::uint64_t retries,
                                const RunOptions& opts) {
  auto system = build_translation_auto(n);

  ExperimentReport rep;
  rep.experiment = "rho";
  rep.columns = {"trial",      "success",        "verified", "attempts",
                 "wall_steps", "action_queries", "wall_over_sqrt_n"};

  const double sqrt_n = std::sqrt(static_cast<double>(n));
  std::vector<int> success(trials), verified(trials);
  std::vector<double> ratios(trials);
  run_trials(rep, trials, opts.threads, [&](std::uint64_t i) {
    Prng rng = Prng::stream(opts.seed, i);
    ProblemInstance inst = sample_instance(system, rng);
    RhoParams params;
    params.max_retries = retries;
    AttackResult res = pollard_rho(inst, params, rng.next());
    success[i] = res.ok() ? 1 : 0;
    verified[i] = res.verified ? 1 : 0;
    ratios[i] = static_cast<double>(res.counters.wall_steps) / sqrt_n;
    return std::vector<std::string>{
        std::to_string(i),
        yn(res.ok()),
        yn(res.verified),
        std::to_string(res.attempts),
        std::to_string(res.counters.wall_steps),
        std::to_string(res.counters.action_queries),
        format_number(ratios[i])};
  });

  double wins = 0, checks = 0;
  std::vector<double> success_ratios;
  for (std::uint64_t i = 0; i < trials; ++i) {
    wins += success[i];
    checks += (success[i] == verified[i]) ? 1 : 0;
    if (success[i]) success_ratios.push_back(ratios[i]);
  }
  double rate = wins / static_cast<double>(trials);
  rep.add_aggregate("n", static_cast<double>(n));
  rep.add_aggregate("retries", static_cast<double>(retries));
  rep.add_aggregate("success_rate", rate);
  rep.add_aggregate("sigma", binomial_sigma(rate, trials));
  rep.add_aggregate("median_wall_over_sqrt_n",
                    success_ratios.empty() ? 0.0 : median(success_ratios));
  rep.add_aggregate("all_successes_verified",
                    yn(checks == static_cast<double>(trials)));
  return rep;
}

ExperimentReport rho_loop_experiment(std::uint64_t n, std::uint64_t trials,
                                     const RunOptions& opts) {
  auto system = build_translation_auto(n);

  ExperimentReport rep;
  rep.experiment = "rho-loops";
  rep.columns = {"trial", "success", "a_loop", "b_loop", "scan_used"};

  std::vector<double> a_loops(trials), b_loops(trials);
  run_trials(rep, trials, opts.threads, [&](std::uint64_t i) {
    Prng rng = Prng::stream(opts.seed, i);
    ProblemInstance inst = sample_instance(system, rng);
    RhoOnceResult res = pollard_rho_once(inst, WalkConfig{}, rng.next());
    a_loops[i] = static_cast<double>(res.a_loop);
    b_loops[i] = static_cast<double>(res.b_loop);
    return std::vector<std::string>{
        std::to_string(i), yn(res.ok()), std::to_string(res.a_loop),
        std::to_string(res.b_loop), std::to_string(res.scan_used)};
  });

  const double sqrt_n = std::sqrt(static_cast<double>(n));
  rep.add_aggregate("n", static_cast<double>(n));
  rep.add_aggregate("median_a_loop_over_sqrt_n", median(a_loops) / sqrt_n);
  rep.add_aggregate("median_b_loop_over_sqrt_n", median(b_loops) / sqrt_n);
  return rep;
}

ExperimentReport ph_experiment(const std::vector<std::uint64_t>& orders,
                               std::uint64_t trials, const RunOptions& opts) {
  ExperimentReport rep;
  rep.experiment = "pohlig-hellman";
  rep.columns = {"order", "trial", "success", "matches_exhaustive",
                 "ph_action_queries"};

  std::uint64_t block = 0;
  for (std::uint64_t order : orders) {
    auto system = build_cyclic_exp_auto(order);
    std::vector<int> match(trials);
    std::vector<double> queries(trials);
    std::vector<std::vector<std::string>> rows(trials);
    parallel_for(trials, opts.threads, [&](std::uint64_t i) {
      Prng rng = Prng::stream(opts.seed, block * trials + i);
      ProblemInstance inst = sample_instance(system, rng);
      AttackResult ph = ph_cyclic_solve(inst, rng.next());
      AttackResult ex = exhaustive(inst);
      bool ok = ph.ok() && ex.ok() && *ph.solution == *ex.solution;
      match[i] = ok ? 1 : 0;
      queries[i] = static_cast<double>(ph.counters.action_queries);
      rows[i] = {std::to_string(order), std::to_string(i), yn(ph.ok()),
                 yn(ok), std::to_string(ph.counters.action_queries)};
    });
    for (auto& r : rows) rep.add_row(std::move(r));
    double matches = 0;
    for (int m : match) matches += m;
    rep.add_aggregate("match_rate_" + std::to_string(order),
                      matches / static_cast<double>(trials));
    rep.add_aggregate("median_ph_queries_" + std::to_string(order),
                      median(queries));
    ++block;
  }

  // Baseline: a standalone balanced BSGS on order-13 instances with the same
  // retry policy as the PH sub-solver.
  {
    auto base13 = build_cyclic_exp_auto(13);
    BsgsParams plan = balanced_bsgs_plan(13);
    std::vector<double> queries(trials);
    parallel_for(trials, opts.threads, [&](std::uint64_t i) {
      Prng rng = Prng::stream(opts.seed, (block + 1) * trials + i);
      ProblemInstance inst = sample_instance(base13, rng);
      AttackResult res = bsgs_with_retries(inst, plan, rng.next(), 32);
      queries[i] = static_cast<double>(res.counters.action_queries);
    });
    rep.add_aggregate("median_bsgs13_queries", median(queries));
  }
  return rep;
}

ExperimentReport model_bound_experiment(
    std::shared_ptr<const ActionSystem> system, const std::string& adversary,
    const std::vector<std::uint64_t>& m_grid, std::uint64_t trials,
    const RunOptions& opts) {
  ExperimentReport rep;
  rep.experiment = "model-bound";
  rep.columns = {"m", "trial", "success", "operations"};

  SystemTraits traits = system->traits();
  bool bound_applies = traits.abelian || traits.free;
  const double n = static_cast<double>(system->set_size());

  std::uint64_t block = 0;
  for (std::uint64_t m : m_grid) {
    std::vector<int> success(trials);
    std::vector<std::vector<std::string>> rows(trials);
    parallel_for(trials, opts.threads, [&](std::uint64_t i) {
      auto adv = make_adversary(adversary, m);
      ModelRunResult rr = run_adversary(
          system, *adv,
          splitmix64_mix(opts.seed + (block * trials + i + 1) *
                                         0x9E3779B97F4A7C15ULL));
      success[i] = rr.success ? 1 : 0;
      rows[i] = {std::to_string(m), std::to_string(i), yn(rr.success),
                 std::to_string(rr.operations)};
    });
    for (auto& r : rows) rep.add_row(std::move(r));

    double wins = 0;
    for (int s : success) wins += s;
    double rate = wins / static_cast<double>(trials);
    double sigma = binomial_sigma(rate, trials);
    double bound = static_cast<double>(m) * static_cast<double>(m) / (4.0 * n);
    std::string sm = std::to_string(m);
    rep.add_aggregate("success_m" + sm, rate);
    rep.add_aggregate("sigma_m" + sm, sigma);
    rep.add_aggregate("bound_m" + sm, bound);
    rep.add_aggregate("within_bound_m" + sm,
                      bound_applies ? yn(rate <= bound + kSlack * sigma)
                                    : std::string("n/a"));
    ++block;
  }
  rep.add_aggregate("n", n);
  rep.add_aggregate("adversary", adversary);
  rep.add_aggregate("bound_applies", yn(bound_applies));
  return rep;
}

ExperimentReport semilattice_probe_experiment(std::uint64_t m,
                                              std::uint64_t trials,
                                              const RunOptions& opts) {
  auto system = build_flat_semilattice(m, opts.seed);
  Point e = system->top_point();

  ExperimentReport rep;
  rep.experiment = "semilattice-probes";
  rep.columns = {"trial", "probes"};

  std::vector<double> probes(trials);
  run_trials(rep, trials, opts.threads, [&](std::uint64_t i) {
    Prng rng = Prng::stream(opts.seed, i);
    Element s = system->atom(1 + rng.below(m));
    Point y = system->act(s, e);
    // Distinct probes t over the atoms in random order; t = 0 and t = 1
    // carry no information about s, so a generic prober skips them.
    std::vector<std::uint32_t> order(m);
    for (std::uint64_t j = 0; j < m; ++j)
      order[j] = static_cast<std::uint32_t>(j + 1);
    std::uint64_t used = 0;
    for (std::uint64_t j = 0; j < m; ++j) {
      std::uint64_t pick = j + rng.below(m - j);
      std::swap(order[j], order[pick]);
      Element t = system->atom(order[j]);
      ++used;
      if (system->act(t, e) == system->act(t, y)) break;
    }
    probes[i] = static_cast<double>(used);
    return std::vector<std::string>{std::to_string(i), std::to_string(used)};
  });

  double threshold = (static_cast<double>(m) + 1.0) / 4.0;
  rep.add_aggregate("m", static_cast<double>(m));
  rep.add_aggregate("mean_probes", mean(probes));
  rep.add_aggregate("expected_probes", (static_cast<double>(m) + 1.0) / 2.0);
  rep.add_aggregate("threshold", threshold);
  rep.add_aggregate("above_threshold", yn(mean(probes) >= threshold));
  return rep;
}

ExperimentReport min_chain_experiment(std::uint64_t n, std::uint64_t trials,
                                      const RunOptions& opts) {
  auto system = build_min_chain(n, opts.seed);

  ExperimentReport rep;
  rep.experiment = "min-chain";
  rep.columns = {"trial", "action_queries", "verified"};

  std::vector<double> queries(trials);
  std::vector<int> verified(trials);
  run_trials(rep, trials, opts.threads, [&](std::uint64_t i) {
    Prng rng = Prng::stream(opts.seed, i);
    ProblemInstance inst = sample_instance(system, rng);
    AttackResult res = binary_search_min(inst, n);
    queries[i] = static_cast<double>(res.counters.action_queries);
    verified[i] = res.verified ? 1 : 0;
    return std::vector<std::string>{
        std::to_string(i), std::to_string(res.counters.action_queries),
        yn(res.verified)};
  });

  double max_queries = 0, all = 1;
  for (std::uint64_t i = 0; i < trials; ++i) {
    max_queries = std::max(max_queries, queries[i]);
    if (!verified[i]) all = 0;
  }
  double bound = 2.0 * (std::ceil(std::log2(static_cast<double>(n))) + 1.0);
  rep.add_aggregate("n", static_cast<double>(n));
  rep.add_aggregate("max_queries", max_queries);
  rep.add_aggregate("query_bound", bound);
  rep.add_aggregate("within_bound", yn(max_queries <= bound));
  rep.add_aggregate("all_verified", yn(all == 1));
  return rep;
}

ExperimentReport sym_rounds_experiment(std::uint64_t n, std::uint64_t trials,
                                       const RunOptions& opts) {
  auto system = build_symmetric(n);

  ExperimentReport rep;
  rep.experiment = "sym-rounds";
  rep.columns = {"trial", "rounds", "verified"};

  std::vector<double> rounds(trials);
  std::vector<int> verified(trials);
  run_trials(rep, trials, opts.threads, [&](std::uint64_t i) {
    Prng rng = Prng::stream(opts.seed, i);
    ProblemInstance inst = sample_instance(system, rng);
    AttackResult res = symmetric_fixedpoint_search(inst);
    rounds[i] = static_cast<double>(res.counters.wall_steps);
    verified[i] = res.verified ? 1 : 0;
    return std::vector<std::string>{std::to_string(i),
                                    std::to_string(res.counters.wall_steps),
                                    yn(res.verified)};
  });

  double max_rounds = 0, all = 1;
  for (std::uint64_t i = 0; i < trials; ++i) {
    max_rounds = std::max(max_rounds, rounds[i]);
    if (!verified[i]) all = 0;
  }
  double bound = std::ceil(std::log2(static_cast<double>(n)));
  rep.add_aggregate("n", static_cast<double>(n));
  rep.add_aggregate("max_rounds", max_rounds);
  rep.add_aggregate("round_bound", bound);
  rep.add_aggregate("within_bound", yn(max_rounds <= bound));
  rep.add_aggregate("all_verified", yn(all == 1));
  return rep;
}

ExperimentReport scaling_experiment(const std::string& attack,
                                    const std::vector<std::uint64_t>& grid,
                                    std::uint64_t trials,
                                    const RunOptions& opts) {
  if (grid.size() < 4)
    throw std::invalid_argument("scaling: need a grid of at least 4 sizes");

  ExperimentReport rep;
  rep.experiment = "scaling";
  rep.columns = {"n", "trial", "metric"};

  std::vector<double> medians;
  std::uint64_t block = 0;
  for (std::uint64_t n : grid) {
    std::shared_ptr<const ActionSystem> system;
    std::shared_ptr<const MinChainSystem> chain;
    if (attack == "rho") {
      system = build_translation_auto(n);
    } else if (attack == "bsgs") {
      system = build_cyclic_exp_auto(n);
    } else if (attack == "exhaustive") {
      system = build_mod_mul(n);
    } else if (attack == "binary-search-min") {
      chain = build_min_chain(n, opts.seed);
      system = chain;
    } else {
      throw std::invalid_argument("scaling: unknown attack '" + attack + "'");
    }

    std::vector<double> metric(trials);
    std::vector<std::vector<std::string>> rows(trials);
    parallel_for(trials, opts.threads, [&](std::uint64_t i) {
      Prng rng = Prng::stream(opts.seed, block * trials + i);
      ProblemInstance inst = sample_instance(system, rng);
      double value = 0;
      if (attack == "rho") {
        AttackResult res = pollard_rho(inst, RhoParams{}, rng.next());
        value = static_cast<double>(res.counters.wall_steps);
      } else if (attack == "bsgs") {
        AttackResult res = bsgs_with_retries(inst, balanced_bsgs_plan(n),
                                             rng.next(), 32);
        value = static_cast<double>(res.counters.action_queries);
      } else if (attack == "exhaustive") {
        AttackResult res = exhaustive(inst);
        value = static_cast<double>(res.counters.action_queries);
      } else {
        AttackResult res = binary_search_min(inst, n);
        value = static_cast<double>(res.counters.action_queries) /
                std::log2(static_cast<double>(n));
      }
      metric[i] = value;
      rows[i] = {std::to_string(n), std::to_string(i), format_number(value)};
    });
    for (auto& r : rows) rep.add_row(std::move(r));
    medians.push_back(median(metric));
    rep.add_aggregate("median_n" + std::to_string(n), medians.back());
    ++block;
  }

  std::vector<double> xs(grid.begin(), grid.end());
  rep.add_aggregate("attack", attack);
  rep.add_aggregate("slope", loglog_slope(xs, medians));
  return rep;
}

// ---------------------------------------------------------------------------
// Config dispatch
// ---------------------------------------------------------------------------

std::vector<ExperimentInfo> list_experiments() {
  return {
      {"lemma-intersect", "n,k,l,trials",
       "random-subset disjointness vs the 1-kl/n and exp(-kl/n) bounds"},
      {"bsgs-law", "n,trials",
       "balanced BSGS success rate on cyclic-exp vs the kl >= n ln 2 law"},
      {"rho", "n,trials,retries",
       "Pollard rho on a translation action: success and sqrt(n) scaling"},
      {"rho-loops", "n,trials", "Floyd loop lengths of single rho attempts"},
      {"pohlig-hellman", "orders,trials",
       "PH vs exhaustive per composite order, plus an order-13 baseline"},
      {"model-bound", "system,adversary,m,trials",
       "generic-model success frequency vs the m^2/(4n) bound"},
      {"semilattice-probes", "m,trials",
       "probes before an informative collision on the flat semilattice"},
      {"min-chain", "n,trials", "binary-search query counts on min-chain"},
      {"sym-rounds", "n,trials", "rounds of the Sym(X) fixed-point search"},
      {"scaling", "attack,sizes,trials",
       "median attack cost over an n-grid with a log-log slope fit"},
  };
}

Config experiment_config(
    const std::string& name,
    const std::vector<std::pair<std::string, std::string>>& grid,
    std::uint64_t seed, unsigned threads) {
  Config cfg;
  auto& exp = cfg.section("experiment");
  exp.set("name", name);
  exp.set("seed", seed);
  exp.set("threads", static_cast<std::uint64_t>(threads));
  auto& g = cfg.section("grid");
  for (const auto& [k, v] : grid) g.set(k, v);
  return cfg;
}

ExperimentReport run_experiment(const Config& config) {
  const ConfigSection* exp = config.find("experiment");
  if (!exp) throw ConfigError("config needs an [experiment] section");
  std::string name = exp->get("name");
  RunOptions opts;
  opts.seed = exp->get_number_or("seed", 1);
  opts.threads = static_cast<unsigned>(exp->get_number_or("threads", 1));

  const ConfigSection* grid = config.find("grid");
  if (!grid) throw ConfigError("config needs a [grid] section");

  if (name == "lemma-intersect")
    return lemma_intersect_experiment(grid->get_number("n"),
                                      grid->get_number("k"),
                                      grid->get_number("l"),
                                      grid->get_number("trials"), opts);
  if (name == "bsgs-law")
    return bsgs_law_experiment(grid->get_number("n"),
                               grid->get_number("trials"), opts);
  if (name == "rho")
    return rho_experiment(grid->get_number("n"), grid->get_number("trials"),
                          grid->get_number_or("retries", 10), opts);
  if (name == "rho-loops")
    return rho_loop_experiment(grid->get_number("n"),
                               grid->get_number("trials"), opts);
  if (name == "pohlig-hellman")
    return ph_experiment(grid->get_number_list("orders"),
                         grid->get_number("trials"), opts);
  if (name == "model-bound") {
    const ConfigSection* sys = config.find("system");
    if (!sys) throw ConfigError("model-bound needs a [system] section");
    return model_bound_experiment(
        build_system(sys->get("descriptor")), grid->get_or("adversary",
                                                           "collision"),
        grid->get_number_list("m"), grid->get_number("trials"), opts);
  }
  if (name == "semilattice-probes")
    return semilattice_probe_experiment(grid->get_number("m"),
                                        grid->get_number("trials"), opts);
  if (name == "min-chain")
    return min_chain_experiment(grid->get_number("n"),
                                grid->get_number("trials"), opts);
  if (name == "sym-rounds")
    return sym_rounds_experiment(grid->get_number("n"),
                                 grid->get_number("trials"), opts);
  if (name == "scaling")
    return scaling_experiment(grid->get("attack"),
                              grid->get_number_list("sizes"),
                              grid->get_number("trials"), opts);
  throw ConfigError("unknown experiment '" + name + "'");
}

}  // namespace sact
