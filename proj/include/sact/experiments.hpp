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
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sact/config.hpp"
#include "sact/model.hpp"
#include "sact/report.hpp"

namespace sact {

/// Common run parameters; a master seed fully determines every report byte.
struct RunOptions {
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

// ---------------------------------------------------------------------------
// Monte-Carlo experiments.  Each returns per-trial rows plus aggregates
// including the paper-side bound columns where a bound exists.
// ---------------------------------------------------------------------------

/// Empirical Pr(A disjoint B) for uniform k- and l-subsets of an n-set,
/// against the bounds 1 - kl/n and exp(-kl/n).
ExperimentReport lemma_intersect_experiment(std::uint64_t n, std::uint64_t k,
                                            std::uint64_t l,
                                            std::uint64_t trials,
                                            const RunOptions& opts);

/// Balanced BSGS on a cyclic-exp action of order n: success frequency vs the
/// k*l >= n ln 2 threshold, with every returned solution verified.
ExperimentReport bsgs_law_experiment(std::uint64_t n, std::uint64_t trials,
                                     const RunOptions& opts);

/// Pollard rho on a translation action of order n: per-seed success within
/// the retry budget, total wall steps, and wall/sqrt(n) ratios.
ExperimentReport rho_experiment(std::uint64_t n, std::uint64_t trials,
                                std::uint64_t retries, const RunOptions& opts);

/// Floyd loop lengths of the rho walks (single attempts, no retries).
ExperimentReport rho_loop_experiment(std::uint64_t n, std::uint64_t trials,
                                     const RunOptions& opts);

/// Pohlig-Hellman vs exhaustive on cyclic-exp instances for each listed
/// order; also solves order-13 baselines for the query-dominance trend.
ExperimentReport ph_experiment(const std::vector<std::uint64_t>& orders,
                               std::uint64_t trials, const RunOptions& opts);

/// Generic-model success frequency of a named adversary on an m-grid,
/// against the m^2/(4n) bound where the system is abelian-or-free.
ExperimentReport model_bound_experiment(
    std::shared_ptr<const ActionSystem> system, const std::string& adversary,
    const std::vector<std::uint64_t>& m_grid, std::uint64_t trials,
    const RunOptions& opts);

/// Distinct probes until the first informative collision t.e = t.y on the
/// flat semilattice with m atoms.
ExperimentReport semilattice_probe_experiment(std::uint64_t m,
                                              std::uint64_t trials,
                                              const RunOptions& opts);

/// Binary-search query counts on a min-chain of length n.
ExperimentReport min_chain_experiment(std::uint64_t n, std::uint64_t trials,
                                      const RunOptions& opts);

/// Rounds used by the fixed-point search on Sym(n).
ExperimentReport sym_rounds_experiment(std::uint64_t n, std::uint64_t trials,
                                       const RunOptions& opts);

/// Median-cost scaling of an attack over an n-grid with a log-log slope fit.
/// attack is one of "rho", "bsgs", "exhaustive", "binary-search-min".
ExperimentReport scaling_experiment(const std::string& attack,
                                    const std::vector<std::uint64_t>& grid,
                                    std::uint64_t trials,
                                    const RunOptions& opts);

// ---------------------------------------------------------------------------
// Config-driven entry point
// ---------------------------------------------------------------------------

struct ExperimentInfo {
  std::string name;
  std::string parameters;
  std::string summary;
};

std::vector<ExperimentInfo> list_experiments();

/// Dispatch by [experiment] name with parameters from [grid]; see
/// docs/formats.md for the config layout.
ExperimentReport run_experiment(const Config& config);

/// Canonical config for a named experiment (used by the CLI to echo the
/// resolved run and by round-trip tests).
Config experiment_config(const std::string& name,
                         const std::vector<std::pair<std::string,
                                                     std::string>>& grid,
                         std::uint64_t seed, unsigned threads);

}  // namespace sact
