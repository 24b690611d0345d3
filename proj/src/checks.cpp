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

#include "sact/checks.hpp"

#include <set>

#include "sact/attacks.hpp"
#include "sact/experiments.hpp"
#include "sact/instances.hpp"
#include "sact/model.hpp"
#include "sact/reduction.hpp"
#include "sact/stats.hpp"

namespace sact {

namespace {

void expect(CheckStats& stats, std::ostream& out, bool ok,
            const std::string& label) {
  (ok ? stats.passed : stats.failed) += 1;
  out << (ok ? "ok   " : "FAIL ") << label << '\n';
}

bool small_carrier(const Semigroup& sg, std::uint64_t bound) {
  return sg.carrier_exact() && sg.carrier_size() <= bound;
}

}  // namespace

CheckStats check_system(std::shared_ptr<const ActionSystem> system,
                        const CheckOptions& opts, std::ostream& out) {
  CheckStats stats;
  const Semigroup& sg = system->semigroup();
  const std::string tag = system->name() + "[" + sg.describe() + "]";
  Prng rng(opts.seed);

  // Associativity on seeded random triples.
  {
    bool ok = true;
    for (std::uint64_t i = 0; i < opts.samples && ok; ++i) {
      Element a = sg.sample(rng), b = sg.sample(rng), c = sg.sample(rng);
      ok = sg.compose(sg.compose(a, b), c) == sg.compose(a, sg.compose(b, c));
    }
    expect(stats, out, ok, tag + ": associativity");
  }

  // Unit laws, exhaustively on small carriers.
  if (auto unit = sg.unit()) {
    bool ok = true;
    if (small_carrier(sg, opts.exhaustive_carrier)) {
      for (std::uint64_t i = 0; i < sg.carrier_size() && ok; ++i) {
        Element s = sg.element_at(i);
        ok = sg.compose(*unit, s) == s && sg.compose(s, *unit) == s;
      }
    } else {
      for (std::uint64_t i = 0; i < opts.samples && ok; ++i) {
        Element s = sg.sample(rng);
        ok = sg.compose(*unit, s) == s && sg.compose(s, *unit) == s;
      }
    }
    expect(stats, out, ok, tag + ": unit laws");

    bool inv_ok = true;
    bool throws_ok = true;
    for (std::uint64_t i = 0; i < opts.samples && inv_ok; ++i) {
      Element s = sg.sample(rng);
      if (sg.is_unit(s)) {
        Element si = sg.invert(s);
        inv_ok = sg.compose(s, si) == *unit && sg.compose(si, s) == *unit;
      } else {
        try {
          (void)sg.invert(s);
          throws_ok = false;
        } catch (const std::domain_error&) {
        }
      }
    }
    expect(stats, out, inv_ok, tag + ": inverse laws on units");
    expect(stats, out, throws_ok, tag + ": invert rejects non-units");
  }

  // Encoding injectivity (elements and points), exhaustively when small.
  if (small_carrier(sg, opts.exhaustive_carrier)) {
    std::set<std::string> seen;
    bool widths = true;
    for (std::uint64_t i = 0; i < sg.carrier_size(); ++i) {
      Element e = sg.element_at(i);
      widths = widths && e.bytes.size() == sg.element_width();
      seen.insert(e.bytes);
    }
    expect(stats, out, seen.size() == sg.carrier_size() && widths,
           tag + ": element encoding injective, fixed width");
  }
  if (system->set_size() <= opts.exhaustive_carrier) {
    std::set<std::string> seen;
    bool widths = true;
    for (std::uint64_t i = 0; i < system->set_size(); ++i) {
      Point p = system->point_at(i);
      widths = widths && p.bytes.size() == system->point_width();
      seen.insert(p.bytes);
    }
    expect(stats, out, seen.size() == system->set_size() && widths,
           tag + ": point encoding injective, fixed width");
  }

  // Compatibility law (st).x = s.(t.x); full sweep when cheap enough.
  {
    bool ok = true;
    std::uint64_t work = 0;
    if (sg.carrier_exact() &&
        sg.carrier_size() * sg.carrier_size() * system->set_size() <=
            (1ULL << 18)) {
      for (std::uint64_t i = 0; i < sg.carrier_size() && ok; ++i) {
        Element s = sg.element_at(i);
        for (std::uint64_t j = 0; j < sg.carrier_size() && ok; ++j) {
          Element t = sg.element_at(j);
          for (std::uint64_t p = 0; p < system->set_size() && ok; ++p) {
            Point x = system->point_at(p);
            ok = system->act(sg.compose(s, t), x) ==
                 system->act(s, system->act(t, x));
            ++work;
          }
        }
      }
    }
    for (; work < opts.samples && ok; ++work) {
      Element s = sg.sample(rng), t = sg.sample(rng);
      Point x = system->sample_point(rng);
      ok = system->act(sg.compose(s, t), x) ==
           system->act(s, system->act(t, x));
    }
    expect(stats, out, ok, tag + ": action compatibility");
  }

  // DH agreement on commutative systems; exhaustive for carriers <= 64.
  if (sg.commutative()) {
    bool ok = true;
    Point x = system->base_point();
    if (small_carrier(sg, 64)) {
      for (std::uint64_t i = 0; i < sg.carrier_size() && ok; ++i) {
        for (std::uint64_t j = 0; j < sg.carrier_size() && ok; ++j) {
          DhTranscript t =
              dh_with(*system, x, sg.element_at(i), sg.element_at(j));
          ok = t.alice_key == t.bob_key;
        }
      }
    } else {
      for (std::uint64_t i = 0; i < opts.samples && ok; ++i) {
        DhTranscript t = dh_simulate(*system, x, rng.next());
        ok = t.alice_key == t.bob_key;
      }
    }
    expect(stats, out, ok, tag + ": DH keys agree");
  }

  // Witness instances verify.
  {
    bool ok = true;
    for (std::uint64_t i = 0; i < 64 && ok; ++i) {
      ProblemInstance inst = sample_instance_random_x(system, rng);
      ok = verify_solution(inst, *inst.witness).verified;
    }
    expect(stats, out, ok, tag + ": witness verifies");
  }

  return stats;
}

namespace {

void check_min_chain_structure(CheckStats& stats, std::ostream& out,
                               const CheckOptions& opts) {
  auto chain = build_min_chain(64, opts.seed);
  Prng rng(opts.seed);
  bool ok = true;
  for (int trial = 0; trial < 32 && ok; ++trial) {
    ProblemInstance inst = sample_instance(chain, rng);
    std::uint64_t s = chain->element_value(*inst.witness);
    std::uint64_t a = chain->chain_length();
    for (std::uint64_t t = 1; t <= chain->chain_length() && ok; ++t) {
      Element te = chain->chain_element(t);
      bool collide =
          chain->act(te, inst.x) == chain->act(te, inst.y);
      ok = collide == (t <= std::min(s, a));
    }
  }
  expect(stats, out, ok, "min-chain: t.x = t.y iff t <= s");
}

void check_flat_structure(CheckStats& stats, std::ostream& out,
                          const CheckOptions& opts) {
  auto flat = build_flat_semilattice(16, opts.seed);
  Point e = flat->top_point();
  bool ok = true;
  for (std::uint64_t i = 1; i <= flat->atom_count() && ok; ++i) {
    Element s = flat->atom(i);
    Point y = flat->act(s, e);
    const Semigroup& sg = flat->semigroup();
    for (std::uint64_t j = 0; j < sg.carrier_size() && ok; ++j) {
      Element t = sg.element_at(j);
      bool collide = flat->act(t, e) == flat->act(t, y);
      // t.e = t.y iff t = ts, i.e. t in {0, s_i}; the top never collides
      // since y != e for atoms.
      bool expected = t == flat->zero_element() || t == s;
      ok = collide == expected;
    }
  }
  expect(stats, out, ok, "flat-semilattice: collisions exactly at {0, s_i}");
}

void check_quotient_welldefined(CheckStats& stats, std::ostream& out,
                                const CheckOptions& opts) {
  auto base = build_cyclic_exp(59, 29, 4);
  auto quotient =
      build_quotient(base, {base->exponents().make(7)});
  Prng rng(opts.seed);
  const Semigroup& sg = base->semigroup();
  const auto& H = quotient->subgroup();
  bool ok = true;
  for (std::uint64_t i = 0; i < opts.samples && ok; ++i) {
    Element s = sg.sample(rng);
    const Element& h = H[rng.below(H.size())];
    Point x = base->sample_point(rng);
    Point lhs = quotient->canonical_point(
        base->act(sg.compose(s, h), x));
    Point rhs = quotient->canonical_point(base->act(s, x));
    ok = lhs == rhs;
  }
  expect(stats, out, ok, "quotient: [sh.x] = [s.x] (well-definedness)");
}

void check_reduction_squares(CheckStats& stats, std::ostream& out,
                             const CheckOptions& opts) {
  auto modmul28 = build_mod_mul(28);
  {
    auto red = nonunit_reduction(
        modmul28,
        Element{encode_le(7, modmul28->semigroup().element_width())});
    auto rep = check_reduction(red, opts.samples, opts.seed);
    expect(stats, out, rep.passed && rep.exhaustive,
           "nonunit reduction (Z_28, m=7): commuting square, exhaustive");
  }

  auto cyc = build_cyclic_exp(29, 28, 2);
  for (std::uint64_t qe : {4ULL, 7ULL}) {
    auto red = ph_power_reduction(cyc, qe);
    auto rep = check_reduction(red, opts.samples, opts.seed);
    expect(stats, out, rep.passed,
           "PH reduction (n=28, q^e=" + std::to_string(qe) +
               "): commuting square");
    auto hom = check_f_homomorphism(red, opts.samples, opts.seed);
    expect(stats, out, hom.passed,
           "PH reduction (q^e=" + std::to_string(qe) +
               "): f is a homomorphism");
  }

  auto exp29 = build_cyclic_exp(59, 29, 4);
  for (std::uint64_t gen : {7ULL, 12ULL}) {
    auto red = automorphism_reduction(
        exp29, {exp29->exponents().make(gen)});
    auto rep = check_reduction(red, opts.samples, opts.seed);
    expect(stats, out, rep.passed,
           "automorphism reduction (H=<" + std::to_string(gen) +
               ">): commuting square");
    auto hom = check_f_homomorphism(red, opts.samples, opts.seed);
    expect(stats, out, hom.passed,
           "automorphism reduction (H=<" + std::to_string(gen) +
               ">): f is a homomorphism");
  }

  // A planted violation must be caught with a counterexample.
  {
    auto red = ph_power_reduction(cyc, 4);
    Reduction corrupted = red;
    auto broken_on = cyc->exponents().make(3);
    corrupted.f = [red, broken_on](const Element& s) {
      Element t = red.f(s);
      if (s == broken_on) {
        std::uint64_t v = decode_le(t.bytes);
        return Element{encode_le((v + 1) % 4, t.bytes.size())};
      }
      return t;
    };
    auto rep = check_reduction(corrupted, opts.samples, opts.seed);
    expect(stats, out, !rep.passed && rep.counterexample.has_value(),
           "corrupted f: check fails with a counterexample");
  }
}

void check_rho_propagation(CheckStats& stats, std::ostream& out,
                           const CheckOptions& opts) {
  // The defining recurrence: if a_i.x = b_j.y then a_{i+r}.x = b_{j+r}.y,
  // because both walks step by z -> f(z).z.
  auto system = build_translation_auto(257);
  const Semigroup& sg = system->semigroup();
  Prng rng(opts.seed);

  std::vector<Element> multipliers;
  for (int i = 0; i < 16; ++i) multipliers.push_back(sg.sample(rng));
  auto f = [&](const Point& z) -> const Element& {
    return multipliers[fnv1a64(z.bytes) % multipliers.size()];
  };

  ProblemInstance inst = sample_instance(system, rng);
  Element a = sg.sample(rng);
  Point az = system->act(a, inst.x);
  Element b = sg.sample(rng);
  Point bz = system->act(b, inst.y);

  // March the walks until the point sequences collide, then test shifts.
  std::vector<Point> a_pts{az}, b_pts{bz};
  for (int step = 0; step < 4096; ++step) {
    a_pts.push_back(system->act(f(a_pts.back()), a_pts.back()));
    b_pts.push_back(system->act(f(b_pts.back()), b_pts.back()));
  }
  bool found = false;
  bool ok = true;
  for (std::size_t i = 0; i < a_pts.size() && !found; ++i) {
    for (std::size_t j = 0; j < b_pts.size() && !found; ++j) {
      if (a_pts[i] == b_pts[j]) {
        found = true;
        for (std::size_t r = 1; i + r < a_pts.size() && j + r < b_pts.size();
             ++r) {
          ok = ok && a_pts[i + r] == b_pts[j + r];
        }
      }
    }
  }
  expect(stats, out, found && ok,
         "rho walks: collisions propagate along both sequences");
}

void check_replay(CheckStats& stats, std::ostream& out,
                  const CheckOptions& opts) {
  auto system = build_cyclic_exp_auto(1009);
  Prng rng(opts.seed);
  ProblemInstance inst = sample_instance(system, rng);

  BsgsParams plan = balanced_bsgs_plan(1009);
  AttackResult r1 = bsgs(inst, plan, 42);
  AttackResult r2 = bsgs(inst, plan, 42);
  expect(stats, out,
         r1.ok() == r2.ok() && r1.counters == r2.counters &&
             (!r1.ok() || *r1.solution == *r2.solution),
         "replay: bsgs is deterministic given the seed");

  auto group = build_translation_auto(1024);
  ProblemInstance ginst = sample_instance(group, rng);
  AttackResult p1 = pollard_rho(ginst, RhoParams{}, 42);
  AttackResult p2 = pollard_rho(ginst, RhoParams{}, 42);
  expect(stats, out,
         p1.ok() == p2.ok() && p1.counters == p2.counters &&
             p1.attempts == p2.attempts,
         "replay: pollard_rho is deterministic given the seed");

  RunOptions ropts;
  ropts.seed = opts.seed;
  ExperimentReport e1 = lemma_intersect_experiment(100, 10, 10, 500, ropts);
  ExperimentReport e2 = lemma_intersect_experiment(100, 10, 10, 500, ropts);
  RunOptions ropts4 = ropts;
  ropts4.threads = 4;
  ExperimentReport e4 = lemma_intersect_experiment(100, 10, 10, 500, ropts4);
  expect(stats, out, e1.to_csv() == e2.to_csv(),
         "replay: experiment CSV is byte-identical");
  expect(stats, out, e1.to_csv() == e4.to_csv(),
         "replay: CSV independent of thread count");
}

void check_bound_experiments(CheckStats& stats, std::ostream& out,
                             const CheckOptions& opts) {
  RunOptions ropts;
  ropts.seed = opts.seed;

  ExperimentReport lemma = lemma_intersect_experiment(100, 10, 10, 2000,
                                                      ropts);
  expect(stats, out, lemma.aggregate("within_bounds") == "1",
         "bounds: lemma-intersect empirical within [1-kl/n, exp(-kl/n)]");

  ExperimentReport law = bsgs_law_experiment(4099, 200, ropts);
  expect(stats, out, law.aggregate("failure_within_bounds") == "1",
         "bounds: bsgs failure rate within the Lemma window");
  expect(stats, out, law.aggregate("all_successes_verified") == "1",
         "bounds: every bsgs success verified");

  ExperimentReport mb = model_bound_experiment(
      build_translation_auto(256), "collision", {8, 16}, 2000, ropts);
  expect(stats, out,
         mb.aggregate("within_bound_m8") == "1" &&
             mb.aggregate("within_bound_m16") == "1",
         "bounds: generic-model success within m^2/(4n) + 3 sigma");
}

}  // namespace

CheckStats run_all_checks(const CheckOptions& opts, std::ostream& out) {
  CheckStats stats;

  std::vector<std::shared_ptr<const ActionSystem>> roster = {
      build_cyclic_exp(59, 29, 4),
      build_cyclic_exp(23, 11, 2),
      build_cyclic_exp(29, 28, 2),
      build_translation_auto(1024),
      build_mod_mul(28),
      build_mod_mul(360),
      build_min_chain(8, opts.seed),
      build_min_chain(1024, opts.seed),
      build_flat_semilattice(4, opts.seed),
      build_flat_semilattice(64, opts.seed),
      build_symmetric(3),
      build_symmetric(8),
      build_quotient(build_cyclic_exp(59, 29, 4),
                     {ZnMulSemigroup(29).make(7)}),
  };
  for (const auto& system : roster) {
    CheckStats s = check_system(system, opts, out);
    stats.passed += s.passed;
    stats.failed += s.failed;
  }

  check_min_chain_structure(stats, out, opts);
  check_flat_structure(stats, out, opts);
  check_quotient_welldefined(stats, out, opts);
  check_reduction_squares(stats, out, opts);
  check_rho_propagation(stats, out, opts);
  check_replay(stats, out, opts);
  check_bound_experiments(stats, out, opts);

  out << (stats.ok() ? "CHECKS PASSED" : "CHECKS FAILED") << " ("
      << stats.passed << " passed, " << stats.failed << " failed)\n";
  return stats;
}

}  // namespace sact
