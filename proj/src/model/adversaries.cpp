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

#include <numeric>
#include <stdexcept>

#include "sact/instances.hpp"
#include "sact/model.hpp"

namespace sact {

namespace {

class FixedGuessAdversary final : public Adversary {
 public:
  void run(ModelView& view) override {
    view.extract(view.system().semigroup().element_at(0));
  }
  std::string name() const override { return "fixed-guess"; }
};

class BlindGuessAdversary final : public Adversary {
 public:
  void run(ModelView& view) override {
    view.extract(view.system().semigroup().sample(view.rng()));
  }
  std::string name() const override { return "blind"; }
};

class CollisionAdversary final : public Adversary {
 public:
  CollisionAdversary(std::uint64_t u, std::uint64_t v) : u_(u), v_(v) {}

  void run(ModelView& view) override {
    const Semigroup& sg = view.system().semigroup();
    Prng& rng = view.rng();

    std::vector<std::pair<ModelView::Handle, Element>> from_v1, from_v2;
    from_v1.reserve(u_);
    from_v2.reserve(v_);

    // Interleave the two sides and test each new variable against the
    // opposite list (relation queries are free).
    for (std::uint64_t step = 0; step < u_ + v_; ++step) {
      bool grow_v1 = step % 2 == 0 ? from_v1.size() < u_
                                   : from_v2.size() >= v_;
      if (grow_v1) {
        Element a = sg.sample(rng);
        auto h = view.apply(a, ModelView::kV1);
        for (const auto& [hb, b] : from_v2) {
          if (view.query_equal(h, hb)) {
            view.extract(sg.compose(sg.invert(b), a));
            return;
          }
        }
        from_v1.emplace_back(h, std::move(a));
      } else {
        Element b = sample_unit(sg, rng);
        auto h = view.apply(b, ModelView::kV2);
        for (const auto& [ha, a] : from_v1) {
          if (view.query_equal(ha, h)) {
            view.extract(sg.compose(sg.invert(b), a));
            return;
          }
        }
        from_v2.emplace_back(h, std::move(b));
      }
    }
    view.extract(sg.sample(rng));  // blind fallback
  }

  std::string name() const override { return "collision"; }

 private:
  static Element sample_unit(const Semigroup& sg, Prng& rng) {
    for (int i = 0; i < 4096; ++i) {
      Element e = sg.sample(rng);
      if (sg.is_unit(e)) return e;
    }
    throw std::runtime_error("collision adversary: no unit found");
  }

  std::uint64_t u_, v_;
};

class SymFixedpointAdversary final : public Adversary {
 public:
  void run(ModelView& view) override {
    const auto* sym = dynamic_cast<const SymmetricSystem*>(&view.system());
    if (!sym)
      throw std::invalid_argument(
          "sym-fixedpoint adversary needs a symmetric system");
    const std::uint64_t n = sym->degree();
    const std::uint64_t x = sym->point_value(view.base_x());

    std::vector<std::uint32_t> candidates(n);
    std::iota(candidates.begin(), candidates.end(), 1);

    // c.[s] = [s] iff s.x is a fixed point of c; probing c that fixes
    // exactly half of the candidate set halves it each round.
    while (candidates.size() > 2) {
      std::size_t keep = candidates.size() / 2;
      std::vector<std::uint32_t> left(candidates.begin(),
                                      candidates.begin() + keep);
      std::vector<std::uint32_t> right(candidates.begin() + keep,
                                       candidates.end());
      Element c = shift_on(*sym, right);
      auto h = view.apply(c, ModelView::kV2);
      candidates = view.query_equal(h, ModelView::kV2) ? std::move(left)
                                                       : std::move(right);
    }

    std::uint64_t located = candidates[0];
    if (candidates.size() == 2) {
      // Final pair: one usual collision a.[1] = [s].
      std::uint64_t u = candidates[0];
      Element to_u = map_to(*sym, x, u);
      auto h = view.apply(to_u, ModelView::kV1);
      located = view.query_equal(h, ModelView::kV2) ? u : candidates[1];
    }
    view.extract(map_to(*sym, x, located));
  }

  std::string name() const override { return "sym-fixedpoint"; }

 private:
  static Element shift_on(const SymmetricSystem& sym,
                          const std::vector<std::uint32_t>& moved) {
    std::vector<std::uint32_t> images(sym.degree());
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t i = 0; i < moved.size(); ++i)
      images[moved[i] - 1] = moved[(i + 1) % moved.size()];
    return sym.from_images(images);
  }

  static Element map_to(const SymmetricSystem& sym, std::uint64_t from,
                        std::uint64_t to) {
    return from == to ? *sym.semigroup().unit() : sym.transposition(from, to);
  }
};

}  // namespace

std::unique_ptr<Adversary> make_fixed_guess_adversary() {
  return std::make_unique<FixedGuessAdversary>();
}

std::unique_ptr<Adversary> make_blind_guess_adversary() {
  return std::make_unique<BlindGuessAdversary>();
}

std::unique_ptr<Adversary> make_collision_adversary(std::uint64_t u,
                                                    std::uint64_t v) {
  return std::make_unique<CollisionAdversary>(u, v);
}

std::unique_ptr<Adversary> make_sym_fixedpoint_adversary() {
  return std::make_unique<SymFixedpointAdversary>();
}

std::vector<AdversaryInfo> list_adversaries() {
  return {
      {"fixed-guess", "extracts a fixed element with zero operations"},
      {"blind", "extracts a uniformly random element"},
      {"collision",
       "balanced u+v=m collision search between a.[1] and b.[s]"},
      {"sym-fixedpoint",
       "divide-and-conquer via c.[s]=[s] probes on Sym(X)"},
  };
}

std::unique_ptr<Adversary> make_adversary(const std::string& name,
                                          std::uint64_t m) {
  if (name == "fixed-guess") return make_fixed_guess_adversary();
  if (name == "blind") return make_blind_guess_adversary();
  if (name == "collision") return make_collision_adversary(m / 2, m - m / 2);
  if (name == "sym-fixedpoint") return make_sym_fixedpoint_adversary();
  throw std::invalid_argument("unknown adversary '" + name + "'");
}

}  // namespace sact
