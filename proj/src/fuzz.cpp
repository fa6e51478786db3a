#include "borel/fuzz.hpp"

#include <algorithm>
#include <set>

#include "borel/chain.hpp"
#include "borel/errors.hpp"

namespace borel {

void FuzzConfig::validate() const {
  if (count < 0) fail("config", "count must be >= 0");
  if (n_max < 1 || n_max > 6) fail("config", "n_max must be in 1..6");
  if (exp_max < 1 || exp_max > 12) fail("config", "exp_max must be in 1..12");
  if (depth < 0 || depth > 3) fail("config", "depth must be in 0..3");
  if (ops == 0 || (ops & ~(kOpIntersect | kOpSum | kOpProduct)) != 0)
    fail("config", "ops must be a nonempty subset of {intersect,sum,product}");
}

namespace {

MonomialIdeal random_initial_segment_irreducible(SplitMix64& rng, int n, int exp_max) {
  const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  std::vector<Monomial> gens;
  for (int i = 0; i < k; ++i) {
    Monomial g = Monomial::one(n);
    g.exps[i] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(exp_max)));
    gens.push_back(g);
  }
  return MonomialIdeal::make(n, std::move(gens));
}

MonomialIdeal compose(SplitMix64& rng, const FuzzConfig& cfg, int n, int depth) {
  if (depth == 0 || rng.below(4) == 0)
    return random_initial_segment_irreducible(rng, n, cfg.exp_max);
  std::vector<unsigned> available;
  for (unsigned op : {kOpIntersect, kOpSum, kOpProduct})
    if (cfg.ops & op) available.push_back(op);
  unsigned op = available[rng.below(available.size())];
  MonomialIdeal left = compose(rng, cfg, n, depth - 1);
  MonomialIdeal right = compose(rng, cfg, n, depth - 1);
  switch (op) {
    case kOpIntersect: return intersect(left, right);
    case kOpSum: return sum(left, right);
    default: return product(left, right);
  }
}

}  // namespace

MonomialIdeal fuzz_borel_sample(SplitMix64& rng, const FuzzConfig& cfg) {
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.n_max)));
  return compose(rng, cfg, n, cfg.depth);
}

MonomialIdeal fuzz_borel_sample_n(SplitMix64& rng, const FuzzConfig& cfg, int n) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    MonomialIdeal I = compose(rng, cfg, n, cfg.depth);
    if (I.is_proper() && !I.is_zero() && is_borel_type(I)) return I;
  }
  fail("internal", "fuzz generator failed to produce a Borel-type sample");
}

FuzzResult fuzz_borel(const FuzzConfig& cfg) {
  cfg.validate();
  FuzzResult out;
  SplitMix64 rng(cfg.seed);
  while (static_cast<int>(out.samples.size()) < cfg.count) {
    MonomialIdeal I = fuzz_borel_sample(rng, cfg);
    if (!I.is_proper() || I.is_zero() || !is_borel_type(I)) {
      ++out.discarded;
      if (out.discarded > 100LL * (cfg.count + 1))
        fail("internal", "fuzz generator discards nearly everything");
      continue;
    }
    out.samples.push_back(std::move(I));
  }
  return out;
}

MonomialIdeal random_ideal(SplitMix64& rng, int n, int exp_max, int max_gens) {
  const int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_gens)));
  std::vector<Monomial> gens;
  for (int g = 0; g < count; ++g) {
    Monomial u = Monomial::one(n);
    bool nonconstant = false;
    for (int i = 0; i < n; ++i) {
      u.exps[i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(exp_max + 1)));
      nonconstant = nonconstant || u.exps[i] > 0;
    }
    if (nonconstant) gens.push_back(u);
  }
  if (gens.empty()) {
    Monomial u = Monomial::one(n);
    u.exps[0] = 1;
    gens.push_back(u);
  }
  return MonomialIdeal::make(n, std::move(gens));
}

MonomialIdeal random_strongly_stable(SplitMix64& rng, int n_max, int exp_max) {
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max)));
  const int seeds = 1 + static_cast<int>(rng.below(3));
  std::set<std::vector<int>> closed;
  std::vector<Monomial> frontier;
  for (int s = 0; s < seeds; ++s) {
    Monomial u = Monomial::one(n);
    long long deg = 0;
    for (int i = 0; i < n; ++i) {
      u.exps[i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(exp_max + 1)));
      deg += u.exps[i];
    }
    if (deg == 0) u.exps[0] = 1;
    if (closed.insert(u.exps).second) frontier.push_back(u);
  }
  // Close under the exchanges x_i * u / x_j, i < j: the result is the
  // smallest strongly stable ideal containing the seeds.
  while (!frontier.empty()) {
    Monomial u = frontier.back();
    frontier.pop_back();
    for (int j = 2; j <= n; ++j) {
      if (u.exps[j - 1] == 0) continue;
      for (int i = 1; i < j; ++i) {
        Monomial v = swap_var(u, i, j);
        if (closed.insert(v.exps).second) frontier.push_back(v);
      }
    }
  }
  std::vector<Monomial> gens;
  gens.reserve(closed.size());
  for (const auto& e : closed) gens.emplace_back(e);
  return MonomialIdeal::make(n, std::move(gens));
}

}  // namespace borel
