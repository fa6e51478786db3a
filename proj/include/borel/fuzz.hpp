#pragma once

#include <cstdint>
#include <vector>

#include "borel/ideal.hpp"

namespace borel {

// SplitMix64. The sample streams below are pinned to this generator plus
// modulo reduction, so a seed identifies a stream exactly.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, bound) by modulo reduction.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

enum CompositionOp : unsigned {
  kOpIntersect = 1u << 0,
  kOpSum = 1u << 1,
  kOpProduct = 1u << 2,
};

struct FuzzConfig {
  std::uint64_t seed = 1;
  int count = 100;
  int n_max = 4;     // ambient variables per sample, 1..n_max
  int exp_max = 5;   // exponents of the base irreducible ideals, 1..exp_max
  unsigned ops = kOpIntersect | kOpSum;  // composition operations
  int depth = 3;     // composition tree depth

  void validate() const;
};

struct FuzzResult {
  std::vector<MonomialIdeal> samples;  // all pass the Borel-type check
  long long discarded = 0;             // samples failing the check, regenerated
};

// Deterministic stream of Borel-type ideals: each sample composes random
// irreducible ideals with initial-segment support through cfg.ops, then is
// validated; failures are discarded and counted. Intersections and sums of
// Borel-type ideals stay Borel type, so a nonzero discard count under those
// ops indicates a bug.
FuzzResult fuzz_borel(const FuzzConfig& cfg);

// One sample (used by the stream and by tests that want sample #k cheaply).
MonomialIdeal fuzz_borel_sample(SplitMix64& rng, const FuzzConfig& cfg);

// One sample in a fixed ring, for properties that pair ideals.
MonomialIdeal fuzz_borel_sample_n(SplitMix64& rng, const FuzzConfig& cfg, int n);

// Arbitrary (not necessarily Borel-type) nonzero proper monomial ideal in
// exactly n variables, for laws that hold for every monomial ideal.
MonomialIdeal random_ideal(SplitMix64& rng, int n, int exp_max, int max_gens);

// Random strongly stable ideal: a few seed monomials closed under the
// exchange moves x_i * u / x_j for i < j, j in supp(u).
MonomialIdeal random_strongly_stable(SplitMix64& rng, int n_max, int exp_max);

}  // namespace borel
