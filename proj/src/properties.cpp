#include "borel/properties.hpp"

#include <algorithm>
#include <functional>

#include "borel/chain.hpp"
#include "borel/errors.hpp"
#include "borel/invariants.hpp"
#include "borel/parser.hpp"

namespace borel {

namespace {

using CheckFn = std::function<std::optional<Json>(long long)>;

PropertyResult run_one(const std::string& name, long long count, const CheckFn& fn) {
  PropertyResult r;
  r.name = name;
  for (long long i = 0; i < count; ++i) {
    std::optional<Json> cex;
    try {
      cex = fn(i);
    } catch (const Error& e) {
      cex = error_to_json(e);
      (*cex)["sample_index"] = i;
    }
    if (cex) {
      ++r.fails;
      if (!r.first_counterexample) r.first_counterexample = std::move(cex);
    } else {
      ++r.passes;
    }
  }
  return r;
}

Json sample_json(const MonomialIdeal& I) {
  Json j;
  j["sample"] = ideal_to_json(I);
  return j;
}

// The fixed-point algorithm for I:(x_1,...,x_i)^infty, used as an oracle for
// the intersection-of-saturations shortcut.
MonomialIdeal prefix_saturate_by_iteration(const MonomialIdeal& I, int i) {
  MonomialIdeal cur = I;
  for (;;) {
    MonomialIdeal next = colon_by_prefix(cur, i);
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<std::string> curated_non_borel_sources() {
  return {
      "vars x,y; y",
      "vars x,y; y^2",
      "vars x,y; y^3",
      "vars x,y; x*y^2",
      "vars x,y; x^2*y",
      "vars x,y; x^2*y, y^3",
      "vars x,y; x*y",
      "vars x,y,z; x*z, y",
      "vars x,y,z; z",
      "vars x,y,z; y, z",
      "vars x,y,z; y*z",
      "vars x,y,z; x*y*z",
      "vars x,y,z; x*z^2, y^2",
      "vars x,y,z; z^2, x*y",
      "vars x,y,z; y^2*z",
      "vars x,y,z; x^2, y*z",
      "vars w,x,y,z; z",
      "vars w,x,y,z; w*z, x*y",
      "vars w,x,y,z; y*z, w^2",
      "vars w,x,y,z; x*y^2*z",
  };
}

}  // namespace

PropertiesReport run_properties(const FuzzConfig& cfg, bool negative_control) {
  cfg.validate();
  PropertiesReport out;
  if (cfg.count == 0) {
    out.note = "count is 0; every property passes vacuously";
    out.all_pass = true;
    return out;
  }

  // Deterministic corpora; each generator stream owns a fixed seed offset.
  FuzzResult fuzzed = fuzz_borel(cfg);
  const auto& corpus = fuzzed.samples;
  out.samples = static_cast<long long>(corpus.size());
  out.discarded = fuzzed.discarded;

  const long long pair_count = std::max<long long>(1, cfg.count * 2 / 5);
  std::vector<std::pair<MonomialIdeal, MonomialIdeal>> pairs;
  {
    SplitMix64 rng(cfg.seed + 0x70617273);
    for (long long p = 0; p < pair_count; ++p) {
      int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.n_max)));
      MonomialIdeal K = fuzz_borel_sample_n(rng, cfg, n);
      MonomialIdeal L = fuzz_borel_sample_n(rng, cfg, n);
      pairs.emplace_back(std::move(K), std::move(L));
    }
  }

  std::vector<MonomialIdeal> general;
  {
    SplitMix64 rng(cfg.seed + 0x67656e);
    for (int i = 0; i < cfg.count; ++i) {
      int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.n_max)));
      general.push_back(random_ideal(rng, n, cfg.exp_max, 6));
    }
  }

  const long long ss_count = std::max<long long>(1, cfg.count / 5);
  std::vector<MonomialIdeal> strongly_stable;
  {
    SplitMix64 rng(cfg.seed + 0x7373);
    for (long long i = 0; i < ss_count; ++i)
      strongly_stable.push_back(
          random_strongly_stable(rng, std::min(cfg.n_max, 3), std::min(cfg.exp_max, 4)));
  }

  auto add = [&](PropertyResult r) {
    out.all_pass = out.all_pass && r.fails == 0;
    out.results.push_back(std::move(r));
  };

  add(run_one("parse_print_roundtrip", static_cast<long long>(corpus.size() + general.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = i < static_cast<long long>(corpus.size())
                                             ? corpus[i]
                                             : general[i - corpus.size()];
                if (parse_ideal(to_source_string(I)) == I) return std::nullopt;
                Json j = sample_json(I);
                j["printed"] = to_source_string(I);
                return j;
              }));

  add(run_one("lattice_laws", static_cast<long long>(general.size()),
              [&](long long i) -> std::optional<Json> {
                SplitMix64 rng(cfg.seed + 0x6c617473 + i);
                const MonomialIdeal& K = general[i];
                const int n = K.var_count();
                MonomialIdeal L = random_ideal(rng, n, cfg.exp_max, 5);
                MonomialIdeal M = random_ideal(rng, n, cfg.exp_max, 5);
                bool ok = intersect(K, K) == K;
                ok = ok && sum(K, MonomialIdeal::zero(n)) == K;
                ok = ok && intersect(intersect(K, L), M) == intersect(K, intersect(L, M));
                ok = ok && product(K, L) == product(L, K);
                ok = ok && MonomialIdeal::make(n, K.gens(), K.var_names()) == K;
                if (ok) return std::nullopt;
                Json j;
                j["K"] = ideal_to_json(K);
                j["L"] = ideal_to_json(L);
                j["M"] = ideal_to_json(M);
                return j;
              }));

  add(run_one("colon_var_saturate_fixed_point", static_cast<long long>(general.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = general[i];
                for (int v = 1; v <= I.var_count(); ++v) {
                  MonomialIdeal once = colon_var_saturate(I, v);
                  if (colon_var_saturate(once, v) != once) {
                    Json j = sample_json(I);
                    j["variable"] = v;
                    return j;
                  }
                }
                return std::nullopt;
              }));

  add(run_one("prefix_saturation_matches_fixed_point", static_cast<long long>(general.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = general[i];
                for (int v = 1; v <= I.var_count(); ++v) {
                  if (colon_prefix_saturate(I, v) != prefix_saturate_by_iteration(I, v)) {
                    Json j = sample_json(I);
                    j["variable"] = v;
                    return j;
                  }
                }
                return std::nullopt;
              }));

  add(run_one("membership_coherence", static_cast<long long>(pairs.size()),
              [&](long long i) -> std::optional<Json> {
                const auto& [K, L] = pairs[i];
                const int n = K.var_count();
                SplitMix64 rng(cfg.seed + 0x6d656d + i);
                for (int trial = 0; trial < 16; ++trial) {
                  Monomial u = Monomial::one(n);
                  for (int v = 0; v < n; ++v)
                    u.exps[v] = static_cast<int>(
                        rng.below(static_cast<std::uint64_t>(cfg.exp_max + 2)));
                  bool in_meet = member(u, intersect(K, L)) == (member(u, K) && member(u, L));
                  bool in_join = member(u, sum(K, L)) == (member(u, K) || member(u, L));
                  if (!in_meet || !in_join) {
                    Json j;
                    j["K"] = ideal_to_json(K);
                    j["L"] = ideal_to_json(L);
                    j["monomial"] = u.exps;
                    return j;
                  }
                }
                return std::nullopt;
              }));

  add(run_one("truncate_degree_contract", static_cast<long long>(general.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = general[i];
                SplitMix64 rng(cfg.seed + 0x747275 + i);
                long long e = rng.below(static_cast<std::uint64_t>(max_gen_degree(I) + 3));
                MonomialIdeal T = truncate(I, e);
                for (const Monomial& g : T.gens())
                  if (g.degree() < e) return sample_json(I);
                for (long long d = e; d <= e + 2; ++d)
                  if (hilbert_count(T, d) != hilbert_count(I, d)) {
                    Json j = sample_json(I);
                    j["e"] = e;
                    j["d"] = d;
                    return j;
                  }
                return std::nullopt;
              }));

  add(run_one("decompose_recompose", static_cast<long long>(corpus.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = corpus[i];
                Decomposition d = decompose(I);
                if (recompose(d.components, I.var_count(), I.var_names()) == I)
                  return std::nullopt;
                return sample_json(I);
              }));

  add(run_one("decompose_generator_order_invariance", static_cast<long long>(corpus.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = corpus[i];
                SplitMix64 rng(cfg.seed + 0x6f7264 + i);
                std::vector<Monomial> shuffled = I.gens();
                for (std::size_t k = shuffled.size(); k > 1; --k)
                  std::swap(shuffled[k - 1], shuffled[rng.below(k)]);
                MonomialIdeal J = MonomialIdeal::make(I.var_count(), std::move(shuffled),
                                                      I.var_names());
                if (decompose(I).components == decompose(J).components) return std::nullopt;
                return sample_json(I);
              }));

  add(run_one("component_exponents_occur_in_generators", static_cast<long long>(corpus.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = corpus[i];
                for (const IrreducibleComponent& c : decompose(I).components) {
                  for (int v = 0; v < I.var_count(); ++v) {
                    if (c.b[v] == 0) continue;
                    bool found = false;
                    for (const Monomial& g : I.gens()) found = found || g.exps[v] == c.b[v];
                    if (!found) {
                      Json j = sample_json(I);
                      j["component"] = c.b;
                      j["variable"] = v + 1;
                      return j;
                    }
                  }
                }
                return std::nullopt;
              }));

  add(run_one("decomposition_irredundant", static_cast<long long>(corpus.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = corpus[i];
                if (is_irredundant(decompose(I).components, I)) return std::nullopt;
                return sample_json(I);
              }));

  add(run_one("borel_closure_under_ops", static_cast<long long>(pairs.size()),
              [&](long long i) -> std::optional<Json> {
                const auto& [K, L] = pairs[i];
                const char* failed = nullptr;
                if (!is_borel_type(intersect(K, L))) failed = "intersect";
                MonomialIdeal J = sum(K, L);
                if (!failed && J.is_proper() && !is_borel_type(J)) failed = "sum";
                if (!failed && !is_borel_type(product(K, L))) failed = "product";
                if (!failed) return std::nullopt;
                Json j;
                j["K"] = ideal_to_json(K);
                j["L"] = ideal_to_json(L);
                j["operation"] = failed;
                return j;
              }));

  add(run_one("stable_truncations_at_regularity", static_cast<long long>(corpus.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = corpus[i];
                ExtendedDegree reg = report(I, Route::decomposition).reg_ideal;
                for (long long e = reg.value(); e <= reg.value() + 2; ++e)
                  if (!truncation_is_stable(I, e)) {
                    Json j = sample_json(I);
                    j["e"] = e;
                    return j;
                  }
                return std::nullopt;
              }));

  {
    auto sources = curated_non_borel_sources();
    add(run_one("non_borel_truncations_unstable", static_cast<long long>(sources.size()),
                [&](long long i) -> std::optional<Json> {
                  MonomialIdeal I = parse_ideal(sources[i]);
                  if (is_borel_type(I)) {
                    Json j = sample_json(I);
                    j["unexpected"] = "curated ideal is of Borel type";
                    return j;
                  }
                  long long horizon = 2 * max_gen_degree(I) + I.var_count();
                  for (long long e = 0; e <= horizon; ++e)
                    if (truncation_is_stable(I, e)) {
                      Json j = sample_json(I);
                      j["e"] = e;
                      return j;
                    }
                  return std::nullopt;
                }));
  }

  add(run_one("chain_indices_match_a_vector", static_cast<long long>(corpus.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = corpus[i];
                const int n = I.var_count();
                SequentialChain chain = sequential_chain(I);
                std::vector<ExtendedDegree> a = a_vector_decomposition(I);
                std::vector<int> from_a;
                for (int k = 0; k <= n; ++k)
                  if (a[k].is_finite()) from_a.push_back(n - k);
                std::vector<int> from_chain = chain.indices;
                std::sort(from_chain.begin(), from_chain.end(), std::greater<int>());
                if (from_a == from_chain) return std::nullopt;
                Json j = sample_json(I);
                j["chain_indices"] = chain.indices;
                j["a_vector"] = degrees_to_json(a);
                return j;
              }));

  add(run_one("strongly_stable_implies_borel", static_cast<long long>(strongly_stable.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = strongly_stable[i];
                if (is_strongly_stable_colon(I) && is_borel_type(I) && is_stable(I))
                  return std::nullopt;
                return sample_json(I);
              }));

  add(run_one("full_support_satiety_formula", cfg.count,
              [&](long long i) -> std::optional<Json> {
                SplitMix64 rng(cfg.seed + 0x736174 + i);
                int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.n_max)));
                std::vector<int> b(n);
                long long total = 0;
                for (int v = 0; v < n; ++v) {
                  b[v] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.exp_max)));
                  total += b[v];
                }
                MonomialIdeal I = IrreducibleComponent(b).to_ideal();
                if (satiety_quotient(I) == ExtendedDegree(total - n)) return std::nullopt;
                Json j = sample_json(I);
                j["expected"] = total - n;
                return j;
              }));

  add(run_one("satiety_is_component_max", static_cast<long long>(corpus.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = corpus[i];
                ExtendedDegree expected = ExtendedDegree::minus_infinity();
                for (const IrreducibleComponent& c : decompose(I).components)
                  expected = ExtendedDegree::max(
                      expected, satiety_quotient(c.to_ideal(I.var_names())));
                if (satiety_quotient(I) == expected) return std::nullopt;
                Json j = sample_json(I);
                j["satiety"] = degree_to_json(satiety_quotient(I));
                j["component_max"] = degree_to_json(expected);
                return j;
              }));

  add(run_one("satiety_shortcut_calibration",
              static_cast<long long>(corpus.size() + strongly_stable.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I =
                    i < static_cast<long long>(corpus.size())
                        ? corpus[i]
                        : strongly_stable[i - corpus.size()];
                if (!bg_shortcut_applies(I)) return std::nullopt;
                if (satiety_bg_shortcut(I) == satiety_quotient(I)) return std::nullopt;
                Json j = sample_json(I);
                j["shortcut"] = degree_to_json(satiety_bg_shortcut(I));
                j["satiety"] = degree_to_json(satiety_quotient(I));
                return j;
              }));

  add(run_one("route_equality", static_cast<long long>(corpus.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = corpus[i];
                RouteComparison c =
                    compare_routes(I, negative_control && i == 0);
                if (c.agree) return std::nullopt;
                return comparison_to_json(c, I);
              }));

  add(run_one("componentwise_max_of_component_invariants",
              static_cast<long long>(corpus.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = corpus[i];
                const int n = I.var_count();
                std::vector<ExtendedDegree> expected(n + 1,
                                                     ExtendedDegree::minus_infinity());
                for (const IrreducibleComponent& c : decompose(I).components) {
                  // per-component a-vector through the chain route, so the
                  // comparison crosses machinery
                  std::vector<ExtendedDegree> ac = a_vector_chain(c.to_ideal(I.var_names()));
                  for (int k = 0; k <= n; ++k)
                    expected[k] = ExtendedDegree::max(expected[k], ac[k]);
                }
                if (a_vector_decomposition(I) == expected) return std::nullopt;
                Json j = sample_json(I);
                j["componentwise_max"] = degrees_to_json(expected);
                j["a_vector"] = degrees_to_json(a_vector_decomposition(I));
                return j;
              }));

  add(run_one("intersection_bounds_invariants", static_cast<long long>(pairs.size()),
              [&](long long i) -> std::optional<Json> {
                const auto& [K, L] = pairs[i];
                const int n = K.var_count();
                MonomialIdeal I = intersect(K, L);
                std::vector<ExtendedDegree> aI = a_vector_decomposition(I);
                std::vector<ExtendedDegree> aK = a_vector_decomposition(K);
                std::vector<ExtendedDegree> aL = a_vector_decomposition(L);
                InvariantReport rI = report(I, Route::decomposition);
                InvariantReport rK = report(K, Route::decomposition);
                InvariantReport rL = report(L, Route::decomposition);
                for (int k = 0; k <= n; ++k) {
                  bool ok = aI[k] <= ExtendedDegree::max(aK[k], aL[k]);
                  ok = ok && rI.reg_t_module[k] <=
                                 ExtendedDegree::max(rK.reg_t_module[k], rL.reg_t_module[k]);
                  ok = ok && rI.astar_t_module[k] <= ExtendedDegree::max(rK.astar_t_module[k],
                                                                         rL.astar_t_module[k]);
                  if (!ok) {
                    Json j;
                    j["K"] = ideal_to_json(K);
                    j["L"] = ideal_to_json(L);
                    j["k"] = k;
                    return j;
                  }
                }
                return std::nullopt;
              }));

  {
    long long equal_cases = 0, total_cases = 0;
    PropertyResult r =
        run_one("sum_bounds_invariants", static_cast<long long>(pairs.size()),
                [&](long long i) -> std::optional<Json> {
                  const auto& [K, L] = pairs[i];
                  const int n = K.var_count();
                  MonomialIdeal J = sum(K, L);
                  if (!J.is_proper()) return std::nullopt;
                  InvariantReport rJ = report(J, Route::decomposition);
                  InvariantReport rK = report(K, Route::decomposition);
                  InvariantReport rL = report(L, Route::decomposition);
                  for (int t = 0; t <= n; ++t) {
                    const int t1 = std::min(t + 1, n);
                    ExtendedDegree astar_bound =
                        ExtendedDegree::max(rK.astar_t_module[t1], rL.astar_t_module[t1]);
                    if (!(rJ.astar_t_module[t] <= astar_bound)) {
                      Json j;
                      j["K"] = ideal_to_json(K);
                      j["L"] = ideal_to_json(L);
                      j["t"] = t;
                      j["quantity"] = "astar";
                      return j;
                    }
                    ++total_cases;
                    if (rJ.astar_t_module[t] == astar_bound) ++equal_cases;
                    ExtendedDegree reg_bound = ExtendedDegree::max(
                        ExtendedDegree::max(rK.reg_t_module[t], rL.reg_t_module[t]),
                        ExtendedDegree::max(rK.reg_t_module[t1] - 1, rL.reg_t_module[t1] - 1));
                    if (!(rJ.reg_t_module[t] <= reg_bound)) {
                      Json j;
                      j["K"] = ideal_to_json(K);
                      j["L"] = ideal_to_json(L);
                      j["t"] = t;
                      j["quantity"] = "reg";
                      return j;
                    }
                  }
                  return std::nullopt;
                });
    if (total_cases > 0)
      r.note = "a*-bound met with equality in " + std::to_string(equal_cases) + "/" +
               std::to_string(total_cases) + " cases";
    add(std::move(r));
  }

  add(run_one("partial_invariants_monotone", static_cast<long long>(corpus.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = corpus[i];
                for (Route route : {Route::decomposition, Route::chain, Route::oracle}) {
                  InvariantReport r = report(I, route);
                  for (int t = 1; t <= r.n; ++t) {
                    bool ok = r.reg_t_module[t - 1] <= r.reg_t_module[t] &&
                              r.astar_t_module[t - 1] <= r.astar_t_module[t] &&
                              r.reg_t_ideal[t - 1] <= r.reg_t_ideal[t] &&
                              r.astar_t_ideal[t - 1] <= r.astar_t_ideal[t];
                    if (!ok) {
                      Json j = sample_json(I);
                      j["route"] = route_name(route);
                      j["t"] = t;
                      return j;
                    }
                  }
                  if (r.reg != r.reg_t_module[r.n] || r.astar != r.astar_t_module[r.n])
                    return sample_json(I);
                }
                return std::nullopt;
              }));

  add(run_one("strongly_stable_fast_path", static_cast<long long>(strongly_stable.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = strongly_stable[i];
                FastInvariants fast = strongly_stable_fast(I);
                InvariantReport r = report(I, Route::decomposition);
                if (fast.reg_t_ideal == r.reg_t_ideal && fast.astar_t_ideal == r.astar_t_ideal)
                  return std::nullopt;
                Json j = sample_json(I);
                j["fast_reg_t"] = degrees_to_json(fast.reg_t_ideal);
                j["reg_t"] = degrees_to_json(r.reg_t_ideal);
                j["fast_astar_t"] = degrees_to_json(fast.astar_t_ideal);
                j["astar_t"] = degrees_to_json(r.astar_t_ideal);
                return j;
              }));

  add(run_one("regularity_via_stable_truncation", static_cast<long long>(corpus.size()),
              [&](long long i) -> std::optional<Json> {
                const MonomialIdeal& I = corpus[i];
                ExtendedDegree via_truncation = reg_via_stable_truncation(I);
                ExtendedDegree via_shift = report(I, Route::decomposition).reg_ideal;
                if (via_truncation == via_shift) return std::nullopt;
                Json j = sample_json(I);
                j["via_truncation"] = degree_to_json(via_truncation);
                j["via_shift"] = degree_to_json(via_shift);
                return j;
              }));

  {
    const long long field_count = std::min<long long>(corpus.size(), 100);
    PropertyResult r = run_one(
        "betti_field_independence", field_count, [&](long long i) -> std::optional<Json> {
          const MonomialIdeal& I = corpus[i];
          BettiTable q = betti_table(I, Field::rationals);
          BettiTable p = betti_table(I, Field::prime);
          if (q.entries == p.entries) return std::nullopt;
          return sample_json(I);
        });
    r.note = "spot check over GF(" + std::to_string(kOracleFieldPrime) + ")";
    add(std::move(r));
  }

  add(run_one("koszul_binomial_counts", std::max<long long>(1, cfg.count / 5),
              [&](long long i) -> std::optional<Json> {
                SplitMix64 rng(cfg.seed + 0x6b6f73 + i);
                int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.n_max)));
                int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                std::vector<Monomial> gens;
                for (int v = 0; v < k; ++v) {
                  Monomial g = Monomial::one(n);
                  g.exps[v] =
                      1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.exp_max)));
                  gens.push_back(g);
                }
                MonomialIdeal I = MonomialIdeal::make(n, std::move(gens));
                BettiTable t = betti_table(I);
                for (int hom = 0; hom <= t.n; ++hom) {
                  long long total = 0;
                  for (const auto& [key, beta] : t.entries)
                    if (key.first == hom) total += beta;
                  if (total != binomial(k, hom)) {
                    Json j = sample_json(I);
                    j["i"] = hom;
                    j["total"] = total;
                    j["expected"] = binomial(k, hom);
                    return j;
                  }
                }
                return std::nullopt;
              }));

  return out;
}

Json properties_to_json(const PropertiesReport& report) {
  Json j;
  j["all_pass"] = report.all_pass;
  j["samples"] = report.samples;
  j["discarded"] = report.discarded;
  if (!report.note.empty()) j["note"] = report.note;
  Json rows = Json::array();
  for (const PropertyResult& r : report.results) {
    Json row;
    row["name"] = r.name;
    row["passes"] = r.passes;
    row["fails"] = r.fails;
    if (!r.note.empty()) row["note"] = r.note;
    row["first_counterexample"] =
        r.first_counterexample ? *r.first_counterexample : Json(nullptr);
    rows.push_back(std::move(row));
  }
  j["properties"] = std::move(rows);
  return j;
}

}  // namespace borel
