#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "borel/decompose.hpp"
#include "borel/fuzz.hpp"
#include "borel/parser.hpp"

using namespace borel;

namespace {
MonomialIdeal P(const std::string& src) { return parse_ideal(src); }

std::vector<std::vector<int>> component_vectors(const MonomialIdeal& I) {
  std::vector<std::vector<int>> out;
  for (const auto& c : decompose(I).components) out.push_back(c.b);
  return out;
}
}

TEST_CASE("the running example splits into its two published components") {
  auto comps = component_vectors(P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3"));
  CHECK(comps == std::vector<std::vector<int>>{{2, 3, 0}, {4, 4, 3}});
}

TEST_CASE("pure powers and coprime products") {
  CHECK(component_vectors(P("vars x,y,z; x^5")) ==
        std::vector<std::vector<int>>{{5, 0, 0}});
  CHECK(component_vectors(P("vars x,y; x*y")) ==
        std::vector<std::vector<int>>{{0, 1}, {1, 0}});
}

TEST_CASE("zero and unit ideals are rejected") {
  CHECK_THROWS_AS(decompose(MonomialIdeal::zero(2)), Error);
  CHECK_THROWS_AS(decompose(MonomialIdeal::unit(2)), Error);
}

TEST_CASE("recompose inverts decompose on the running example") {
  MonomialIdeal I = P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3");
  Decomposition d = decompose(I);
  CHECK(recompose(d.components, 3, I.var_names()) == I);
  CHECK(recompose({IrreducibleComponent({2, 3, 0}), IrreducibleComponent({4, 4, 3})}, 3) == I);
  CHECK(recompose({IrreducibleComponent({3, 0})}, 2) == P("vars x,y; x^3"));
}

TEST_CASE("irredundance checks") {
  MonomialIdeal I = P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3");
  std::vector<IrreducibleComponent> good{IrreducibleComponent({2, 3, 0}),
                                         IrreducibleComponent({4, 4, 3})};
  CHECK(is_irredundant(good, I));

  std::vector<IrreducibleComponent> padded = good;
  padded.emplace_back(std::vector<int>{5, 5, 5});
  CHECK(!is_irredundant(padded, I));

  CHECK(is_irredundant({IrreducibleComponent({1, 0})}, P("vars x,y; x")));
  CHECK(!is_irredundant({}, P("vars x,y; x")));
}

TEST_CASE("component supports of Borel-type ideals are initial segments") {
  CHECK(IrreducibleComponent({2, 3, 0}).has_initial_segment_support());
  CHECK(!IrreducibleComponent({2, 0, 3}).has_initial_segment_support());
  CHECK(!IrreducibleComponent({0, 0, 0}).has_initial_segment_support());
  CHECK(IrreducibleComponent({4, 4, 3}).support() == std::vector<int>{1, 2, 3});
  CHECK(IrreducibleComponent({4, 4, 3}).total() == 11);
}

TEST_CASE("decomposition is independent of generator order and always recomposes") {
  FuzzConfig cfg;
  cfg.seed = 31;
  cfg.count = 150;
  FuzzResult fz = fuzz_borel(cfg);
  SplitMix64 rng(17);
  for (const MonomialIdeal& I : fz.samples) {
    Decomposition d = decompose(I);
    CHECK(recompose(d.components, I.var_count(), I.var_names()) == I);
    CHECK(is_irredundant(d.components, I));

    std::vector<Monomial> shuffled = I.gens();
    for (std::size_t k = shuffled.size(); k > 1; --k)
      std::swap(shuffled[k - 1], shuffled[rng.below(k)]);
    MonomialIdeal J = MonomialIdeal::make(I.var_count(), std::move(shuffled), I.var_names());
    CHECK(decompose(J).components == d.components);

    for (const IrreducibleComponent& c : d.components) {
      for (int v = 0; v < I.var_count(); ++v) {
        if (c.b[v] == 0) continue;
        bool occurs = false;
        for (const Monomial& g : I.gens()) occurs = occurs || g.exps[v] == c.b[v];
        CHECK(occurs);
      }
    }
  }
}

TEST_CASE("decomposition of arbitrary monomial ideals recomposes") {
  SplitMix64 rng(5150);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    MonomialIdeal I = random_ideal(rng, n, 5, 6);
    Decomposition d = decompose(I);
    CHECK(recompose(d.components, n, I.var_names()) == I);
    CHECK(is_irredundant(d.components, I));
  }
}
