#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "borel/chain.hpp"
#include "borel/decompose.hpp"
#include "borel/fuzz.hpp"
#include "borel/parser.hpp"

using namespace borel;

namespace {
MonomialIdeal P(const std::string& src) { return parse_ideal(src); }
}

TEST_CASE("Borel-type check with failing index") {
  CHECK(is_borel_type(P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3")));
  CHECK(is_borel_type(P("vars x,y; x^2, x*y, y^2")));

  BorelTypeCheck c = borel_type_check(P("vars x,y; y"));
  CHECK(!c.borel_type);
  CHECK(c.failing_index == 2);

  CHECK_THROWS_AS(borel_type_check(MonomialIdeal::zero(2)), Error);
  CHECK_THROWS_AS(borel_type_check(MonomialIdeal::unit(2)), Error);
}

TEST_CASE("stability") {
  CHECK(is_stable(P("vars x,y; x^2, x*y, y^2")));
  CHECK(!is_stable(P("vars x,y; x^2, y^3")));  // x*y^3/y = xy^2 is missing
  CHECK(is_stable(P("vars x,y,z; x^4")));
}

TEST_CASE("strong stability in colon form") {
  CHECK(is_strongly_stable_colon(P("vars x,y; x^2, x*y, y^3")));
  CHECK(!is_strongly_stable_colon(P("vars x,y; y")));
  CHECK(is_strongly_stable_colon(P("vars x,y; x")));
  CHECK(is_strongly_stable_colon(P("vars x,y,z; x^2, x*y, y^3")));
}

TEST_CASE("sequential chain of the running example") {
  SequentialChain chain = sequential_chain(P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3"));
  REQUIRE(chain.indices == std::vector<int>{3, 2});
  REQUIRE(chain.ideals.size() == 3);
  CHECK(chain.ideals[1] == P("vars x,y,z; x^2, y^3"));
  CHECK(chain.ideals[2].is_unit());
  CHECK(chain.restricted[0] == P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3"));
  CHECK(chain.restricted[1] == P("vars x,y; x^2, y^3"));
}

TEST_CASE("chains of primary and principal ideals") {
  SequentialChain primary = sequential_chain(P("vars x,y,z; x^4, y^4, z^3"));
  CHECK(primary.indices == std::vector<int>{3});
  CHECK(primary.ideals.size() == 2);
  CHECK(primary.ideals[1].is_unit());

  SequentialChain principal = sequential_chain(P("vars x,y; x^2"));
  CHECK(principal.indices == std::vector<int>{1});
  CHECK(principal.ideals[1].is_unit());
}

TEST_CASE("the chain refuses non-Borel input naming the failing index") {
  try {
    sequential_chain(P("vars x,y; y"));
    FAIL("expected a not_borel_type error");
  } catch (const Error& e) {
    CHECK(e.kind() == "not_borel_type");
    CHECK(std::string(e.what()).find("i = 2") != std::string::npos);
  }
}

TEST_CASE("satiety from the graded quotient") {
  CHECK(satiety_quotient(P("vars x,y,z; x^4, y^4, z^3")) == ExtendedDegree(8));
  CHECK(satiety_quotient(P("vars x,y,z; x^2, y^3")) == ExtendedDegree::minus_infinity());
  CHECK(satiety_quotient(P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3")) == ExtendedDegree(8));
  CHECK(satiety_quotient(P("vars x,y,z; x, y, z")) == ExtendedDegree(0));
  CHECK(satiety_quotient(P("vars x; x^7")) == ExtendedDegree(6));
  CHECK(satiety_quotient(MonomialIdeal::zero(2)) == ExtendedDegree::minus_infinity());
  CHECK_THROWS_AS(satiety_quotient(MonomialIdeal::unit(2)), Error);
}

TEST_CASE("satiety of full-support irreducible ideals is |b| - n") {
  // exhaustive sweep at unit-test scale; the acceptance suite goes to n <= 5
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> b(n, 1);
    for (;;) {
      long long total = 0;
      for (int e : b) total += e;
      CHECK(satiety_quotient(IrreducibleComponent(b).to_ideal()) ==
            ExtendedDegree(total - n));
      int pos = n - 1;
      while (pos >= 0 && b[pos] == 4) b[pos--] = 1;
      if (pos < 0) break;
      ++b[pos];
    }
  }
}

TEST_CASE("satiety equals the max over irreducible components") {
  FuzzConfig cfg;
  cfg.seed = 23;
  cfg.count = 120;
  for (const MonomialIdeal& I : fuzz_borel(cfg).samples) {
    ExtendedDegree expected = ExtendedDegree::minus_infinity();
    for (const IrreducibleComponent& c : decompose(I).components)
      expected = ExtendedDegree::max(expected, satiety_quotient(c.to_ideal()));
    CHECK(satiety_quotient(I) == expected);
  }
}

TEST_CASE("generator shortcut for satiety, pinned one below the top generator degree") {
  // the maximal graded ideal: top x_n-generator degree 1, satiety 0
  CHECK(bg_shortcut_applies(P("vars x,y,z; x, y, z")));
  CHECK(satiety_bg_shortcut(P("vars x,y,z; x, y, z")) == ExtendedDegree(0));

  // stable ideal with a z-generator of degree 2 and satiety 1
  MonomialIdeal I = P("vars x,y,z; x^2, x*y, y^2, x*z");
  REQUIRE(bg_shortcut_applies(I));
  CHECK(satiety_bg_shortcut(I) == ExtendedDegree(1));
  CHECK(satiety_quotient(I) == ExtendedDegree(1));

  // saturated case: no generator involves the last variable
  MonomialIdeal J = P("vars x,y,z; x^2, x*y, y^3");
  REQUIRE(bg_shortcut_applies(J));
  CHECK(satiety_bg_shortcut(J) == ExtendedDegree::minus_infinity());
  CHECK(satiety_quotient(J) == ExtendedDegree::minus_infinity());

  CHECK(!bg_shortcut_applies(P("vars x,y,z; x^4, y^4, z^3")));
  CHECK_THROWS_AS(satiety_bg_shortcut(P("vars x,y,z; x^4, y^4, z^3")), Error);
}

TEST_CASE("shortcut agrees with the quotient satiety wherever it applies") {
  SplitMix64 rng(311);
  int applicable = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng.below(3));
    MonomialIdeal I = random_ideal(rng, n, 4, 5);
    if (!bg_shortcut_applies(I)) continue;
    ++applicable;
    CHECK(satiety_bg_shortcut(I) == satiety_quotient(I));
  }
  CHECK(applicable > 10);  // the precondition domain is actually exercised
}

TEST_CASE("prefix saturation identities behind the Borel-type check") {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    MonomialIdeal I = random_ideal(rng, n, 4, 5);
    for (int i = 1; i <= n; ++i) {
      MonomialIdeal expected = I;
      for (;;) {
        MonomialIdeal next = colon_by_prefix(expected, i);
        if (next == expected) break;
        expected = next;
      }
      CHECK(colon_prefix_saturate(I, i) == expected);
    }
  }
}
