#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "borel/fuzz.hpp"
#include "borel/ideal.hpp"
#include "borel/parser.hpp"

using namespace borel;

namespace {
MonomialIdeal P(const std::string& src) { return parse_ideal(src); }
}

TEST_CASE("minimalize keeps the divisibility antichain") {
  MonomialIdeal I = MonomialIdeal::make(2, {Monomial({2, 0}), Monomial({2, 1}), Monomial({0, 3})});
  CHECK(I == P("vars x,y; x^2, y^3"));

  // the six pairwise lcms of the running example collapse to four generators
  MonomialIdeal J = MonomialIdeal::make(
      3, {Monomial({4, 0, 0}), Monomial({2, 4, 0}), Monomial({2, 0, 3}), Monomial({4, 3, 0}),
          Monomial({0, 4, 0}), Monomial({0, 3, 3})});
  CHECK(J == P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3"));

  CHECK(MonomialIdeal::make(2, {}).is_zero());
  CHECK_THROWS_AS(MonomialIdeal::make(2, {Monomial({1})}), Error);
}

TEST_CASE("membership is divisibility by some generator") {
  MonomialIdeal I = P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3");
  CHECK(member(Monomial({2, 4, 0}), I));       // y^4 divides x^2y^4
  CHECK(!member(Monomial({1, 2, 2}), I));      // all four generators fail
  CHECK(!member(Monomial::one(3), I));         // 1 is in no proper ideal
  CHECK(member(Monomial::one(2), MonomialIdeal::unit(2)));
  CHECK(!member(Monomial({3, 0}), MonomialIdeal::zero(2)));
  CHECK_THROWS_AS(member(Monomial({1, 1}), I), Error);  // dimension mismatch
}

TEST_CASE("intersection via pairwise lcms") {
  CHECK(intersect(P("vars x,y,z; x^2, y^3"), P("vars x,y,z; x^4, y^4, z^3")) ==
        P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3"));
  MonomialIdeal I = P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3");
  CHECK(intersect(I, MonomialIdeal::unit(3)) == I);
  CHECK(intersect(P("vars x,y,z; x^2, y^2, z^10"), P("vars x,y,z; x^4, y^4")) ==
        P("vars x,y,z; x^4, y^4"));
  CHECK_THROWS_AS(intersect(I, MonomialIdeal::unit(2)), Error);
}

TEST_CASE("sums and products") {
  CHECK(sum(P("vars x,y; x^2"), P("vars x,y; y^3")) == P("vars x,y; x^2, y^3"));
  CHECK(product(P("vars x,y; x"), P("vars x,y; y")) == P("vars x,y; x*y"));
  CHECK(sum(P("vars x,y,z; x^2, y^3"), P("vars x,y,z; x^4, y^4, z^3")) ==
        P("vars x,y,z; x^2, y^3, z^3"));
  CHECK(sum(P("vars x,y; x"), MonomialIdeal::zero(2)) == P("vars x,y; x"));
  CHECK(product(P("vars x,y; x"), MonomialIdeal::zero(2)).is_zero());
}

TEST_CASE("single-variable saturation zeroes exponents") {
  CHECK(colon_var_saturate(P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3"), 3) ==
        P("vars x,y,z; x^2, y^3"));
  CHECK(colon_var_saturate(P("vars x,y; x^2, y^3"), 2).is_unit());
  CHECK(colon_var_saturate(P("vars x,y; x^2"), 2) == P("vars x,y; x^2"));
  CHECK_THROWS_AS(colon_var_saturate(P("vars x; x"), 2), Error);
}

TEST_CASE("prefix saturation") {
  CHECK(colon_prefix_saturate(P("vars x,y; y"), 2) == P("vars x,y; y"));
  CHECK(colon_prefix_saturate(P("vars x,y; x^2, y^3"), 2).is_unit());
  // no generator involves x or y, so the prefix colon fixes the ideal
  CHECK(colon_prefix_saturate(P("vars x,y,z; z^4"), 2) == P("vars x,y,z; z^4"));
}

TEST_CASE("saturation") {
  CHECK(saturation(P("vars x,y,z; x^4, y^4, z^3")).is_unit());
  CHECK(saturation(P("vars x,y,z; x^2, y^3")) == P("vars x,y,z; x^2, y^3"));
  CHECK(saturation(P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3")) == P("vars x,y,z; x^2, y^3"));
  CHECK(saturation(MonomialIdeal::zero(2)).is_zero());
  CHECK_THROWS_AS(saturation(MonomialIdeal::unit(2)), Error);
}

TEST_CASE("truncation") {
  CHECK(truncate(P("vars x,y; x, y"), 2) == P("vars x,y; x^2, x*y, y^2"));
  MonomialIdeal I = P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3");
  CHECK(truncate(I, 0) == I);
  CHECK(truncate(P("vars x,y; x^2, y^3"), 3) == P("vars x,y; x^3, x^2*y, y^3"));
  CHECK(truncate(MonomialIdeal::zero(2), 4).is_zero());
  CHECK(truncate(MonomialIdeal::unit(2), 2) == P("vars x,y; x^2, x*y, y^2"));
}

TEST_CASE("hilbert counts") {
  CHECK(hilbert_count(P("vars x,y; x, y"), 1) == 2);
  for (long long d : {0, 1, 2, 5})
    CHECK(hilbert_count(MonomialIdeal::unit(3), d) == binomial(d + 2, 2));
  CHECK(hilbert_count(P("vars x,y; x^2, y^3"), 4) == 4);  // x^4, x^3y, x^2y^2, xy^3
  CHECK(hilbert_count(MonomialIdeal::zero(3), 2) == 0);
}

TEST_CASE("m invariants of ideals") {
  CHECK(m_ideal(P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3")) == 3);
  CHECK(m_ideal(P("vars x,y,z; x^5")) == 1);
  CHECK_THROWS_AS(m_ideal(MonomialIdeal::zero(2)), Error);
  CHECK_THROWS_AS(m_ideal(MonomialIdeal::unit(2)), Error);
  CHECK(max_gen_degree(P("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3")) == 6);
}

TEST_CASE("restriction to a variable prefix") {
  MonomialIdeal J = restrict_prefix(P("vars x,y,z; x^2, y^3"), 2);
  CHECK(J.var_count() == 2);
  CHECK(J == P("vars x,y; x^2, y^3"));
  CHECK_THROWS_AS(restrict_prefix(P("vars x,y,z; z"), 2), Error);
}

TEST_CASE("lattice laws on random triples") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    MonomialIdeal K = random_ideal(rng, n, 5, 5);
    MonomialIdeal L = random_ideal(rng, n, 5, 5);
    MonomialIdeal M = random_ideal(rng, n, 5, 5);
    CHECK(intersect(K, K) == K);
    CHECK(sum(K, MonomialIdeal::zero(n)) == K);
    CHECK(intersect(intersect(K, L), M) == intersect(K, intersect(L, M)));
    CHECK(product(K, L) == product(L, K));
    CHECK(sum(K, L) == sum(L, K));
  }
}

TEST_CASE("membership coherence under meet and join") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.below(3));
    MonomialIdeal K = random_ideal(rng, n, 4, 4);
    MonomialIdeal L = random_ideal(rng, n, 4, 4);
    Monomial u = Monomial::one(n);
    for (int i = 0; i < n; ++i) u.exps[i] = static_cast<int>(rng.below(7));
    CHECK(member(u, intersect(K, L)) == (member(u, K) && member(u, L)));
    CHECK(member(u, sum(K, L)) == (member(u, K) || member(u, L)));
  }
}

TEST_CASE("truncation agrees with the ideal from its degree upward") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng.below(3));
    MonomialIdeal I = random_ideal(rng, n, 4, 4);
    long long e = rng.below(6);
    MonomialIdeal T = truncate(I, e);
    for (const Monomial& g : T.gens()) CHECK(g.degree() >= e);
    for (long long d = e; d <= e + 3; ++d)
      CHECK(hilbert_count(T, d) == hilbert_count(I, d));
  }
}
