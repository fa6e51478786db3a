#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "borel/extended_degree.hpp"
#include "borel/monomial.hpp"

using namespace borel;

TEST_CASE("minus infinity is absorbing and below everything") {
  ExtendedDegree bottom = ExtendedDegree::minus_infinity();
  CHECK(!bottom.is_finite());
  CHECK(bottom + 5 == bottom);
  CHECK(bottom - 3 == bottom);
  CHECK(ExtendedDegree::max(bottom, ExtendedDegree(-7)) == ExtendedDegree(-7));
  CHECK(ExtendedDegree::max(bottom, bottom) == bottom);
  CHECK(bottom < ExtendedDegree(-1000000));
  CHECK(bottom.str() == "-inf");
  CHECK(ExtendedDegree(0).str() == "0");
  CHECK(bottom != ExtendedDegree(0));
  CHECK_THROWS_AS(bottom.value(), Error);
}

TEST_CASE("degree arithmetic on finite values") {
  ExtendedDegree d(4);
  CHECK(d + 2 == ExtendedDegree(6));
  CHECK(d - 10 == ExtendedDegree(-6));
  CHECK(ExtendedDegree(3) < ExtendedDegree(4));
  CHECK(ExtendedDegree(4) <= ExtendedDegree(4));
}

TEST_CASE("monomial basics") {
  Monomial u({2, 0, 3});
  CHECK(u.degree() == 5);
  CHECK(u.max_var() == 3);
  CHECK(m_index(u) == 3);
  CHECK(Monomial::one(3).is_one());
  CHECK(Monomial::one(3).max_var() == 0);
  CHECK_THROWS_AS(m_index(Monomial::one(2)), Error);
  CHECK(m_index(Monomial({5, 0})) == 1);
}

TEST_CASE("divisibility, lcm, product, quotient") {
  Monomial a({1, 2, 0}), b({1, 3, 1});
  CHECK(divides(a, b));
  CHECK(!divides(b, a));
  CHECK(lcm(a, b) == Monomial({1, 3, 1}));
  CHECK(product(a, b) == Monomial({2, 5, 1}));
  CHECK(quotient(b, a) == Monomial({0, 1, 1}));
  CHECK(erase_var(b, 2) == Monomial({1, 0, 1}));
  CHECK(colon_var(b, 3) == Monomial({1, 3, 0}));
  CHECK(colon_var(a, 3) == a);
  CHECK(swap_var(Monomial({0, 2}), 1, 2) == Monomial({1, 1}));
}

TEST_CASE("graded lex order sorts by degree, then lex") {
  Monomial x4({4, 0, 0}), y4({0, 4, 0}), x2z3({2, 0, 3}), y3z3({0, 3, 3});
  CHECK(grlex_less(x4, x2z3));   // degree 4 before 5
  CHECK(grlex_less(x4, y4));     // same degree, x first
  CHECK(grlex_less(x2z3, y3z3));
  CHECK(!grlex_less(y4, x4));
}

TEST_CASE("monomial rendering") {
  std::vector<std::string> names{"x", "y", "z"};
  CHECK(to_string(Monomial({2, 0, 3}), names) == "x^2*z^3");
  CHECK(to_string(Monomial({0, 1, 0}), names) == "y");
  CHECK(to_string(Monomial::one(3), names) == "1");
}
