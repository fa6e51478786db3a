#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "borel/json_io.hpp"
#include "borel/parser.hpp"

using namespace borel;

TEST_CASE("parses the running example with four minimal generators") {
  MonomialIdeal I = parse_ideal("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3");
  CHECK(I.var_count() == 3);
  CHECK(I.gens().size() == 4);
  CHECK(I.contains(Monomial({4, 0, 0})));
  CHECK(I.contains(Monomial({0, 3, 3})));
}

TEST_CASE("non-minimal generators are pruned") {
  MonomialIdeal I = parse_ideal("vars x; x, x^2");
  CHECK(I.gens().size() == 1);
  CHECK(I.gens()[0] == Monomial({1}));
}

TEST_CASE("unit and zero ideals") {
  CHECK(parse_ideal("vars x,y; 1").is_unit());
  CHECK(parse_ideal("vars x,y;").is_zero());
}

TEST_CASE("repeated factors accumulate") {
  MonomialIdeal I = parse_ideal("vars x,y; x*x*y^2*x");
  CHECK(I.gens()[0] == Monomial({3, 2}));
}

TEST_CASE("print/parse round trip is the identity on canonical form") {
  for (const char* src : {
           "vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3",
           "vars x,y; 1",
           "vars x,y;",
           "vars a,b,c_2; a^2*b, c_2^7",
       }) {
    MonomialIdeal I = parse_ideal(src);
    CHECK(parse_ideal(to_source_string(I)) == I);
  }
}

TEST_CASE("syntax errors carry a byte position") {
  try {
    parse_ideal("vars x,y; x^");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == "parse");
    CHECK(e.position().has_value());
  }
}

TEST_CASE("unknown variables are rejected") {
  CHECK_THROWS_WITH_AS(parse_ideal("vars x,y; x*w"),
                       doctest::Contains("unknown variable 'w'"), Error);
}

TEST_CASE("duplicate variable names are rejected") {
  CHECK_THROWS_AS(parse_ideal("vars x,x; x"), Error);
}

TEST_CASE("trailing input is rejected") {
  CHECK_THROWS_AS(parse_ideal("vars x; x; y"), Error);
}

TEST_CASE("exponent overflow is a documented error") {
  try {
    parse_ideal("vars x; x^3000000000");
    FAIL("expected an overflow error");
  } catch (const Error& e) {
    CHECK(e.kind() == "overflow");
  }
}

TEST_CASE("JSON input form") {
  MonomialIdeal I = parse_ideal(R"({"vars": ["x","y","z"], "gens": [[4,0,0],[2,0,3],[0,4,0],[0,3,3]]})");
  CHECK(I == parse_ideal("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3"));
  CHECK_THROWS_AS(parse_ideal(R"({"vars": ["x"], "gens": [[-1]]})"), Error);
  CHECK_THROWS_AS(parse_ideal(R"({"vars": ["x"], "gens": [[1,2]]})"), Error);
  CHECK_THROWS_AS(parse_ideal("{broken"), Error);
}

TEST_CASE("JSON round trip through ideal_to_json") {
  MonomialIdeal I = parse_ideal("vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3");
  CHECK(ideal_from_json(ideal_to_json(I)) == I);
}
