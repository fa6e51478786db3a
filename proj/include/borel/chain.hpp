#pragma once

#include <optional>
#include <vector>

#include "borel/extended_degree.hpp"
#include "borel/ideal.hpp"

namespace borel {

struct BorelTypeCheck {
  bool borel_type = false;
  // Smallest i with I:(x_1,...,x_i)^infty != I:x_i^infty, when not of Borel
  // type.
  std::optional<int> failing_index;
};

// Checks I:(x_1,...,x_i)^infty = I:x_i^infty for every i. Errors on the zero
// and unit ideals.
BorelTypeCheck borel_type_check(const MonomialIdeal& I);
bool is_borel_type(const MonomialIdeal& I);

// Stable: for every minimal generator u and i < m(u), x_i*u/x_{m(u)} in I.
bool is_stable(const MonomialIdeal& I);

// Strongly stable in the colon form: I:(x_1,...,x_i) = I:x_i for every i.
bool is_strongly_stable_colon(const MonomialIdeal& I);

// The chain I = I_0 c I_1 c ... c I_r = S with I_{l+1} = I_l : x_{n_l}^infty
// and n_l = m(I_l). `restricted[l]` is the ideal generated by G(I_l) in the
// subring of the first n_l variables. Defined for Borel-type ideals only.
struct SequentialChain {
  std::vector<MonomialIdeal> ideals;      // I_0, ..., I_r (I_r = S)
  std::vector<int> indices;               // n_0 > n_1 > ... > n_{r-1}
  std::vector<MonomialIdeal> restricted;  // J_0, ..., J_{r-1}
};

SequentialChain sequential_chain(const MonomialIdeal& I);

// s(I^sat/I): the largest degree where I^sat and I have different graded
// pieces; -inf when I is saturated. The downward search starts at
// sum_i (max exponent of x_i over G(I)) - n, which bounds the degree of any
// monomial in I^sat \ I: such a monomial avoids a full-support irreducible
// component m^b, so its i-th exponent is at most b_i - 1, and component
// exponents occur among generator exponents.
ExtendedDegree satiety_quotient(const MonomialIdeal& I);

// True when I:(x_1,...,x_n) = I:x_n, the domain on which the generator
// shortcut below is valid.
bool bg_shortcut_applies(const MonomialIdeal& I);

// On that domain, s(I^sat/I) = (max degree of minimal generators involving
// x_n) - 1, and -inf when no generator involves x_n. Calibrated against
// satiety_quotient, which stays authoritative.
ExtendedDegree satiety_bg_shortcut(const MonomialIdeal& I);

}  // namespace borel
