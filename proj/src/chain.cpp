#include "borel/chain.hpp"

#include <algorithm>

#include "borel/errors.hpp"

namespace borel {

namespace {

void require_proper_nonzero(const MonomialIdeal& I) {
  if (I.is_zero()) fail("zero_ideal", "operation undefined for the zero ideal");
  if (I.is_unit()) fail("unit_ideal", "operation undefined for the unit ideal");
}

}  // namespace

BorelTypeCheck borel_type_check(const MonomialIdeal& I) {
  require_proper_nonzero(I);
  const int n = I.var_count();
  std::vector<MonomialIdeal> var_sat;
  var_sat.reserve(n);
  for (int i = 1; i <= n; ++i) var_sat.push_back(colon_var_saturate(I, i));
  // The prefix saturation is the intersection of the single-variable
  // saturations, so equality at i amounts to I:x_i^infty lying inside every
  // earlier I:x_j^infty.
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      if (!var_sat[j - 1].contains(var_sat[i - 1]))
        return BorelTypeCheck{false, i};
  return BorelTypeCheck{true, std::nullopt};
}

bool is_borel_type(const MonomialIdeal& I) { return borel_type_check(I).borel_type; }

bool is_stable(const MonomialIdeal& I) {
  require_proper_nonzero(I);
  for (const Monomial& u : I.gens()) {
    const int m = u.max_var();
    for (int i = 1; i < m; ++i)
      if (!I.contains(swap_var(u, i, m))) return false;
  }
  return true;
}

bool is_strongly_stable_colon(const MonomialIdeal& I) {
  require_proper_nonzero(I);
  for (int i = 2; i <= I.var_count(); ++i)
    if (colon_by_prefix(I, i) != colon_by_var(I, i)) return false;
  return true;
}

SequentialChain sequential_chain(const MonomialIdeal& I) {
  BorelTypeCheck check = borel_type_check(I);
  if (!check.borel_type)
    fail("not_borel_type", "the sequential chain is defined for Borel-type ideals; "
                           "the defining equality fails at i = " +
                               std::to_string(*check.failing_index));
  SequentialChain chain;
  MonomialIdeal cur = I;
  chain.ideals.push_back(cur);
  while (!cur.is_unit()) {
    const int m = m_ideal(cur);
    chain.indices.push_back(m);
    chain.restricted.push_back(restrict_prefix(cur, m));
    cur = colon_var_saturate(cur, m);
    chain.ideals.push_back(cur);
  }
  return chain;
}

ExtendedDegree satiety_quotient(const MonomialIdeal& I) {
  if (I.is_unit()) fail("unit_ideal", "satiety is undefined for the unit ideal");
  MonomialIdeal sat = saturation(I);
  if (sat == I) return ExtendedDegree::minus_infinity();
  const int n = I.var_count();
  long long bound = -n;
  for (int i = 0; i < n; ++i) {
    int mx = 0;
    for (const Monomial& g : I.gens()) mx = std::max(mx, g.exps[i]);
    bound += mx;
  }
  for (long long d = bound; d >= 0; --d)
    if (hilbert_count(sat, d) > hilbert_count(I, d)) return ExtendedDegree(d);
  fail("internal", "saturation differs from the ideal but no degree witnesses it");
}

bool bg_shortcut_applies(const MonomialIdeal& I) {
  require_proper_nonzero(I);
  return colon_by_prefix(I, I.var_count()) == colon_by_var(I, I.var_count());
}

ExtendedDegree satiety_bg_shortcut(const MonomialIdeal& I) {
  if (!bg_shortcut_applies(I))
    fail("precondition", "satiety shortcut requires I:(x_1,...,x_n) = I:x_n");
  const int n = I.var_count();
  ExtendedDegree best = ExtendedDegree::minus_infinity();
  for (const Monomial& g : I.gens())
    if (g.exps[n - 1] > 0) best = ExtendedDegree::max(best, ExtendedDegree(g.degree()));
  return best - 1;
}

}  // namespace borel
