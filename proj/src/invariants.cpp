#include "borel/invariants.hpp"

#include <algorithm>

#include "borel/chain.hpp"
#include "borel/errors.hpp"

namespace borel {

std::string route_name(Route r) {
  switch (r) {
    case Route::decomposition: return "decomposition";
    case Route::chain: return "chain";
    case Route::oracle: return "oracle";
  }
  return "?";
}

std::optional<Route> route_from_name(const std::string& name) {
  if (name == "decomposition") return Route::decomposition;
  if (name == "chain") return Route::chain;
  if (name == "oracle") return Route::oracle;
  return std::nullopt;
}

namespace {

void require_borel(const MonomialIdeal& I) {
  BorelTypeCheck check = borel_type_check(I);
  if (!check.borel_type)
    fail("not_borel_type",
         "this route is valid for Borel-type ideals only; the defining equality "
         "fails at i = " +
             std::to_string(*check.failing_index));
}

std::vector<ExtendedDegree> running_max(const std::vector<ExtendedDegree>& a, bool add_index) {
  std::vector<ExtendedDegree> out(a.size(), ExtendedDegree::minus_infinity());
  ExtendedDegree acc = ExtendedDegree::minus_infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc = ExtendedDegree::max(acc, add_index ? a[i] + static_cast<long long>(i) : a[i]);
    out[i] = acc;
  }
  return out;
}

}  // namespace

std::vector<ExtendedDegree> a_vector_decomposition(
    const std::vector<IrreducibleComponent>& comps, int n) {
  std::vector<ExtendedDegree> a(n + 1, ExtendedDegree::minus_infinity());
  for (const IrreducibleComponent& c : comps) {
    if (!c.has_initial_segment_support())
      fail("internal",
           "component support is not an initial segment; the decomposition or the "
           "Borel-type check is broken");
    const int s = static_cast<int>(c.support().size());
    const int k = n - s;
    a[k] = ExtendedDegree::max(a[k], ExtendedDegree(c.total() - n));
  }
  return a;
}

std::vector<ExtendedDegree> a_vector_decomposition(const MonomialIdeal& I) {
  require_borel(I);
  return a_vector_decomposition(decompose(I).components, I.var_count());
}

std::vector<ExtendedDegree> a_vector_chain(const MonomialIdeal& I) {
  SequentialChain chain = sequential_chain(I);  // refuses non-Borel input
  const int n = I.var_count();
  std::vector<ExtendedDegree> a(n + 1, ExtendedDegree::minus_infinity());
  for (std::size_t l = 0; l < chain.restricted.size(); ++l) {
    const int nl = chain.indices[l];
    ExtendedDegree s = satiety_quotient(chain.restricted[l]);
    if (!s.is_finite())
      fail("internal", "restricted chain ideal is saturated; chain construction is broken");
    a[n - nl] = s - n + nl;
  }
  return a;
}

std::vector<ExtendedDegree> ideal_a_from_module(const std::vector<ExtendedDegree>& a_module,
                                                int n) {
  std::vector<ExtendedDegree> a(n + 1, ExtendedDegree::minus_infinity());
  for (int i = 1; i <= n - 1; ++i) a[i] = a_module[i - 1];
  if (n >= 1)
    a[n] = ExtendedDegree::max(a_module[n - 1], ExtendedDegree(-static_cast<long long>(n)));
  return a;
}

InvariantReport report(const MonomialIdeal& I, Route route) {
  if (I.is_zero()) fail("zero_ideal", "invariants are undefined for the zero ideal");
  if (I.is_unit()) fail("unit_ideal", "invariants are undefined for the unit ideal");
  const int n = I.var_count();
  InvariantReport r;
  r.n = n;
  r.route = route;
  if (route == Route::oracle) {
    BettiTable table = betti_table(I);
    TrungInvariants module_level = trung_invariants(table);
    TrungInvariants ideal_level = trung_invariants(ideal_b_vector(table), n);
    r.reg_t_module = std::move(module_level.reg_t);
    r.astar_t_module = std::move(module_level.astar_t);
    r.reg_t_ideal = std::move(ideal_level.reg_t);
    r.astar_t_ideal = std::move(ideal_level.astar_t);
    r.sat = a0_direct(I);
  } else {
    std::vector<ExtendedDegree> a =
        route == Route::decomposition ? a_vector_decomposition(I) : a_vector_chain(I);
    std::vector<ExtendedDegree> a_ideal = ideal_a_from_module(a, n);
    r.reg_t_module = running_max(a, true);
    r.astar_t_module = running_max(a, false);
    r.reg_t_ideal = running_max(a_ideal, true);
    r.astar_t_ideal = running_max(a_ideal, false);
    r.sat = a[0];
    r.a_module = std::move(a);
    r.a_ideal = std::move(a_ideal);
  }
  r.reg = r.reg_t_module[n];
  r.astar = r.astar_t_module[n];
  r.reg_ideal = r.reg_t_ideal[n];
  r.astar_ideal = r.astar_t_ideal[n];
  return r;
}

FastInvariants strongly_stable_fast(const MonomialIdeal& I) {
  if (!is_strongly_stable_colon(I))
    fail("precondition", "fast invariants require a strongly stable ideal");
  const int n = I.var_count();
  FastInvariants out;
  out.reg_t_ideal.assign(n + 1, ExtendedDegree::minus_infinity());
  out.astar_t_ideal.assign(n + 1, ExtendedDegree::minus_infinity());
  for (int t = 1; t <= n; ++t) {
    ExtendedDegree reg = ExtendedDegree::minus_infinity();
    ExtendedDegree astar = ExtendedDegree::minus_infinity();
    for (const Monomial& u : I.gens()) {
      const int m = u.max_var();
      if (m <= n - t) continue;
      reg = ExtendedDegree::max(reg, ExtendedDegree(u.degree()));
      astar = ExtendedDegree::max(astar, ExtendedDegree(u.degree() - 1 - n + m));
    }
    out.reg_t_ideal[t] = reg;
    out.astar_t_ideal[t] = astar;
  }
  return out;
}

bool truncation_is_stable(const MonomialIdeal& I, long long e) {
  // Minimal generators of I_{>=e}: the degree-e monomials of I plus the
  // generators of I of larger degree. A stability swap preserves degree, so
  // membership in the truncation is membership in I.
  for (const Monomial& u : I.gens()) {
    if (u.degree() <= e) continue;
    const int m = u.max_var();
    for (int i = 1; i < m; ++i)
      if (!I.contains(swap_var(u, i, m))) return false;
  }
  bool ok = true;
  for_each_monomial_of_degree(I.var_count(), e, [&](const Monomial& u) {
    if (!I.contains(u)) return true;
    const int m = u.max_var();
    for (int i = 1; i < m; ++i) {
      if (!I.contains(swap_var(u, i, m))) {
        ok = false;
        return false;
      }
    }
    return true;
  });
  return ok;
}

ExtendedDegree reg_via_stable_truncation(const MonomialIdeal& I) {
  require_borel(I);
  const long long start = max_gen_degree(I);
  long long cap = start;
  for (int i = 0; i < I.var_count(); ++i) {
    int mx = 0;
    for (const Monomial& g : I.gens()) mx = std::max(mx, g.exps[i]);
    cap += mx;
  }
  for (long long e = start; e <= cap; ++e)
    if (truncation_is_stable(I, e)) return ExtendedDegree(e);
  fail("internal", "no stable truncation found below the search cap");
}

namespace {

std::string render(const std::vector<ExtendedDegree>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

void compare_vectors(RouteComparison& out, const std::string& name,
                     std::vector<std::pair<std::string, std::vector<ExtendedDegree>>> values) {
  QuantityComparison q;
  q.name = name;
  q.equal = true;
  for (std::size_t i = 0; i < values.size(); ++i) {
    q.values.emplace_back(values[i].first, render(values[i].second));
    q.equal = q.equal && values[i].second == values[0].second;
  }
  out.quantities.push_back(std::move(q));
}

}  // namespace

RouteComparison compare_routes(const MonomialIdeal& I, bool corrupt_decomposition) {
  require_borel(I);
  const int n = I.var_count();
  RouteComparison out;

  if (corrupt_decomposition) {
    Decomposition d = decompose(I);
    // Bump an exponent of the component with maximal |b|: its support class
    // maximum strictly increases, so the corruption is always visible.
    std::size_t worst = 0;
    for (std::size_t c = 1; c < d.components.size(); ++c)
      if (d.components[c].total() > d.components[worst].total()) worst = c;
    for (int i = 0; i < n; ++i) {
      if (d.components[worst].b[i] >= 1) {
        ++d.components[worst].b[i];  // keeps the support, shifts |b| by one
        break;
      }
    }
    std::vector<ExtendedDegree> a = a_vector_decomposition(d.components, n);
    InvariantReport r;
    r.n = n;
    r.route = Route::decomposition;
    r.reg_t_module = running_max(a, true);
    r.astar_t_module = running_max(a, false);
    std::vector<ExtendedDegree> a_ideal = ideal_a_from_module(a, n);
    r.reg_t_ideal = running_max(a_ideal, true);
    r.astar_t_ideal = running_max(a_ideal, false);
    r.sat = a[0];
    r.a_module = std::move(a);
    r.a_ideal = std::move(a_ideal);
    r.reg = r.reg_t_module[n];
    r.astar = r.astar_t_module[n];
    r.reg_ideal = r.reg_t_ideal[n];
    r.astar_ideal = r.astar_t_ideal[n];
    out.decomposition = std::move(r);
  } else {
    out.decomposition = report(I, Route::decomposition);
  }
  out.chain = report(I, Route::chain);
  out.oracle = report(I, Route::oracle);

  compare_vectors(out, "a_module",
                  {{"decomposition", *out.decomposition.a_module},
                   {"chain", *out.chain.a_module}});
  compare_vectors(out, "reg_t_module",
                  {{"decomposition", out.decomposition.reg_t_module},
                   {"chain", out.chain.reg_t_module},
                   {"oracle", out.oracle.reg_t_module}});
  compare_vectors(out, "astar_t_module",
                  {{"decomposition", out.decomposition.astar_t_module},
                   {"chain", out.chain.astar_t_module},
                   {"oracle", out.oracle.astar_t_module}});
  compare_vectors(out, "reg_t_ideal",
                  {{"decomposition", out.decomposition.reg_t_ideal},
                   {"chain", out.chain.reg_t_ideal},
                   {"oracle", out.oracle.reg_t_ideal}});
  compare_vectors(out, "astar_t_ideal",
                  {{"decomposition", out.decomposition.astar_t_ideal},
                   {"chain", out.chain.astar_t_ideal},
                   {"oracle", out.oracle.astar_t_ideal}});
  compare_vectors(out, "sat",
                  {{"decomposition", {out.decomposition.sat}},
                   {"chain", {out.chain.sat}},
                   {"oracle", {out.oracle.sat}}});

  out.agree = true;
  for (const QuantityComparison& q : out.quantities) out.agree = out.agree && q.equal;
  return out;
}

}  // namespace borel
