#pragma once

#include <optional>
#include <string>
#include <vector>

#include "borel/betti.hpp"
#include "borel/decompose.hpp"
#include "borel/extended_degree.hpp"
#include "borel/ideal.hpp"

namespace borel {

enum class Route { decomposition, chain, oracle };

std::string route_name(Route r);
std::optional<Route> route_from_name(const std::string& name);

// a_k(S/I) for k = 0..n from the irreducible decomposition: the max of
// |b| - n over components with support exactly {1,...,n-k}, -inf when there
// is none. Components of a Borel-type ideal always have initial-segment
// support; anything else signals an upstream bug and errors out.
std::vector<ExtendedDegree> a_vector_decomposition(const MonomialIdeal& I);
std::vector<ExtendedDegree> a_vector_decomposition(const std::vector<IrreducibleComponent>& comps,
                                                   int n);

// a_k(S/I) from the sequential chain: a_{n-n_l}(S/I) = s(J_l^sat/J_l) - n +
// n_l with the satiety computed in the n_l-variable subring; -inf elsewhere.
std::vector<ExtendedDegree> a_vector_chain(const MonomialIdeal& I);

// The ideal-level local cohomology degrees from the module-level ones:
// a_0(I) = -inf, a_i(I) = a_{i-1}(S/I) for 1 <= i <= n-1, and
// a_n(I) = max(a_{n-1}(S/I), -n).
std::vector<ExtendedDegree> ideal_a_from_module(const std::vector<ExtendedDegree>& a_module,
                                                int n);

struct InvariantReport {
  int n = 0;
  Route route = Route::decomposition;
  // Absent for the oracle route, which sees only resolution data.
  std::optional<std::vector<ExtendedDegree>> a_module;  // a_0(S/I)..a_n(S/I)
  std::optional<std::vector<ExtendedDegree>> a_ideal;   // a_0(I)..a_n(I)
  std::vector<ExtendedDegree> reg_t_module, astar_t_module;  // t = 0..n
  std::vector<ExtendedDegree> reg_t_ideal, astar_t_ideal;    // t = 0..n
  ExtendedDegree reg, astar;             // reg_n(S/I), a*_n(S/I)
  ExtendedDegree reg_ideal, astar_ideal;  // reg_n(I), a*_n(I)
  ExtendedDegree sat;                    // a_0(S/I)
};

// Full report along one route. The formula routes require Borel type; the
// oracle route accepts any proper nonzero monomial ideal.
InvariantReport report(const MonomialIdeal& I, Route route);

// reg_t(I) and a*_t(I) for strongly stable ideals straight from the
// generators: for t >= 1,
//   reg_t(I) = max{deg u : u in G(I), m(u) > n-t}
//   a*_t(I)  = max{deg u - 1 - n + m(u) : u in G(I), m(u) > n-t}
// and both are -inf at t = 0. Empty max is -inf.
struct FastInvariants {
  std::vector<ExtendedDegree> reg_t_ideal, astar_t_ideal;
};
FastInvariants strongly_stable_fast(const MonomialIdeal& I);

// reg(I) = min{e >= deg(I) : I_{>=e} is stable}, searched upward with a
// diagnostic cap at deg(I) + sum of per-variable maximal exponents.
ExtendedDegree reg_via_stable_truncation(const MonomialIdeal& I);

// Stability of I_{>=e} without materializing the truncation naively: a
// generator swap x_i*u/x_{m(u)} keeps the degree, so membership in I_{>=e}
// reduces to membership in I.
bool truncation_is_stable(const MonomialIdeal& I, long long e);

struct QuantityComparison {
  std::string name;
  std::vector<std::pair<std::string, std::string>> values;  // route -> rendered value
  bool equal = false;
};

struct RouteComparison {
  bool agree = false;
  std::vector<QuantityComparison> quantities;
  InvariantReport decomposition, chain, oracle;
};

// Computes the report along all three routes and compares, per quantity,
// everything each pair of routes can both see. `corrupt_decomposition` is a
// negative-control fixture: it bumps one exponent of the first component
// before evaluating the decomposition route.
RouteComparison compare_routes(const MonomialIdeal& I, bool corrupt_decomposition = false);

}  // namespace borel
