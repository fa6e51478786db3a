#pragma once

#include <map>
#include <utility>
#include <vector>

#include "borel/extended_degree.hpp"
#include "borel/ideal.hpp"

namespace borel {

enum class Field { rationals, prime };
inline constexpr long long kOracleFieldPrime = 32003;

// Scale limits for the homology-based oracle; the environment variable
// BOREL_SCALE_GUARD, when set to an integer, replaces the exponent cap.
struct ScaleGuard {
  int max_vars = 5;
  int max_exponent = 8;
  static ScaleGuard from_env();
};

// Graded Betti numbers of S/I by total degree, with b_i = max{j : beta_{i,j}
// != 0}. beta_{0,0} = 1 and the table ends at homological index n.
struct BettiTable {
  int n = 0;
  std::map<std::pair<int, int>, long long> entries;  // (i, j) -> beta_{i,j}(S/I)
  std::vector<ExtendedDegree> b;                     // b_0..b_n

  long long beta(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
};

// Exact graded Betti numbers of S/I. For each multidegree below the
// componentwise generator-exponent maximum, beta_{i,b}(I) is the rank of
// reduced homology in dimension i-1 of the Koszul upper complex
// {squarefree tau <= b : x^{b-tau} in I}; ranks are computed by exact
// integer elimination (or over GF(32003) when `field` is prime), totalized
// over |b|, and shifted by one homological index to give S/I.
BettiTable betti_table(const MonomialIdeal& I, Field field = Field::rationals);

// b-vector of I as a module: b_i(I) = b_{i+1}(S/I), except b_0(I) which is
// the maximal generator degree.
std::vector<ExtendedDegree> ideal_b_vector(const BettiTable& table_of_quotient);

struct TrungInvariants {
  std::vector<ExtendedDegree> reg_t;   // t = 0..n
  std::vector<ExtendedDegree> astar_t;  // t = 0..n
};

// reg_t(M) = max{b_i - i : i >= n-t} and a*_t(M) = max{b_i : i >= n-t} - n,
// from the resolution degree vector of any finitely generated graded module
// over the same ring.
TrungInvariants trung_invariants(const std::vector<ExtendedDegree>& b, int n);
TrungInvariants trung_invariants(const BettiTable& table);

// a_0(S/I) computed directly as the satiety s(I^sat/I); the oracle's
// independent handle on the 0-th invariant.
ExtendedDegree a0_direct(const MonomialIdeal& I);

}  // namespace borel
