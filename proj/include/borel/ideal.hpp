#pragma once

#include <functional>
#include <string>
#include <vector>

#include "borel/monomial.hpp"

namespace borel {

std::vector<std::string> default_var_names(int n);

// A monomial ideal held by its minimal generating set, kept canonical: the
// generators form an antichain under divisibility and are sorted in graded
// lex order, so structural equality is ideal equality. Empty generator list
// is the zero ideal; the single generator 1 is the unit ideal. Instances are
// immutable after construction.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  // Minimalizes and sorts. All generators must have `n` exponents.
  static MonomialIdeal make(int n, std::vector<Monomial> gens,
                            std::vector<std::string> names = {});
  static MonomialIdeal zero(int n, std::vector<std::string> names = {});
  static MonomialIdeal unit(int n, std::vector<std::string> names = {});

  int var_count() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  const std::vector<std::string>& var_names() const { return names_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }

  // Monomial membership: some generator divides u.
  bool contains(const Monomial& u) const;
  // Ideal containment: every generator of other lies in *this.
  bool contains(const MonomialIdeal& other) const;

  // Structural equality; display names are ignored.
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
  std::vector<std::string> names_;
};

// The divisibility antichain generating the same ideal, canonically sorted.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

bool member(const Monomial& u, const MonomialIdeal& I);

MonomialIdeal intersect(const MonomialIdeal& K, const MonomialIdeal& L);
MonomialIdeal sum(const MonomialIdeal& K, const MonomialIdeal& L);
MonomialIdeal product(const MonomialIdeal& K, const MonomialIdeal& L);

// I : x_i (single colon step by one variable, 1-based i).
MonomialIdeal colon_by_var(const MonomialIdeal& I, int i);

// I : (x_1,...,x_i)  =  intersection of I : x_j over j <= i.
MonomialIdeal colon_by_prefix(const MonomialIdeal& I, int i);

// I : x_i^infty, computed in one step by zeroing the i-th exponents.
MonomialIdeal colon_var_saturate(const MonomialIdeal& I, int i);

// I : (x_1,...,x_i)^infty. For monomial ideals this equals the intersection
// of the single-variable saturations I : x_j^infty over j <= i (pigeonhole
// on the exponents of a high power), which is how it is computed; the
// fixed-point characterization is kept as a test oracle.
MonomialIdeal colon_prefix_saturate(const MonomialIdeal& I, int i);

// I^sat = I : (x_1,...,x_n)^infty. Errors on the unit ideal.
MonomialIdeal saturation(const MonomialIdeal& I);

// I_{>=e}: the ideal generated by the monomials of degree >= e in I.
MonomialIdeal truncate(const MonomialIdeal& I, long long e);

// Number of degree-d monomials lying in I.
long long hilbert_count(const MonomialIdeal& I, long long d);

// m(I) = max m(u) over minimal generators. Errors on zero and unit ideals.
int m_ideal(const MonomialIdeal& I);

// deg(I): maximum degree of a minimal generator.
long long max_gen_degree(const MonomialIdeal& I);

// The ideal generated by G(I) read in the subring of the first k variables.
// Requires m(I) <= k (no generator may involve a later variable).
MonomialIdeal restrict_prefix(const MonomialIdeal& I, int k);

// Enumerates all exponent vectors of total degree d over n variables in a
// deterministic order; visit returns false to stop early.
void for_each_monomial_of_degree(int n, long long d,
                                 const std::function<bool(const Monomial&)>& visit);

long long binomial(long long a, long long b);

std::string to_source_string(const MonomialIdeal& I);

}  // namespace borel
