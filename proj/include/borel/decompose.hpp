#pragma once

#include <vector>

#include "borel/ideal.hpp"

namespace borel {

// An irreducible monomial ideal (x_i^{b_i} : b_i >= 1), stored as the
// exponent vector b. b is never the zero vector.
struct IrreducibleComponent {
  std::vector<int> b;

  explicit IrreducibleComponent(std::vector<int> exps) : b(std::move(exps)) {}

  long long total() const {  // |b|
    long long t = 0;
    for (int e : b) t += e;
    return t;
  }

  std::vector<int> support() const {  // 1-based indices with b_i >= 1
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(b.size()); ++i)
      if (b[i] >= 1) s.push_back(i + 1);
    return s;
  }

  // b_i >= 1 exactly for i = 1..k (no gaps).
  bool has_initial_segment_support() const;

  MonomialIdeal to_ideal(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.b == b.b;
  }
  friend bool operator<(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.b < b.b;
  }
};

struct Decomposition {
  std::vector<IrreducibleComponent> components;  // canonical: lex order on b
  MonomialIdeal source;
};

// The unique irredundant irreducible decomposition of a proper nonzero
// monomial ideal, by recursive generator splitting: the lex-first splittable
// generator u = v*w (v its lex-first pure-power factor, v and w coprime) is
// replaced by v in one branch and w in the other; an ideal all of whose
// generators are pure powers is a single component. Sub-ideal results are
// memoized on canonical form; the deduplicated union is then pruned to the
// components minimal under containment.
Decomposition decompose(const MonomialIdeal& I);

// Intersection of the components, minimalized; equals the decomposed ideal.
MonomialIdeal recompose(const std::vector<IrreducibleComponent>& components, int n,
                        const std::vector<std::string>& names = {});

// True iff the components intersect to exactly I and no component can be
// dropped: for each q, the intersection of the others strictly contains I.
bool is_irredundant(const std::vector<IrreducibleComponent>& components,
                    const MonomialIdeal& I);

}  // namespace borel
