#pragma once

#include <string>
#include <vector>

namespace borel {

// A monomial as an exponent vector over a fixed variable count. exps[i] is
// the exponent of variable i+1; all entries are >= 0 and each stays below
// 2^31 (enforced at the construction boundaries).
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }

  int vars() const { return static_cast<int>(exps.size()); }

  long long degree() const {
    long long d = 0;
    for (int e : exps) d += e;
    return d;
  }

  bool is_one() const {
    for (int e : exps)
      if (e != 0) return false;
    return true;
  }

  // Largest 1-based index of a variable dividing the monomial; 0 for 1.
  int max_var() const {
    for (int i = vars(); i >= 1; --i)
      if (exps[i - 1] > 0) return i;
    return 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);

// b / a, assuming a | b.
Monomial quotient(const Monomial& b, const Monomial& a);

// u with the exponent of variable i (1-based) set to zero.
Monomial erase_var(const Monomial& u, int i);

// u / x_i when x_i | u, otherwise u unchanged.
Monomial colon_var(const Monomial& u, int i);

// u * x_i / x_j (1-based indices); requires x_j | u.
Monomial swap_var(const Monomial& u, int i, int j);

// m(u): largest index of a variable dividing u. Errors on u = 1.
int m_index(const Monomial& u);

// Graded lexicographic order used everywhere for canonical generator lists:
// lower degree first, ties broken by lexicographically larger exponent
// vector first (so x^d precedes y^d).
bool grlex_less(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace borel
