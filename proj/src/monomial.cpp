#include "borel/monomial.hpp"

#include <algorithm>
#include <limits>

#include "borel/errors.hpp"

namespace borel {

bool divides(const Monomial& a, const Monomial& b) {
  const int n = a.vars();
  for (int i = 0; i < n; ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < r.vars(); ++i) r.exps[i] = std::max(r.exps[i], b.exps[i]);
  return r;
}

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < r.vars(); ++i) {
    long long e = static_cast<long long>(r.exps[i]) + b.exps[i];
    if (e > std::numeric_limits<int>::max())
      fail("overflow", "exponent exceeds 2^31-1 in product");
    r.exps[i] = static_cast<int>(e);
  }
  return r;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r = b;
  for (int i = 0; i < r.vars(); ++i) r.exps[i] -= a.exps[i];
  return r;
}

Monomial erase_var(const Monomial& u, int i) {
  Monomial r = u;
  r.exps[i - 1] = 0;
  return r;
}

Monomial colon_var(const Monomial& u, int i) {
  Monomial r = u;
  if (r.exps[i - 1] > 0) --r.exps[i - 1];
  return r;
}

Monomial swap_var(const Monomial& u, int i, int j) {
  Monomial r = u;
  --r.exps[j - 1];
  ++r.exps[i - 1];
  return r;
}

int m_index(const Monomial& u) {
  int m = u.max_var();
  if (m == 0) fail("domain", "m(u) is undefined for the monomial 1");
  return m;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  long long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exps > b.exps;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < m.vars(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
  }
  return s;
}

}  // namespace borel
