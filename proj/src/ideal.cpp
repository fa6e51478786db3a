#include "borel/ideal.hpp"

#include <algorithm>

#include "borel/errors.hpp"

namespace borel {

std::vector<std::string> default_var_names(int n) {
  static const char* small[] = {"x", "y", "z"};
  std::vector<std::string> names;
  names.reserve(n);
  if (n <= 3) {
    for (int i = 0; i < n; ++i) names.emplace_back(small[i]);
  } else {
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  }
  return names;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), grlex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& kept : out) {
      if (divides(kept, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

MonomialIdeal MonomialIdeal::make(int n, std::vector<Monomial> gens,
                                  std::vector<std::string> names) {
  for (const Monomial& g : gens) {
    if (g.vars() != n) fail("dimension_mismatch", "generator has wrong variable count");
    for (int e : g.exps)
      if (e < 0) fail("domain", "negative exponent");
  }
  MonomialIdeal I;
  I.n_ = n;
  I.gens_ = minimalize(std::move(gens));
  I.names_ = names.empty() ? default_var_names(n) : std::move(names);
  if (static_cast<int>(I.names_.size()) != n)
    fail("domain", "variable name list does not match variable count");
  return I;
}

MonomialIdeal MonomialIdeal::zero(int n, std::vector<std::string> names) {
  return make(n, {}, std::move(names));
}

MonomialIdeal MonomialIdeal::unit(int n, std::vector<std::string> names) {
  return make(n, {Monomial::one(n)}, std::move(names));
}

bool MonomialIdeal::contains(const Monomial& u) const {
  if (u.vars() != n_) fail("dimension_mismatch", "monomial has wrong variable count");
  for (const Monomial& g : gens_)
    if (divides(g, u)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (other.n_ != n_) fail("dimension_mismatch", "ideals live in different rings");
  for (const Monomial& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool member(const Monomial& u, const MonomialIdeal& I) { return I.contains(u); }

namespace {

void require_same_ring(const MonomialIdeal& K, const MonomialIdeal& L) {
  if (K.var_count() != L.var_count())
    fail("dimension_mismatch", "ideals live in different rings");
}

}  // namespace

MonomialIdeal intersect(const MonomialIdeal& K, const MonomialIdeal& L) {
  require_same_ring(K, L);
  std::vector<Monomial> cand;
  cand.reserve(K.gens().size() * L.gens().size());
  for (const Monomial& a : K.gens())
    for (const Monomial& b : L.gens()) cand.push_back(lcm(a, b));
  return MonomialIdeal::make(K.var_count(), std::move(cand), K.var_names());
}

MonomialIdeal sum(const MonomialIdeal& K, const MonomialIdeal& L) {
  require_same_ring(K, L);
  std::vector<Monomial> cand = K.gens();
  cand.insert(cand.end(), L.gens().begin(), L.gens().end());
  return MonomialIdeal::make(K.var_count(), std::move(cand), K.var_names());
}

MonomialIdeal product(const MonomialIdeal& K, const MonomialIdeal& L) {
  require_same_ring(K, L);
  std::vector<Monomial> cand;
  cand.reserve(K.gens().size() * L.gens().size());
  for (const Monomial& a : K.gens())
    for (const Monomial& b : L.gens()) cand.push_back(product(a, b));
  return MonomialIdeal::make(K.var_count(), std::move(cand), K.var_names());
}

namespace {

void require_var_index(const MonomialIdeal& I, int i) {
  if (i < 1 || i > I.var_count()) fail("index_range", "variable index out of range");
}

}  // namespace

MonomialIdeal colon_by_var(const MonomialIdeal& I, int i) {
  require_var_index(I, i);
  std::vector<Monomial> cand;
  cand.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) cand.push_back(colon_var(g, i));
  return MonomialIdeal::make(I.var_count(), std::move(cand), I.var_names());
}

MonomialIdeal colon_by_prefix(const MonomialIdeal& I, int i) {
  require_var_index(I, i);
  MonomialIdeal acc = colon_by_var(I, 1);
  for (int j = 2; j <= i; ++j) acc = intersect(acc, colon_by_var(I, j));
  return acc;
}

MonomialIdeal colon_var_saturate(const MonomialIdeal& I, int i) {
  require_var_index(I, i);
  std::vector<Monomial> cand;
  cand.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) cand.push_back(erase_var(g, i));
  return MonomialIdeal::make(I.var_count(), std::move(cand), I.var_names());
}

MonomialIdeal colon_prefix_saturate(const MonomialIdeal& I, int i) {
  require_var_index(I, i);
  MonomialIdeal acc = colon_var_saturate(I, 1);
  for (int j = 2; j <= i; ++j) acc = intersect(acc, colon_var_saturate(I, j));
  return acc;
}

MonomialIdeal saturation(const MonomialIdeal& I) {
  if (I.is_unit()) fail("unit_ideal", "saturation is undefined for the unit ideal");
  return colon_prefix_saturate(I, I.var_count());
}

MonomialIdeal truncate(const MonomialIdeal& I, long long e) {
  if (e < 0) fail("domain", "truncation degree must be >= 0");
  // Minimal generators of I_{>=e} are exactly the degree-e monomials of I
  // together with the minimal generators of I of degree > e.
  std::vector<Monomial> out;
  for (const Monomial& g : I.gens())
    if (g.degree() > e) out.push_back(g);
  bool any_below = false;
  for (const Monomial& g : I.gens()) any_below = any_below || g.degree() <= e;
  if (any_below) {
    for_each_monomial_of_degree(I.var_count(), e, [&](const Monomial& u) {
      if (I.contains(u)) out.push_back(u);
      return true;
    });
  }
  std::sort(out.begin(), out.end(), grlex_less);
  return MonomialIdeal::make(I.var_count(), std::move(out), I.var_names());
}

long long hilbert_count(const MonomialIdeal& I, long long d) {
  if (d < 0) fail("domain", "degree must be >= 0");
  long long count = 0;
  for_each_monomial_of_degree(I.var_count(), d, [&](const Monomial& u) {
    if (I.contains(u)) ++count;
    return true;
  });
  return count;
}

int m_ideal(const MonomialIdeal& I) {
  if (I.is_zero()) fail("zero_ideal", "m(I) is undefined for the zero ideal");
  if (I.is_unit()) fail("unit_ideal", "m(I) is undefined for the unit ideal");
  int m = 0;
  for (const Monomial& g : I.gens()) m = std::max(m, g.max_var());
  return m;
}

long long max_gen_degree(const MonomialIdeal& I) {
  long long d = 0;
  for (const Monomial& g : I.gens()) d = std::max(d, g.degree());
  return d;
}

MonomialIdeal restrict_prefix(const MonomialIdeal& I, int k) {
  if (k < 0 || k > I.var_count()) fail("index_range", "prefix length out of range");
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) {
    if (g.max_var() > k)
      fail("internal", "generator involves a variable beyond the restriction prefix");
    gens.emplace_back(std::vector<int>(g.exps.begin(), g.exps.begin() + k));
  }
  std::vector<std::string> names(I.var_names().begin(), I.var_names().begin() + k);
  return MonomialIdeal::make(k, std::move(gens), std::move(names));
}

void for_each_monomial_of_degree(int n, long long d,
                                 const std::function<bool(const Monomial&)>& visit) {
  if (n == 0) {
    if (d == 0) visit(Monomial::one(0));
    return;
  }
  Monomial u = Monomial::one(n);
  bool stop = false;
  // Distribute degree d over positions pos..n-1, last position takes the rest.
  std::function<void(int, long long)> rec = [&](int pos, long long rest) {
    if (stop) return;
    if (pos == n - 1) {
      u.exps[pos] = static_cast<int>(rest);
      if (!visit(u)) stop = true;
      u.exps[pos] = 0;
      return;
    }
    for (long long e = 0; e <= rest && !stop; ++e) {
      u.exps[pos] = static_cast<int>(e);
      rec(pos + 1, rest - e);
    }
    u.exps[pos] = 0;
  };
  rec(0, d);
}

long long binomial(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::string to_source_string(const MonomialIdeal& I) {
  std::string s = "vars ";
  const auto& names = I.var_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) s += ",";
    s += names[i];
  }
  s += ";";
  for (std::size_t i = 0; i < I.gens().size(); ++i) {
    s += i ? ", " : " ";
    s += to_string(I.gens()[i], names);
  }
  return s;
}

}  // namespace borel
