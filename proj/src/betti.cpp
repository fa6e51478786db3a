#include "borel/betti.hpp"

#include <algorithm>
#include <cstdlib>

#include "borel/chain.hpp"
#include "borel/errors.hpp"
#include "borel/linalg.hpp"

namespace borel {

ScaleGuard ScaleGuard::from_env() {
  ScaleGuard g;
  if (const char* raw = std::getenv("BOREL_SCALE_GUARD")) {
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end && *end == '\0' && v > 0) {
      g.max_exponent = static_cast<int>(v);
      g.max_vars = 6;
    }
  }
  return g;
}

namespace {

int rank(const std::vector<std::vector<long long>>& m, Field field) {
  return field == Field::rationals ? rank_exact(m) : rank_mod_p(m, kOracleFieldPrime);
}

// Reduced homology ranks (h_{-1}, h_0, ..., h_{v-1}) of the simplicial
// complex whose faces are the subsets of `vertices` accepted by `has_face`,
// together with an Euler-characteristic self-check. The empty face is part
// of the complex whenever any face is.
std::vector<long long> reduced_homology(const std::vector<int>& vertices,
                                        const std::function<bool(unsigned)>& has_face,
                                        Field field) {
  const int v = static_cast<int>(vertices.size());
  // faces_by_dim[k+1] lists the k-faces as vertex bitmasks, -1 <= k < v.
  std::vector<std::vector<unsigned>> faces_by_dim(v + 1);
  for (unsigned mask = 0; mask < (1u << v); ++mask)
    if (has_face(mask)) faces_by_dim[__builtin_popcount(mask)].push_back(mask);

  std::vector<long long> h(v + 1, 0);
  if (faces_by_dim[0].empty()) return h;  // no faces at all

  // rank of the boundary map from k-faces to (k-1)-faces, per k >= 0
  std::vector<int> boundary_rank(v + 1, 0);
  for (int k = 0; k < v; ++k) {
    const auto& domain = faces_by_dim[k + 1];
    const auto& codomain = faces_by_dim[k];
    if (domain.empty() || codomain.empty()) continue;
    std::vector<std::vector<long long>> m(codomain.size(),
                                          std::vector<long long>(domain.size(), 0));
    for (std::size_t col = 0; col < domain.size(); ++col) {
      unsigned face = domain[col];
      int sign = 1;
      for (int bit = 0; bit < v; ++bit) {
        if (!(face & (1u << bit))) continue;
        unsigned sub = face & ~(1u << bit);
        auto it = std::lower_bound(codomain.begin(), codomain.end(), sub);
        if (it == codomain.end() || *it != sub)
          fail("internal", "complex is not closed under taking faces");
        m[it - codomain.begin()][col] = sign;
        sign = -sign;
      }
    }
    boundary_rank[k + 1] = rank(m, field);
  }

  // h_k = f_k - rank(boundary_k) - rank(boundary_{k+1}) for -1 <= k < v,
  // where f_k counts k-faces and boundary_k maps k-faces to (k-1)-faces.
  long long euler_faces = 0;
  long long euler_homology = 0;
  for (int k = -1; k < v; ++k) {
    long long f = static_cast<long long>(faces_by_dim[k + 1].size());
    long long rank_out = boundary_rank[k + 1];
    long long rank_in = k + 2 <= v ? boundary_rank[k + 2] : 0;
    h[k + 1] = f - rank_out - rank_in;
    if (h[k + 1] < 0) fail("internal", "negative homology rank");
    long long sign = (k + 2) % 2 == 0 ? 1 : -1;
    euler_faces += sign * f;
    euler_homology += sign * h[k + 1];
  }
  if (euler_faces != euler_homology)
    fail("internal", "Euler characteristic mismatch in homology computation");
  return h;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& I, Field field) {
  if (I.is_zero()) fail("zero_ideal", "Betti table undefined for the zero ideal");
  if (I.is_unit()) fail("unit_ideal", "Betti table undefined for the unit ideal");
  const int n = I.var_count();
  const ScaleGuard guard = ScaleGuard::from_env();
  if (n > guard.max_vars)
    fail("scale_guard", "Betti oracle limited to " + std::to_string(guard.max_vars) +
                            " variables (set BOREL_SCALE_GUARD to raise)");
  std::vector<int> cap(n, 0);
  for (const Monomial& g : I.gens())
    for (int i = 0; i < n; ++i) cap[i] = std::max(cap[i], g.exps[i]);
  for (int c : cap)
    if (c > guard.max_exponent)
      fail("scale_guard", "Betti oracle limited to exponents <= " +
                              std::to_string(guard.max_exponent) +
                              " (set BOREL_SCALE_GUARD to raise)");

  BettiTable table;
  table.n = n;
  table.entries[{0, 0}] = 1;

  // Walk every multidegree below the componentwise cap; Betti multidegrees
  // are lcms of generator subsets, so nothing above contributes.
  std::vector<int> b(n, 0);
  Monomial xb = Monomial::one(n);
  for (;;) {
    for (int i = 0; i < n; ++i) xb.exps[i] = b[i];
    if (I.contains(xb)) {
      std::vector<int> vertices;
      for (int i = 0; i < n; ++i)
        if (b[i] >= 1) vertices.push_back(i);
      const int v = static_cast<int>(vertices.size());
      Monomial probe = xb;
      auto has_face = [&](unsigned mask) {
        for (int t = 0; t < v; ++t)
          probe.exps[vertices[t]] = b[vertices[t]] - ((mask >> t) & 1u ? 1 : 0);
        return I.contains(probe);
      };
      std::vector<long long> h = reduced_homology(vertices, has_face, field);
      long long jdeg = 0;
      for (int e : b) jdeg += e;
      for (int i = 0; i <= v; ++i) {
        if (h[i] == 0) continue;
        // h[i] = dim of reduced homology in dimension i-1 = beta_{i, b}(I),
        // which is beta_{i+1, b}(S/I).
        table.entries[{i + 1, static_cast<int>(jdeg)}] += h[i];
      }
    }
    int pos = n - 1;
    while (pos >= 0 && b[pos] == cap[pos]) b[pos--] = 0;
    if (pos < 0) break;
    ++b[pos];
  }

  table.b.assign(n + 1, ExtendedDegree::minus_infinity());
  for (const auto& [key, count] : table.entries)
    if (count != 0 && key.first <= n)
      table.b[key.first] = ExtendedDegree::max(table.b[key.first], ExtendedDegree(key.second));
  return table;
}

std::vector<ExtendedDegree> ideal_b_vector(const BettiTable& t) {
  std::vector<ExtendedDegree> b(t.n + 1, ExtendedDegree::minus_infinity());
  for (int i = 0; i + 1 <= t.n; ++i) b[i] = t.b[i + 1];
  return b;
}

TrungInvariants trung_invariants(const std::vector<ExtendedDegree>& b, int n) {
  TrungInvariants out;
  out.reg_t.assign(n + 1, ExtendedDegree::minus_infinity());
  out.astar_t.assign(n + 1, ExtendedDegree::minus_infinity());
  for (int t = 0; t <= n; ++t) {
    for (int i = n - t; i <= n; ++i) {
      if (i < 0 || !b[i].is_finite()) continue;
      out.reg_t[t] = ExtendedDegree::max(out.reg_t[t], b[i] - i);
      out.astar_t[t] = ExtendedDegree::max(out.astar_t[t], b[i] - n);
    }
  }
  return out;
}

TrungInvariants trung_invariants(const BettiTable& table) {
  return trung_invariants(table.b, table.n);
}

ExtendedDegree a0_direct(const MonomialIdeal& I) { return satiety_quotient(I); }

}  // namespace borel
