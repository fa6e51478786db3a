#include "borel/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "borel/errors.hpp"

namespace borel {

bool IrreducibleComponent::has_initial_segment_support() const {
  int last = 0;
  for (int i = static_cast<int>(b.size()); i >= 1; --i) {
    if (b[i - 1] >= 1) {
      last = i;
      break;
    }
  }
  for (int i = 1; i <= last; ++i)
    if (b[i - 1] < 1) return false;
  return last >= 1;
}

MonomialIdeal IrreducibleComponent::to_ideal(const std::vector<std::string>& names) const {
  const int n = static_cast<int>(b.size());
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    if (b[i] >= 1) {
      Monomial g = Monomial::one(n);
      g.exps[i] = b[i];
      gens.push_back(g);
    }
  }
  return MonomialIdeal::make(n, std::move(gens), names);
}

namespace {

// m^c is contained in m^b iff supp(c) is inside supp(b) and c dominates b
// there.
bool component_contained(const IrreducibleComponent& c, const IrreducibleComponent& b) {
  for (std::size_t i = 0; i < c.b.size(); ++i)
    if (c.b[i] >= 1 && c.b[i] < b.b[i]) return false;
  for (std::size_t i = 0; i < c.b.size(); ++i)
    if (c.b[i] >= 1 && b.b[i] < 1) return false;
  return true;
}

using ComponentSet = std::set<std::vector<int>>;

struct Splitter {
  std::map<std::vector<std::vector<int>>, ComponentSet> memo;
  long long nodes = 0;

  static std::vector<std::vector<int>> key_of(const MonomialIdeal& I) {
    std::vector<std::vector<int>> k;
    k.reserve(I.gens().size());
    for (const Monomial& g : I.gens()) k.push_back(g.exps);
    return k;
  }

  ComponentSet run(const MonomialIdeal& I) {
    if (++nodes > 2000000) fail("internal", "decomposition recursion exceeded node budget");
    auto key = key_of(I);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int n = I.var_count();
    // Lex-first splittable generator: generators are grlex-sorted, so scan
    // in order for one with at least two variables in its support.
    int split_at = -1;
    for (std::size_t gi = 0; gi < I.gens().size(); ++gi) {
      const Monomial& g = I.gens()[gi];
      int support = 0;
      for (int e : g.exps) support += e > 0 ? 1 : 0;
      if (support >= 2) {
        split_at = static_cast<int>(gi);
        break;
      }
    }

    ComponentSet result;
    if (split_at < 0) {
      // All generators are pure powers of distinct variables: one component.
      std::vector<int> b(n, 0);
      for (const Monomial& g : I.gens()) b[g.max_var() - 1] = g.exps[g.max_var() - 1];
      result.insert(std::move(b));
    } else {
      const Monomial u = I.gens()[split_at];
      int j = 0;
      while (u.exps[j] == 0) ++j;  // lex-first variable in u's support
      Monomial v = Monomial::one(n);
      v.exps[j] = u.exps[j];
      Monomial w = u;
      w.exps[j] = 0;
      for (const Monomial& part : {v, w}) {
        std::vector<Monomial> gens = I.gens();
        gens[split_at] = part;
        ComponentSet sub = run(MonomialIdeal::make(n, std::move(gens)));
        result.insert(sub.begin(), sub.end());
      }
    }
    memo.emplace(std::move(key), result);
    return result;
  }
};

}  // namespace

Decomposition decompose(const MonomialIdeal& I) {
  if (I.is_zero()) fail("zero_ideal", "the zero ideal has no irreducible decomposition");
  if (I.is_unit()) fail("unit_ideal", "the unit ideal has no irreducible decomposition");

  Splitter splitter;
  ComponentSet raw = splitter.run(I);

  std::vector<IrreducibleComponent> comps;
  comps.reserve(raw.size());
  for (const auto& b : raw) comps.emplace_back(b);

  // Keep the components minimal under containment. For irreducible monomial
  // ideals an intersection lands inside m^b only if a single member does, so
  // this yields the irredundant set; recomposition below double-checks.
  std::vector<IrreducibleComponent> kept;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
      redundant = i != j && component_contained(comps[j], comps[i]);
    if (!redundant) kept.push_back(comps[i]);
  }

  std::sort(kept.begin(), kept.end());
  if (recompose(kept, I.var_count(), I.var_names()) != I)
    fail("internal", "decomposition does not recompose to its source");
  return Decomposition{std::move(kept), I};
}

MonomialIdeal recompose(const std::vector<IrreducibleComponent>& components, int n,
                        const std::vector<std::string>& names) {
  MonomialIdeal acc = MonomialIdeal::unit(n, names);
  for (const IrreducibleComponent& c : components) acc = intersect(acc, c.to_ideal(names));
  return acc;
}

bool is_irredundant(const std::vector<IrreducibleComponent>& components,
                    const MonomialIdeal& I) {
  if (components.empty()) return false;
  if (recompose(components, I.var_count(), I.var_names()) != I) return false;
  if (components.size() == 1) return true;
  for (std::size_t skip = 0; skip < components.size(); ++skip) {
    std::vector<IrreducibleComponent> rest;
    for (std::size_t i = 0; i < components.size(); ++i)
      if (i != skip) rest.push_back(components[i]);
    if (recompose(rest, I.var_count(), I.var_names()) == I) return false;
  }
  return true;
}

}  // namespace borel
