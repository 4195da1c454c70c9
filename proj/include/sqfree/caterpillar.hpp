#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "error.hpp"
#include "matching.hpp"
#include "orders.hpp"
#include "report.hpp"
#include "tree.hpp"

namespace sqfree {

inline void require_caterpillar(const Tree& t) {
  if (!is_caterpillar(t)) throw Error(Errc::NotCaterpillar, "tree is not a caterpillar");
}

// deg(NI^[ν]) - 1: the largest vertex count of a ν-matching, minus one.
inline int caterpillar_regularity(const TreeAnalysis& a) {
  require_caterpillar(a.tree);
  int best = 0;
  for (const auto& m : a.nu_matchings) best = std::max(best, popcount(m.vertices));
  return best - 1;
}

inline int caterpillar_regularity(const Tree& t) { return caterpillar_regularity(TreeAnalysis(t)); }

// Minimal generators of (u_1..u_{j-1}) : u_j for squarefree u's, as supports.
inline std::vector<VertexSet> squarefree_colon_step(const std::vector<VertexSet>& supports, std::size_t j) {
  std::vector<VertexSet> raw;
  for (std::size_t k = 0; k < j; ++k) raw.push_back(supports[k] & ~supports[j]);
  std::sort(raw.begin(), raw.end(), [](VertexSet x, VertexSet y) {
    return popcount(x) != popcount(y) ? popcount(x) < popcount(y) : x < y;
  });
  std::vector<VertexSet> gens;
  for (VertexSet r : raw) {
    bool redundant = std::any_of(gens.begin(), gens.end(), [&](VertexSet g) { return subset_of(g, r); });
    if (!redundant) gens.push_back(r);
  }
  return gens;
}

// Colon structure of NI^[ν] under >_lex: each colon has generators of
// degree at most two, its quadratic generators are pairwise disjoint, and
// k >= 1 quadratics force a later generator of degree > deg(u_j) + k - 1.
inline LemmaReport verify_caterpillar_colon_structure(const TreeAnalysis& a, std::optional<int> root = std::nullopt) {
  require_caterpillar(a.tree);
  const NComplex& c = a.complex;
  const OrderedGenerators og = order_ell(a, root);
  std::vector<VertexSet> s;
  for (const auto& m : og.lex_order) s.push_back(m.vertices);

  LemmaResult small{"colon_degree"};
  LemmaResult disjoint{"quadratic_disjoint"};
  LemmaResult growth{"degree_growth"};
  for (std::size_t j = 1; j < s.size(); ++j) {
    const auto gens = squarefree_colon_step(s, j);
    const std::string where = "u_" + std::to_string(j + 1) + "=" + matching_name(c, og.lex_order[j]);
    std::vector<VertexSet> quad;
    ++small.pairs_checked;
    for (VertexSet g : gens) {
      if (popcount(g) > 2) small.fail(where + " has a colon generator of degree " + std::to_string(popcount(g)));
      if (popcount(g) == 2) quad.push_back(g);
    }
    ++disjoint.pairs_checked;
    for (std::size_t x = 0; x < quad.size(); ++x)
      for (std::size_t y = x + 1; y < quad.size(); ++y)
        if (quad[x] & quad[y]) disjoint.fail(where + " has overlapping quadratic colon generators");
    if (quad.empty()) continue;
    ++growth.pairs_checked;
    const int k = static_cast<int>(quad.size());
    bool found = false;
    for (std::size_t i = j + 1; i < s.size() && !found; ++i) found = popcount(s[j]) + k - 1 < popcount(s[i]);
    if (!found) growth.fail(where + " with " + std::to_string(k) + " quadratic colon generators");
  }
  return LemmaReport{{small, disjoint, growth}};
}

}  // namespace sqfree
