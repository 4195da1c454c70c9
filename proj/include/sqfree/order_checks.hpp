#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "linearity.hpp"
#include "matching.hpp"
#include "orders.hpp"
#include "report.hpp"

namespace sqfree {

namespace detail {

inline bool facet_in_u(const OrderedGenerators& og, int f) { return has(og.U.facets, f); }

// Pairwise comparison matrix check: irreflexive, antisymmetric, total and
// transitive. `cmp(i, j)` compares matchings i and j.
template <class Cmp>
inline void check_strict_total(LemmaResult& r, int m, Cmp cmp, const std::vector<Matching>& ms, const NComplex& c) {
  std::vector<std::vector<signed char>> g(static_cast<std::size_t>(m), std::vector<signed char>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto o = cmp(i, j);
      g[i][j] = o == std::strong_ordering::greater ? 1 : o == std::strong_ordering::less ? -1 : 0;
      ++r.pairs_checked;
    }
  for (int i = 0; i < m; ++i) {
    if (g[i][i] != 0) r.fail("irreflexivity fails at " + matching_name(c, ms[i]));
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (g[i][j] == 0) r.fail("tie between " + matching_name(c, ms[i]) + " and " + matching_name(c, ms[j]));
      if (g[i][j] != -g[j][i]) r.fail("asymmetric comparison of " + matching_name(c, ms[i]) + " and " + matching_name(c, ms[j]));
    }
  }
  if (m > 200) return;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (g[i][j] == 1)
        for (int k = 0; k < m; ++k)
          if (g[j][k] == 1 && g[i][k] != 1) r.fail("transitivity fails at " + matching_name(c, ms[i]));
}

}  // namespace detail

// Order properties on ν-matchings. The facet persistence and level checks
// assume C1 and C2 and are skipped otherwise; the bridging facet check
// applies to every tree.
inline LemmaReport verify_order_properties(const TreeAnalysis& a, std::optional<int> root = std::nullopt) {
  const NComplex& c = a.complex;
  const OrderedGenerators og = order_ell(a, root);
  const auto& ms = a.nu_matchings;
  const int m = static_cast<int>(ms.size());
  const bool conditions = !check_c1(a) && !check_c2(a);

  LemmaResult lex{"lex_total_order"};
  LemmaResult ell{"ell_total_order"};
  LemmaResult top{"unique_top"};
  LemmaResult persist{"facet_persistence"};
  LemmaResult level{"level_comparison"};
  LemmaResult bridge{"bridging_facet"};

  detail::check_strict_total(lex, m, [&](int i, int j) { return compare_matchings_lex(ms[i], ms[j], og.keys); }, ms, c);
  detail::check_strict_total(ell, m, [&](int i, int j) {
    return compare_matchings_ell(c, ms[i], ms[j], og.U, og.keys);
  }, ms, c);

  int maximal = 0;
  for (int i = 0; i < m; ++i) {
    bool beaten = false;
    for (int j = 0; j < m && !beaten; ++j)
      beaten = compare_matchings_lex(ms[j], ms[i], og.keys) == std::strong_ordering::greater;
    if (!beaten) {
      ++maximal;
      if (ms[i] != og.U) top.fail("maximal element differs from U: " + matching_name(c, ms[i]));
    }
  }
  top.pairs_checked = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  if (maximal != 1) top.fail(std::to_string(maximal) + " maximal elements");

  if (!conditions) {
    persist.status = CheckStatus::Skipped;
    level.status = CheckStatus::Skipped;
  } else {
    for (const auto& n : ms) {
      for_each_bit(og.U.facets, [&](int f) {
        if (c.facet(f).size() < 4) return;
        ++persist.pairs_checked;
        if (!has(n.facets, f)) persist.fail(facet_name(c, f) + " missing from " + matching_name(c, n));
      });
      for_each_bit(og.U.facets, [&](int f) {
        if (c.facet(f).size() != 3) return;
        const Bits meets = c.conflicts(f) & n.facets;
        if (popcount(meets) != 1) return;
        const int g = lowest(meets);
        if (c.facet(g).size() != 3 || popcount(c.facet(f).vertices & c.facet(g).vertices) != 1) return;
        ++level.pairs_checked;
        if (!(og.keys[f].j < og.keys[g].j))
          level.fail(facet_name(c, f) + " vs " + facet_name(c, g) + " in " + matching_name(c, n));
      });
    }
  }

  for (const auto& mm : ms)
    for (const auto& n : ms)
      for_each_bit(mm.facets & ~og.U.facets, [&](int f) {
        for_each_bit(n.facets & ~og.U.facets, [&](int g) {
          const VertexSet fv = c.facet(f).vertices, gv = c.facet(g).vertices;
          if ((fv & ~gv & n.vertices) != 0) return;
          ++bridge.pairs_checked;
          bool found = false;
          for_each_bit(og.U.facets, [&](int h) {
            found = found || ((c.facet(h).vertices & fv) != 0 && (c.facet(h).vertices & gv) != 0);
          });
          if (!found)
            bridge.fail("F=" + facet_name(c, f) + " in " + matching_name(c, mm) + ", G=" + facet_name(c, g) + " in " +
                        matching_name(c, n));
        });
      });

  return LemmaReport{{lex, ell, top, persist, level, bridge}};
}

struct RootOutcome {
  int root = 0;
  LinearQuotientsResult lq;
};

// Linear quotients under >_ℓ for every pendant root.
inline std::vector<RootOutcome> lq_over_roots(const TreeAnalysis& a) {
  std::vector<RootOutcome> out;
  for (int v = 0; v < a.tree.size(); ++v) {
    if (a.tree.size() > 1 && !a.tree.is_pendant(v)) continue;
    out.push_back({v, has_linear_quotients(ell_supports(order_ell(a, v)))});
  }
  return out;
}

}  // namespace sqfree
