#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <vector>

#include "error.hpp"
#include "matching.hpp"
#include "ncomplex.hpp"
#include "tree.hpp"

namespace sqfree {

// F_{i,j,k}: i = |N[u]|, j = level of the center u, k = position of u among
// the vertices on level j. A smaller key is a larger facet.
struct FacetKey {
  int i = 0;
  int j = 0;
  int k = 0;
  friend auto operator<=>(const FacetKey&, const FacetKey&) = default;
};

// The pendant vertex with the smallest label (vertex 0 for a single vertex).
inline int default_root(const Tree& t) {
  for (int v = 0; v < t.size(); ++v)
    if (t.is_pendant(v)) return v;
  return 0;
}

inline void require_pendant(const Tree& t, int root) {
  if (root < 0 || root >= t.size()) throw Error(Errc::BadParameter, "root is not a vertex");
  if (t.size() > 1 && !t.is_pendant(root))
    throw Error(Errc::NotPendant, "vertex " + std::to_string(t.label(root)) + " is not pendant");
}

// Keys indexed by facet. Within a level, vertices are ranked by descending
// label.
inline std::vector<FacetKey> facet_keys(const Tree& t, const NComplex& c, int root) {
  require_pendant(t, root);
  const std::vector<int> level = t.distances_from(root);
  std::vector<int> rank(static_cast<std::size_t>(t.size()), 0);
  for (int v = t.size() - 1; v >= 0; --v) {
    int r = 1;
    for (int w = t.size() - 1; w > v; --w) r += level[w] == level[v] ? 1 : 0;
    rank[v] = r;
  }
  std::vector<FacetKey> keys;
  for (const auto& f : c.facets()) keys.push_back({f.size(), level[f.center], rank[f.center]});
  return keys;
}

// Facet keys of m in decreasing facet order.
inline std::vector<FacetKey> key_sequence(const Matching& m, const std::vector<FacetKey>& keys) {
  std::vector<FacetKey> seq;
  for_each_bit(m.facets, [&](int f) { seq.push_back(keys[f]); });
  std::sort(seq.begin(), seq.end());
  return seq;
}

// greater means m >_lex n.
inline std::strong_ordering compare_matchings_lex(const Matching& m, const Matching& n,
                                                  const std::vector<FacetKey>& keys) {
  if (m.size() != n.size()) throw Error(Errc::SizeMismatch, "matchings must have equal size");
  auto a = key_sequence(m, keys), b = key_sequence(n, keys);
  for (std::size_t s = 0; s < a.size(); ++s)
    if (a[s] != b[s]) return a[s] < b[s] ? std::strong_ordering::greater : std::strong_ordering::less;
  return std::strong_ordering::equal;
}

inline int beta(const NComplex& c, const Matching& m) {
  int b = 0;
  for_each_bit(m.facets, [&](int f) { b += c.facet(f).size() == 2 ? 1 : 0; });
  return b;
}

struct OrderedGenerators {
  int root = 0;
  std::vector<FacetKey> keys;        // per facet
  std::vector<Matching> matchings;   // ν-matchings, descending under >_ℓ
  std::vector<int> betas;            // parallel to matchings
  std::vector<int> levels;           // level_U, parallel to matchings
  std::vector<Matching> lex_order;   // ν-matchings, descending under >_lex
  Matching U;
};

inline OrderedGenerators order_ell(const TreeAnalysis& a, std::optional<int> root = std::nullopt) {
  OrderedGenerators og;
  og.root = root.value_or(default_root(a.tree));
  og.keys = facet_keys(a.tree, a.complex, og.root);
  const int nu = a.nu;

  og.lex_order = a.nu_matchings;
  std::sort(og.lex_order.begin(), og.lex_order.end(), [&](const Matching& x, const Matching& y) {
    return compare_matchings_lex(x, y, og.keys) == std::strong_ordering::greater;
  });
  og.U = og.lex_order.front();

  auto level = [&](const Matching& m) { return nu - popcount(og.U.facets & m.facets); };
  og.matchings = og.lex_order;
  std::stable_sort(og.matchings.begin(), og.matchings.end(), [&](const Matching& x, const Matching& y) {
    int bx = beta(a.complex, x), by = beta(a.complex, y);
    if (bx != by) return bx > by;
    return level(x) < level(y);
  });
  for (const auto& m : og.matchings) {
    og.betas.push_back(beta(a.complex, m));
    og.levels.push_back(level(m));
  }
  return og;
}

// greater means m >_ℓ n.
inline std::strong_ordering compare_matchings_ell(const NComplex& c, const Matching& m, const Matching& n,
                                                  const Matching& U, const std::vector<FacetKey>& keys) {
  int bm = beta(c, m), bn = beta(c, n);
  if (bm != bn) return bm <=> bn;
  int lm = popcount(U.facets & m.facets), ln = popcount(U.facets & n.facets);
  if (lm != ln) return lm <=> ln;
  return compare_matchings_lex(m, n, keys);
}

}  // namespace sqfree
