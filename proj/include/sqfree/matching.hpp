#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "ncomplex.hpp"
#include "tree.hpp"

namespace sqfree {

// Pairwise disjoint facets of one NComplex, held as a set of facet indices.
struct Matching {
  Bits facets = 0;
  VertexSet vertices = 0;  // V_M

  int size() const noexcept { return popcount(facets); }
  bool contains(int facet) const noexcept { return has(facets, facet); }
  std::vector<int> indices() const { return elements(facets); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

inline Matching make_matching(const NComplex& c, Bits facets) {
  Matching m{facets, 0};
  bool disjoint = true;
  for_each_bit(facets, [&](int f) {
    if ((m.vertices & c.facet(f).vertices) != 0) disjoint = false;
    m.vertices |= c.facet(f).vertices;
  });
  if (!disjoint) throw Error(Errc::BadParameter, "facets of a matching must be pairwise disjoint");
  return m;
}

// Canonical order: lexicographic on the ascending facet-index tuples.
inline bool canonical_less(const Matching& a, const Matching& b) {
  Bits x = a.facets, y = b.facets;
  while (x != 0 && y != 0) {
    int i = lowest(x), j = lowest(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

// Maximum number of pairwise disjoint facets among `allowed`, memoized on
// the remaining facet set.
class PackingOracle {
 public:
  explicit PackingOracle(const NComplex& c) : c_(&c) {}

  int max_packing(Bits allowed) {
    if (allowed == 0) return 0;
    if (auto it = memo_.find(allowed); it != memo_.end()) return it->second;
    int f = lowest(allowed);
    Bits rest = allowed & ~bit(f);
    int best;
    if ((c_->conflicts(f) & rest) == 0) {
      best = 1 + max_packing(rest);
    } else {
      best = std::max(max_packing(rest), 1 + max_packing(allowed & ~c_->conflicts(f)));
    }
    memo_.emplace(allowed, best);
    return best;
  }

  // Calls f(facet set) on every k-matching drawn from `allowed`, in
  // canonical order, until f returns false.
  template <class F>
  void for_each(Bits allowed, int k, F&& f) {
    bool stop = false;
    walk(allowed, k, 0, stop, f);
  }

 private:
  template <class F>
  void walk(Bits avail, int need, Bits chosen, bool& stop, F& f) {
    if (stop) return;
    if (need == 0) {
      if (!f(chosen)) stop = true;
      return;
    }
    if (popcount(avail) < need || max_packing(avail) < need) return;
    while (avail != 0 && !stop) {
      int i = lowest(avail);
      avail &= ~bit(i);
      walk(avail & ~c_->conflicts(i), need - 1, chosen | bit(i), stop, f);
      if (popcount(avail) < need || max_packing(avail) < need) return;
    }
  }

  const NComplex* c_;
  std::unordered_map<Bits, int> memo_;
};

inline std::vector<Matching> enumerate_matchings(const NComplex& c, int k) {
  std::vector<Matching> out;
  if (k < 0) return out;
  PackingOracle oracle(c);
  oracle.for_each(c.all_facets(), k, [&](Bits f) {
    out.push_back(make_matching(c, f));
    return true;
  });
  return out;
}

inline int matching_number(const NComplex& c) {
  if (c.facet_count() == 0) throw Error(Errc::EmptyComplex, "complex has no facets");
  return PackingOracle(c).max_packing(c.all_facets());
}

// First k-matching (canonical order) among the facets in `allowed`.
inline std::optional<Matching> first_matching_within(const NComplex& c, Bits allowed, int k) {
  std::optional<Matching> out;
  PackingOracle(c).for_each(allowed, k, [&](Bits f) {
    out = make_matching(c, f);
    return false;
  });
  return out;
}

// M_H: the facets of M contained in `vertex_set`.
inline Matching restrict_matching(const NComplex& c, const Matching& m, VertexSet vertex_set) {
  Bits kept = 0;
  for_each_bit(m.facets, [&](int f) {
    if (subset_of(c.facet(f).vertices, vertex_set)) kept |= bit(f);
  });
  return make_matching(c, kept);
}

// B_(M,N): bipartite intersection graph on M̂ = M∖N and N̂ = N∖M.
struct BipartiteIntersectionGraph {
  std::vector<int> left;
  std::vector<int> right;
  std::vector<std::pair<int, int>> edges;  // (facet of M̂, facet of N̂)

  int degree(int facet) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == facet || b == facet) ? 1 : 0;
    return d;
  }

  bool is_acyclic() const {
    std::vector<int> ids = left;
    ids.insert(ids.end(), right.begin(), right.end());
    auto slot = [&](int facet, bool on_left) {
      const auto& side = on_left ? left : right;
      int off = on_left ? 0 : static_cast<int>(left.size());
      return off + static_cast<int>(std::find(side.begin(), side.end(), facet) - side.begin());
    };
    detail::UnionFind uf(static_cast<int>(ids.size()));
    for (auto [a, b] : edges)
      if (!uf.unite(slot(a, true), slot(b, false))) return false;
    return true;
  }
};

inline BipartiteIntersectionGraph build_B(const NComplex& c, const Matching& m, const Matching& n) {
  if (m.size() != n.size()) throw Error(Errc::SizeMismatch, "matchings must have equal size");
  BipartiteIntersectionGraph g;
  g.left = elements(m.facets & ~n.facets);
  g.right = elements(n.facets & ~m.facets);
  for (int a : g.left)
    for (int b : g.right)
      if ((c.facet(a).vertices & c.facet(b).vertices) != 0) g.edges.emplace_back(a, b);
  return g;
}

// A tree with its complex, matching number and ν-matchings, computed once.
struct TreeAnalysis {
  Tree tree;
  NComplex complex;
  int nu = 0;
  std::vector<Matching> nu_matchings;

  explicit TreeAnalysis(Tree t) : tree(std::move(t)), complex(neighborhood_facets(tree)) {
    nu = matching_number(complex);
    nu_matchings = enumerate_matchings(complex, nu);
  }
};

}  // namespace sqfree
