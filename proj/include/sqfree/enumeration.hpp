#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "families.hpp"
#include "tree.hpp"

namespace sqfree {

namespace detail {

struct Code {
  std::uint64_t bits = 0;
  int len = 0;
  friend bool operator<(const Code& a, const Code& b) {
    return a.len != b.len ? a.len < b.len : a.bits < b.bits;
  }
};

inline Code rooted_code(const std::vector<Bits>& adj, int v, int parent) {
  Code kids[kMaxBits];
  int nk = 0;
  for_each_bit(adj[v], [&](int w) {
    if (w != parent) kids[nk++] = rooted_code(adj, w, v);
  });
  std::sort(kids, kids + nk);
  Code c{1, 1};
  for (int i = 0; i < nk; ++i) {
    c.bits = (c.bits << kids[i].len) | kids[i].bits;
    c.len += kids[i].len;
  }
  c.bits <<= 1;
  ++c.len;
  return c;
}

// AHU code of an unrooted tree given by adjacency masks, rooted at its
// center (the smaller of the two codes when there are two centers).
inline std::uint64_t unrooted_code(const std::vector<Bits>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n > 32) throw Error(Errc::TooLarge, "canonical codes need at most 32 vertices");
  if (n == 1) return 2;
  int deg[kMaxBits];
  Bits alive = full_set(n);
  Bits layer = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = popcount(adj[v]);
    if (deg[v] <= 1) layer |= bit(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= popcount(layer);
    alive &= ~layer;
    Bits next = 0;
    for_each_bit(layer, [&](int v) {
      for_each_bit(adj[v] & alive, [&](int w) {
        if (--deg[w] == 1) next |= bit(w);
      });
    });
    layer = next;
  }
  std::vector<int> centers = elements(alive);
  Code best = rooted_code(adj, centers[0], -1);
  if (centers.size() == 2) {
    Code other = rooted_code(adj, centers[1], -1);
    if (other.bits < best.bits) best = other;
  }
  return best.bits;
}

inline std::vector<Bits> adjacency_masks(const Tree& t) {
  std::vector<Bits> adj(static_cast<std::size_t>(t.size()), 0);
  for (auto [u, v] : t.edges()) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return adj;
}

inline Tree tree_from_masks(const std::vector<Bits>& adj) {
  if (adj.size() == 1) return Tree::single_vertex(1);
  std::vector<LabeledEdge> edges;
  for (int u = 0; u < static_cast<int>(adj.size()); ++u)
    for_each_bit(adj[u], [&](int v) {
      if (u < v) edges.emplace_back(u + 1, v + 1);
    });
  return Tree::from_edges(edges);
}

// Prüfer decoding into adjacency masks over vertices 0..n-1.
inline void decode_prufer(const int* seq, int n, std::vector<Bits>& adj) {
  int degree[kMaxBits];
  std::fill(adj.begin(), adj.end(), 0);
  for (int v = 0; v < n; ++v) degree[v] = 1;
  for (int i = 0; i < n - 2; ++i) ++degree[seq[i]];
  for (int i = 0; i < n - 2; ++i) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    adj[leaf] |= bit(seq[i]);
    adj[seq[i]] |= bit(leaf);
    --degree[leaf];
    --degree[seq[i]];
  }
  int a = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        adj[a] |= bit(v);
        adj[v] |= bit(a);
        break;
      }
    }
}

}  // namespace detail

inline std::uint64_t canonical_code(const Tree& t) {
  return detail::unrooted_code(detail::adjacency_masks(t));
}

// Calls f(adjacency masks) for every labeled tree on n vertices, in
// lexicographic order of Prüfer sequences.
template <class F>
void for_each_labeled_tree(int n, F&& f) {
  if (n < 1 || n > 16) throw Error(Errc::BadParameter, "labeled enumeration needs 1 <= n <= 16");
  std::vector<Bits> adj(static_cast<std::size_t>(n), 0);
  if (n <= 2) {
    if (n == 2) adj = {bit(1), bit(0)};
    f(static_cast<const std::vector<Bits>&>(adj));
    return;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  for (;;) {
    detail::decode_prufer(seq.data(), n, adj);
    f(static_cast<const std::vector<Bits>&>(adj));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

// One representative per isomorphism class, found by running through all
// Prüfer sequences; the first labeling met is kept.
inline std::vector<Tree> unlabeled_trees_prufer(int n) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<Tree> out;
  for_each_labeled_tree(n, [&](const std::vector<Bits>& adj) {
    if (seen.insert(detail::unrooted_code(adj)).second) out.push_back(detail::tree_from_masks(adj));
  });
  return out;
}

// Same classes, built by attaching a leaf to every vertex of every tree on
// n-1 vertices.
inline std::vector<Tree> unlabeled_trees(int n) {
  if (n < 1 || n > 32) throw Error(Errc::BadParameter, "unlabeled enumeration needs 1 <= n <= 32");
  std::vector<std::vector<Bits>> level{{0}};
  for (int m = 2; m <= n; ++m) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::vector<Bits>> next;
    for (const auto& adj : level)
      for (int v = 0; v < m - 1; ++v) {
        std::vector<Bits> grown = adj;
        grown.push_back(bit(v));
        grown[v] |= bit(m - 1);
        if (seen.insert(detail::unrooted_code(grown)).second) next.push_back(std::move(grown));
      }
    level = std::move(next);
  }
  std::vector<Tree> out;
  out.reserve(level.size());
  for (const auto& adj : level) out.push_back(detail::tree_from_masks(adj));
  return out;
}

}  // namespace sqfree
