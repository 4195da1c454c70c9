#pragma once

// Slow reference implementations used only by the tests. They work from
// definitions on plain std::set / std::vector data and share no algorithm
// with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sqfree/sqfree.hpp"

namespace oracle {

using LabelSet = std::set<sqfree::Label>;

inline std::map<sqfree::Label, LabelSet> closed_neighborhoods(const std::vector<sqfree::LabeledEdge>& edges) {
  std::map<sqfree::Label, LabelSet> nb;
  for (auto [a, b] : edges) {
    nb[a].insert({a, b});
    nb[b].insert({a, b});
  }
  return nb;
}

inline std::vector<sqfree::LabeledEdge> labeled_edges(const sqfree::Tree& t) {
  std::vector<sqfree::LabeledEdge> out;
  for (auto [u, v] : t.edges()) out.emplace_back(t.label(u), t.label(v));
  return out;
}

// Inclusion-minimal closed neighborhoods, as a set of vertex sets.
inline std::set<LabelSet> facets(const sqfree::Tree& t) {
  if (t.size() == 1) return {{t.label(0)}};
  auto nb = closed_neighborhoods(labeled_edges(t));
  std::set<LabelSet> out;
  for (const auto& [u, s] : nb) {
    bool minimal = true;
    for (const auto& [w, r] : nb)
      if (r != s && std::includes(s.begin(), s.end(), r.begin(), r.end())) minimal = false;
    if (minimal) out.insert(s);
  }
  return out;
}

inline bool disjoint(const LabelSet& a, const LabelSet& b) {
  for (auto x : a)
    if (b.count(x)) return false;
  return true;
}

// k-subsets of pairwise disjoint facets.
inline std::set<std::set<LabelSet>> matchings(const std::set<LabelSet>& fs, int k) {
  std::vector<LabelSet> v(fs.begin(), fs.end());
  std::set<std::set<LabelSet>> out;
  const int m = static_cast<int>(v.size());
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    if (__builtin_popcountll(s) != k) continue;
    std::vector<LabelSet> pick;
    for (int i = 0; i < m; ++i)
      if (s >> i & 1) pick.push_back(v[static_cast<std::size_t>(i)]);
    bool ok = true;
    for (std::size_t i = 0; i < pick.size() && ok; ++i)
      for (std::size_t j = i + 1; j < pick.size() && ok; ++j) ok = disjoint(pick[i], pick[j]);
    if (ok) out.insert(std::set<LabelSet>(pick.begin(), pick.end()));
  }
  return out;
}

inline int matching_number(const std::set<LabelSet>& fs) {
  int k = 0;
  while (!matchings(fs, k + 1).empty()) ++k;
  return k;
}

// Squarefree ideal given by supports over n variables (bitmasks).
struct SqIdeal {
  int n = 0;
  std::vector<std::uint32_t> gens;

  bool contains(std::uint32_t s) const {
    return std::any_of(gens.begin(), gens.end(), [&](std::uint32_t g) { return (g & ~s) == 0; });
  }
};

inline SqIdeal from_ideal(const sqfree::MonomialIdeal& I) {
  SqIdeal out{I.nvars(), {}};
  for (const auto& g : I.gens()) out.gens.push_back(static_cast<std::uint32_t>(g.support()));
  return out;
}

// Largest number of pairwise disjoint generators inside s.
inline int packing(const SqIdeal& I, std::uint32_t s) {
  int best = 0;
  for (std::uint32_t g : I.gens)
    if ((g & ~s) == 0) best = std::max(best, 1 + packing(I, s & ~g));
  return best;
}

// Minimal squarefree monomials of I^k, found by scanning all subsets.
inline std::set<std::uint32_t> squarefree_power(const SqIdeal& I, int k) {
  std::vector<std::uint32_t> in;
  for (std::uint32_t s = 0; s < (1u << I.n); ++s)
    if (packing(I, s) >= k) in.push_back(s);
  std::set<std::uint32_t> out;
  for (std::uint32_t s : in) {
    bool minimal = true;
    for (std::uint32_t t : in)
      if (t != s && (t & ~s) == 0) minimal = false;
    if (minimal) out.insert(s);
  }
  return out;
}

// Dense GF(2) rank.
inline int rank_gf2(std::vector<std::vector<int>> a) {
  int r = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && !(a[p][c] & 1)) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (int i = 0; i < rows; ++i)
      if (i != r && (a[i][c] & 1))
        for (int j = 0; j < cols; ++j) a[i][j] ^= a[r][j] & 1;
    ++r;
  }
  return r;
}

// Rational rank by fraction-free Bareiss elimination over big integers.
inline int rank_qq(const std::vector<std::vector<long long>>& in) {
  const int rows = static_cast<int>(in.size());
  const int cols = rows ? static_cast<int>(in[0].size()) : 0;
  std::vector<std::vector<mpz_class>> a(in.size());
  for (std::size_t i = 0; i < in.size(); ++i)
    for (long long x : in[i]) a[i].emplace_back(static_cast<long>(x));
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Reduced homology dimensions of the complex given by its faces (closed
// under subsets, may be the void complex). Index d holds H~_d, d >= -1.
inline std::map<int, long> reduced_homology(const std::vector<std::uint32_t>& faces, bool gf2) {
  std::map<int, std::vector<std::uint32_t>> by_dim;
  for (auto f : faces) by_dim[__builtin_popcount(f) - 1].push_back(f);
  std::map<int, long> rank;  // rank of boundary from dim d to d-1
  for (auto& [d, fs] : by_dim) {
    if (d < 0 || !by_dim.count(d - 1)) continue;
    const auto& lower = by_dim[d - 1];
    std::vector<std::vector<long long>> m(fs.size(), std::vector<long long>(lower.size(), 0));
    for (std::size_t i = 0; i < fs.size(); ++i) {
      int sign = 1;
      for (int v = 0; v < 32; ++v) {
        if (!(fs[i] >> v & 1)) continue;
        auto face = fs[i] & ~(1u << v);
        auto it = std::find(lower.begin(), lower.end(), face);
        m[i][static_cast<std::size_t>(it - lower.begin())] = sign;
        sign = -sign;
      }
    }
    if (gf2) {
      std::vector<std::vector<int>> b(m.size(), std::vector<int>(lower.size()));
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < lower.size(); ++j) b[i][j] = static_cast<int>(m[i][j] & 1);
      rank[d] = rank_gf2(b);
    } else {
      rank[d] = rank_qq(m);
    }
  }
  std::map<int, long> h;
  for (auto& [d, fs] : by_dim) {
    long v = static_cast<long>(fs.size()) - rank[d] - rank[d + 1];
    if (v) h[d] = v;
  }
  return h;
}

// Graded Betti numbers (i, j) -> β_{i,j}(I) by Hochster's formula on the
// complex of non-faces: β_{i,σ} = dim H~_{|σ|-i-2}(Δ restricted to σ).
inline std::map<std::pair<int, int>, long> hochster_betti(const SqIdeal& I, bool gf2 = true) {
  std::map<std::pair<int, int>, long> out;
  std::vector<std::uint32_t> delta;
  for (std::uint32_t s = 0; s < (1u << I.n); ++s)
    if (!I.contains(s)) delta.push_back(s);
  for (std::uint32_t sigma = 1; sigma < (1u << I.n); ++sigma) {
    if (!I.contains(sigma)) continue;
    std::vector<std::uint32_t> sub;
    for (auto f : delta)
      if ((f & ~sigma) == 0) sub.push_back(f);
    const int size = __builtin_popcount(sigma);
    for (auto [d, v] : reduced_homology(sub, gf2)) {
      int i = size - d - 2;
      if (i >= 0) out[{i, size}] += v;
    }
  }
  return out;
}

inline int regularity(const std::map<std::pair<int, int>, long>& b) {
  int r = -1;
  for (const auto& [ij, v] : b) r = std::max(r, ij.second - ij.first);
  return r;
}

inline bool linear_resolution(const std::map<std::pair<int, int>, long>& b, int d) {
  for (const auto& [ij, v] : b)
    if (ij.second != ij.first + d) return false;
  return true;
}

// All squarefree degree-j members of I.
inline SqIdeal squarefree_component(const SqIdeal& I, int j) {
  SqIdeal out{I.n, {}};
  for (std::uint32_t s = 0; s < (1u << I.n); ++s)
    if (__builtin_popcount(s) == j && I.contains(s)) out.gens.push_back(s);
  return out;
}

// Componentwise linearity of a squarefree ideal, through its squarefree
// components.
inline bool componentwise_linear(const SqIdeal& I) {
  int lo = 64, hi = 0;
  for (auto g : I.gens) {
    lo = std::min(lo, __builtin_popcount(g));
    hi = std::max(hi, __builtin_popcount(g));
  }
  for (int j = lo; j <= hi; ++j)
    if (!linear_resolution(hochster_betti(squarefree_component(I, j)), j)) return false;
  return true;
}

// Whether each colon (u_1..u_{i-1}) : u_i, minimalized, is generated by
// variables.
inline bool linear_quotients(const std::vector<std::uint32_t>& order) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    std::vector<std::uint32_t> q;
    for (std::size_t k = 0; k < i; ++k) q.push_back(order[k] & ~order[i]);
    for (auto a : q) {
      bool minimal = true;
      for (auto b : q)
        if (b != a && (b & ~a) == 0) minimal = false;
      if (minimal && __builtin_popcount(a) != 1) return false;
    }
  }
  return true;
}

inline std::vector<sqfree::Tree> all_trees(int max_n) {
  std::vector<sqfree::Tree> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& t : sqfree::unlabeled_trees(n)) out.push_back(std::move(t));
  return out;
}

inline std::set<LabelSet> label_sets(const sqfree::NComplex& c, const std::vector<sqfree::VertexSet>& sets) {
  std::set<LabelSet> out;
  for (auto s : sets) {
    LabelSet l;
    sqfree::for_each_bit(s, [&](int v) { l.insert(c.labels()[static_cast<std::size_t>(v)]); });
    out.insert(l);
  }
  return out;
}

}  // namespace oracle
