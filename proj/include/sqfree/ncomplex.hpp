#pragma once

#include <algorithm>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "tree.hpp"

namespace sqfree {

struct Facet {
  VertexSet vertices = 0;
  int center = 0;
  int size() const noexcept { return popcount(vertices); }
  friend bool operator==(const Facet&, const Facet&) = default;
};

// Facet list of the closed neighborhood complex, ordered by center.
// conflicts(i) holds every facet meeting facet i, including i itself.
class NComplex {
 public:
  NComplex() = default;
  NComplex(int n, std::vector<Label> labels, std::vector<Facet> facets)
      : n_(n), labels_(std::move(labels)), facets_(std::move(facets)) {
    if (facets_.size() > static_cast<std::size_t>(kMaxBits))
      throw Error(Errc::TooLarge, "at most 64 facets are supported");
    std::sort(facets_.begin(), facets_.end(),
              [](const Facet& a, const Facet& b) { return a.center < b.center; });
    facet_of_center_.assign(static_cast<std::size_t>(n_), -1);
    conflicts_.assign(facets_.size(), 0);
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      facet_of_center_[facets_[i].center] = static_cast<int>(i);
      for (std::size_t j = 0; j < facets_.size(); ++j)
        if ((facets_[i].vertices & facets_[j].vertices) != 0) conflicts_[i] |= bit(static_cast<int>(j));
    }
  }

  int n() const noexcept { return n_; }
  int facet_count() const noexcept { return static_cast<int>(facets_.size()); }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const Facet& facet(int i) const { return facets_[static_cast<std::size_t>(i)]; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  Bits all_facets() const noexcept { return full_set(facet_count()); }

  // Index of the facet N[u], or -1 when N[u] is not a facet.
  int facet_of_center(int u) const { return facet_of_center_[static_cast<std::size_t>(u)]; }
  Bits conflicts(int i) const { return conflicts_[static_cast<std::size_t>(i)]; }

  VertexSet union_of(Bits facet_set) const {
    VertexSet v = 0;
    for_each_bit(facet_set, [&](int i) { v |= facets_[i].vertices; });
    return v;
  }

  // Facets whose vertex set avoids `forbidden`.
  Bits facets_avoiding(VertexSet forbidden) const {
    Bits out = 0;
    for (std::size_t i = 0; i < facets_.size(); ++i)
      if ((facets_[i].vertices & forbidden) == 0) out |= bit(static_cast<int>(i));
    return out;
  }

  friend bool operator==(const NComplex& a, const NComplex& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_ && a.facets_ == b.facets_;
  }

 private:
  int n_ = 0;
  std::vector<Label> labels_;
  std::vector<Facet> facets_;
  std::vector<int> facet_of_center_;
  std::vector<Bits> conflicts_;
};

// The inclusion-minimal closed neighborhoods. N[u] and N[v] coincide only
// in the one-edge tree, where the smaller label is kept as center.
inline NComplex neighborhood_facets(const Tree& t) {
  const int n = t.size();
  std::vector<Facet> facets;
  for (int u = 0; u < n; ++u) {
    VertexSet nu = t.closed_neighborhood(u);
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v) {
      if (v == u) continue;
      VertexSet nv = t.closed_neighborhood(v);
      if (subset_of(nv, nu) && (nv != nu || v < u)) minimal = false;
    }
    if (minimal) facets.push_back({nu, u});
  }
  return NComplex(n, t.labels(), std::move(facets));
}

struct ForestCertificate {
  bool is_forest = false;
  std::vector<int> removal_order;  // facet indices, leaves first
};

// Iterated leaf removal. F is a leaf of the remaining collection when it is
// alone or some other G has F∩G ⊇ F∩H for every other H.
inline ForestCertificate is_simplicial_forest(const NComplex& c) {
  ForestCertificate cert;
  Bits alive = c.all_facets();
  auto is_leaf = [&](int f) {
    Bits others = alive & ~bit(f);
    if (others == 0) return true;
    VertexSet fv = c.facet(f).vertices;
    VertexSet meet_all = 0;
    for_each_bit(others, [&](int h) { meet_all |= fv & c.facet(h).vertices; });
    bool found = false;
    for_each_bit(others, [&](int g) {
      if (!found && subset_of(meet_all, fv & c.facet(g).vertices)) found = true;
    });
    return found;
  };
  while (alive != 0) {
    int leaf = -1;
    for_each_bit(alive, [&](int f) {
      if (leaf < 0 && is_leaf(f)) leaf = f;
    });
    if (leaf < 0) return cert;
    cert.removal_order.push_back(leaf);
    alive &= ~bit(leaf);
  }
  cert.is_forest = true;
  return cert;
}

}  // namespace sqfree
