#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "bits.hpp"
#include "linalg.hpp"

namespace sqfree {

// Finite simplicial complex with faces stored as bitsets, grouped by size.
// No faces at all is the void complex; {∅} alone is the empty complex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // `faces` must be closed under taking subsets.
  static SimplicialComplex from_faces(std::vector<Bits> faces) {
    SimplicialComplex k;
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (Bits f : faces) {
      std::size_t s = static_cast<std::size_t>(popcount(f));
      if (k.by_size_.size() <= s) k.by_size_.resize(s + 1);
      k.by_size_[s].push_back(f);
    }
    return k;
  }

  static SimplicialComplex from_facets(const std::vector<Bits>& facets) {
    std::unordered_set<Bits> seen;
    std::vector<Bits> faces;
    for (Bits f : facets) {
      Bits sub = f;
      for (;;) {
        if (seen.insert(sub).second) faces.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & f;
      }
    }
    return from_faces(std::move(faces));
  }

  bool is_void() const noexcept { return by_size_.empty(); }
  int max_face_size() const noexcept { return static_cast<int>(by_size_.size()) - 1; }
  const std::vector<Bits>& faces_of_size(int s) const { return by_size_[static_cast<std::size_t>(s)]; }
  long face_count(int s) const {
    return s < 0 || s >= static_cast<int>(by_size_.size()) ? 0 : static_cast<long>(by_size_[s].size());
  }

 private:
  std::vector<std::vector<Bits>> by_size_;  // each list sorted
};

// Augmented simplicial chain complex with integer boundary matrices.
// boundary(s) maps chains on faces of size s to faces of size s-1.
class ChainComplex {
 public:
  explicit ChainComplex(const SimplicialComplex& k, bool check = true) : k_(&k) {
    const int top = k.max_face_size();
    boundary_.resize(static_cast<std::size_t>(std::max(top + 1, 0)));
    for (int s = 1; s <= top; ++s) {
      const auto& dom = k.faces_of_size(s);
      const auto& cod = k.faces_of_size(s - 1);
      SparseMatrix& d = boundary_[static_cast<std::size_t>(s)];
      d.rows = static_cast<int>(dom.size());
      d.cols = static_cast<int>(cod.size());
      d.entries.resize(dom.size());
      for (std::size_t r = 0; r < dom.size(); ++r) {
        int pos = 0;
        for_each_bit(dom[r], [&](int v) {
          Bits face = dom[r] & ~bit(v);
          auto it = std::lower_bound(cod.begin(), cod.end(), face);
          if (it == cod.end() || *it != face) throw std::logic_error("face set is not closed under subsets");
          d.entries[r].emplace_back(static_cast<int>(it - cod.begin()), pos % 2 == 0 ? 1 : -1);
          ++pos;
        });
        std::sort(d.entries[r].begin(), d.entries[r].end());
      }
    }
    if (check && !boundary_squares_to_zero()) throw std::logic_error("boundary does not square to zero");
  }

  const SparseMatrix& boundary(int s) const { return boundary_[static_cast<std::size_t>(s)]; }
  int max_face_size() const noexcept { return k_->max_face_size(); }

  bool boundary_squares_to_zero() const {
    for (std::size_t s = 2; s < boundary_.size(); ++s) {
      const SparseMatrix& hi = boundary_[s];
      const SparseMatrix& lo = boundary_[s - 1];
      for (const auto& row : hi.entries) {
        std::map<int, long> acc;
        for (auto [mid, coef] : row)
          for (auto [c, v] : lo.entries[static_cast<std::size_t>(mid)]) acc[c] += static_cast<long>(coef) * v;
        for (const auto& [c, v] : acc)
          if (v != 0) return false;
      }
    }
    return true;
  }

  // h[s] = rank of reduced homology in dimension s-1 (face size s).
  std::vector<long> reduced_homology(Field f) const {
    const int top = max_face_size();
    if (top < 0) return {};
    std::vector<long> rk(static_cast<std::size_t>(top + 2), 0);
    for (int s = 1; s <= top; ++s) rk[static_cast<std::size_t>(s)] = rank(boundary_[static_cast<std::size_t>(s)], f);
    std::vector<long> h(static_cast<std::size_t>(top + 1));
    for (int s = 0; s <= top; ++s)
      h[static_cast<std::size_t>(s)] = k_->face_count(s) - rk[static_cast<std::size_t>(s)] - rk[static_cast<std::size_t>(s + 1)];
    return h;
  }

  // Reduced Euler characteristic from face counts: sum of (-1)^(s-1) f_s.
  long euler_characteristic() const {
    long e = 0;
    for (int s = 0; s <= max_face_size(); ++s) e += (s % 2 == 1 ? 1 : -1) * k_->face_count(s);
    return e;
  }

 private:
  const SimplicialComplex* k_;
  std::vector<SparseMatrix> boundary_;
};

inline long alternating_sum(const std::vector<long>& h) {
  long e = 0;
  for (std::size_t s = 0; s < h.size(); ++s) e += (s % 2 == 1 ? 1 : -1) * h[s];
  return e;
}

}  // namespace sqfree
