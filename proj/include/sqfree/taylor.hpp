#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "betti.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "linalg.hpp"
#include "monomial.hpp"

namespace sqfree {

// Dense rank used only by the Taylor route, kept apart from the sparse
// kernels it is meant to check. QQ uses fraction-free Bareiss elimination.
inline long dense_rank(std::vector<std::vector<std::int64_t>> a, Field f) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a.front().size();
  long rank = 0;
  if (f == Field::GF2) {
    for (auto& row : a)
      for (auto& x : row) x = ((x % 2) + 2) % 2;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
      std::size_t p = static_cast<std::size_t>(rank);
      while (p < rows && a[p][c] == 0) ++p;
      if (p == rows) continue;
      std::swap(a[p], a[static_cast<std::size_t>(rank)]);
      for (std::size_t r = 0; r < rows; ++r)
        if (r != static_cast<std::size_t>(rank) && a[r][c])
          for (std::size_t k = c; k < cols; ++k) a[r][k] ^= a[static_cast<std::size_t>(rank)][k];
      ++rank;
    }
    return rank;
  }
  std::vector<std::vector<__int128>> m(rows, std::vector<__int128>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = a[r][c];
  __int128 prev = 1;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    const std::size_t k = static_cast<std::size_t>(rank);
    std::size_t p = k;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[k]);
    for (std::size_t r = k + 1; r < rows; ++r) {
      for (std::size_t x = c + 1; x < cols; ++x) m[r][x] = (m[k][c] * m[r][x] - m[r][c] * m[k][x]) / prev;
      m[r][c] = 0;
    }
    prev = m[k][c];
    ++rank;
  }
  return rank;
}

// Betti numbers from the Taylor resolution tensored with the field: in
// multidegree b the complex has one basis element per generator subset with
// lcm exactly b, and the differential keeps the faces of the same lcm.
inline BettiTable taylor_betti(const MonomialIdeal& ideal, Field f) {
  const auto& g = ideal.gens();
  const std::size_t m = g.size();
  if (m > 12) throw Error(Errc::TooLarge, "the Taylor oracle supports at most 12 generators");
  std::map<Monomial, std::vector<std::uint32_t>> by_lcm;
  for (std::uint32_t s = 1; s < (1u << m); ++s) {
    Monomial l(ideal.nvars());
    for (std::size_t i = 0; i < m; ++i)
      if (s >> i & 1u) l = lcm(l, g[i]);
    by_lcm[l].push_back(s);
  }
  BettiTable table(ideal.nvars(), f);
  for (const auto& [b, subsets] : by_lcm) {
    std::map<int, std::vector<std::uint32_t>> by_size;
    for (auto s : subsets) by_size[__builtin_popcount(s)].push_back(s);
    const int top = by_size.rbegin()->first;
    // rk[s] = rank of the map from subsets of size s to size s - 1.
    std::vector<long> rk(static_cast<std::size_t>(top + 2), 0);
    for (int s = 2; s <= top; ++s) {
      const auto& dom = by_size[s];
      const auto& cod = by_size[s - 1];
      if (dom.empty() || cod.empty()) continue;
      std::vector<std::vector<std::int64_t>> mat(dom.size(), std::vector<std::int64_t>(cod.size(), 0));
      for (std::size_t r = 0; r < dom.size(); ++r) {
        int pos = 0;
        for (std::size_t i = 0; i < m; ++i) {
          if (!(dom[r] >> i & 1u)) continue;
          auto face = dom[r] & ~(1u << i);
          auto it = std::find(cod.begin(), cod.end(), face);
          if (it != cod.end()) mat[r][static_cast<std::size_t>(it - cod.begin())] = pos % 2 == 0 ? 1 : -1;
          ++pos;
        }
      }
      rk[static_cast<std::size_t>(s)] = dense_rank(std::move(mat), f);
    }
    for (int s = 1; s <= top; ++s) {
      long dim = static_cast<long>(by_size[s].size());
      long h = dim - rk[static_cast<std::size_t>(s)] - rk[static_cast<std::size_t>(s + 1)];
      table.add(s - 1, b, h);
    }
  }
  return table;
}

// Joins of all nonempty generator subsets, enumerated directly.
inline std::vector<Monomial> subset_join_lattice(const MonomialIdeal& ideal) {
  const auto& g = ideal.gens();
  if (g.size() > 20) throw Error(Errc::TooLarge, "subset enumeration supports at most 20 generators");
  std::set<Monomial> out;
  for (std::uint32_t s = 1; s < (1u << g.size()); ++s) {
    Monomial l(ideal.nvars());
    for (std::size_t i = 0; i < g.size(); ++i)
      if (s >> i & 1u) l = lcm(l, g[i]);
    out.insert(l);
  }
  std::vector<Monomial> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), graded_less);
  return v;
}

}  // namespace sqfree
