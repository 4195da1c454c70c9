#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace sqfree {

enum class Field { GF2, QQ };

constexpr const char* to_string(Field f) noexcept { return f == Field::GF2 ? "gf2" : "qq"; }

// Integer matrix stored by rows; each row is sorted by column.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, int>>> entries;
};

// Dense bit-packed elimination; rows are reduced against a pivot table
// keyed by leading column.
inline long rank_gf2(const SparseMatrix& a) {
  if (a.rows == 0 || a.cols == 0) return 0;
  const std::size_t words = (static_cast<std::size_t>(a.cols) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pivot(static_cast<std::size_t>(a.cols));
  std::vector<std::uint64_t> row(words);
  long rank = 0;
  for (const auto& r : a.entries) {
    std::fill(row.begin(), row.end(), 0);
    bool any = false;
    for (auto [c, v] : r)
      if (v & 1) {
        row[static_cast<std::size_t>(c) / 64] ^= std::uint64_t{1} << (c % 64);
        any = true;
      }
    if (!any) continue;
    for (std::size_t w = 0; w < words; ++w) {
      while (row[w] != 0) {
        int c = static_cast<int>(w * 64) + __builtin_ctzll(row[w]);
        auto& p = pivot[static_cast<std::size_t>(c)];
        if (p.empty()) {
          p = row;
          ++rank;
          goto next_row;
        }
        for (std::size_t x = w; x < words; ++x) row[x] ^= p[x];
      }
    }
  next_row:;
  }
  return rank;
}

// Sparse elimination over the rationals with Markowitz pivoting: each step
// takes the nonzero (r, c) minimizing (row length - 1)(column count - 1).
inline long rank_qq(const SparseMatrix& a) {
  using Row = std::vector<std::pair<int, mpq_class>>;
  std::vector<Row> rows;
  rows.reserve(a.entries.size());
  std::vector<long> col_count(static_cast<std::size_t>(a.cols), 0);
  for (const auto& r : a.entries) {
    Row row;
    for (auto [c, v] : r)
      if (v != 0) {
        row.emplace_back(c, mpq_class(v));
        ++col_count[static_cast<std::size_t>(c)];
      }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  std::vector<char> active(rows.size(), 1);
  long rank = 0;
  for (;;) {
    long best_cost = std::numeric_limits<long>::max();
    std::size_t pr = 0;
    std::size_t pe = 0;
    for (std::size_t r = 0; r < rows.size() && best_cost > 0; ++r) {
      if (!active[r]) continue;
      const long len = static_cast<long>(rows[r].size()) - 1;
      for (std::size_t e = 0; e < rows[r].size(); ++e) {
        long cost = len * (col_count[static_cast<std::size_t>(rows[r][e].first)] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          pr = r;
          pe = e;
          if (cost == 0) break;
        }
      }
    }
    if (best_cost == std::numeric_limits<long>::max()) break;

    const Row pivot_row = rows[pr];
    const int pc = pivot_row[pe].first;
    const mpq_class pv = pivot_row[pe].second;
    active[pr] = 0;
    for (const auto& [c, v] : pivot_row) --col_count[static_cast<std::size_t>(c)];
    ++rank;

    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!active[r]) continue;
      Row& row = rows[r];
      auto hit = std::lower_bound(row.begin(), row.end(), pc,
                                  [](const auto& x, int c) { return x.first < c; });
      if (hit == row.end() || hit->first != pc) continue;
      const mpq_class factor = hit->second / pv;
      for (const auto& [c, v] : row) --col_count[static_cast<std::size_t>(c)];
      Row merged;
      merged.reserve(row.size() + pivot_row.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < pivot_row.size()) {
        if (j == pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
          merged.push_back(std::move(row[i++]));
        } else if (i == row.size() || pivot_row[j].first < row[i].first) {
          merged.emplace_back(pivot_row[j].first, -factor * pivot_row[j].second);
          ++j;
        } else {
          mpq_class v = row[i].second - factor * pivot_row[j].second;
          if (v != 0) merged.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      row = std::move(merged);
      for (const auto& [c, v] : row) ++col_count[static_cast<std::size_t>(c)];
      if (row.empty()) active[r] = 0;
    }
  }
  return rank;
}

inline long rank(const SparseMatrix& a, Field f) { return f == Field::GF2 ? rank_gf2(a) : rank_qq(a); }

}  // namespace sqfree
