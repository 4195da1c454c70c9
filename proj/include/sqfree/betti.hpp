#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "chain.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "linalg.hpp"
#include "monomial.hpp"

namespace sqfree {

struct BettiOptions {
  Field field = Field::GF2;
  std::size_t lattice_budget = 1'000'000;
  unsigned threads = 1;
  // Squarefree ideals in at most this many variables use the subset-table
  // engine; others go through the lcm lattice.
  int table_max_vars = 16;
  bool check_euler = true;
};

// Multigraded Betti numbers of an ideal I: entries (i, b) -> β_{i,b}(I).
class BettiTable {
 public:
  using Key = std::pair<int, Monomial>;

  BettiTable() = default;
  BettiTable(int nvars, Field field) : nvars_(nvars), field_(field) {}

  void add(int i, const Monomial& b, long r) {
    if (r < 0) throw std::logic_error("negative Betti number");
    if (r > 0) entries_[{i, b}] += r;
  }

  int nvars() const noexcept { return nvars_; }
  Field field() const noexcept { return field_; }
  const std::map<Key, long>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  long multigraded(int i, const Monomial& b) const {
    auto it = entries_.find({i, b});
    return it == entries_.end() ? 0 : it->second;
  }

  // (i, j) -> β_{i,j}(I), summed over |b| = j.
  std::map<std::pair<int, int>, long> graded() const {
    std::map<std::pair<int, int>, long> out;
    for (const auto& [k, r] : entries_) out[{k.first, k.second.degree()}] += r;
    return out;
  }

  long graded(int i, int j) const {
    auto g = graded();
    auto it = g.find({i, j});
    return it == g.end() ? 0 : it->second;
  }

  // reg(I) = max j - i over nonzero β_{i,j}(I); empty for the zero ideal.
  std::optional<int> regularity() const {
    std::optional<int> r;
    for (const auto& [k, v] : entries_) {
      int x = k.second.degree() - k.first;
      if (!r || x > *r) r = x;
    }
    return r;
  }

  // Betti numbers of S/I: β_{0,0} = 1 and β_{i+1,j}(S/I) = β_{i,j}(I).
  std::map<std::pair<int, int>, long> graded_quotient() const {
    std::map<std::pair<int, int>, long> out{{{0, 0}, 1}};
    for (const auto& [ij, r] : graded()) out[{ij.first + 1, ij.second}] += r;
    return out;
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries_ == b.entries_; }

 private:
  int nvars_ = 0;
  Field field_ = Field::GF2;
  std::map<Key, long> entries_;
};

namespace detail {

inline std::vector<long> homology_of(const SimplicialComplex& k, const BettiOptions& opt) {
  ChainComplex cc(k);
  std::vector<long> h = cc.reduced_homology(opt.field);
  if (opt.check_euler && alternating_sum(h) != cc.euler_characteristic())
    throw std::logic_error("Euler characteristic mismatch");
  return h;
}

// Runs job(index) -> vector<pair<int,long>> over [0, count) on up to
// `threads` workers; results come back in index order.
template <class Job>
std::vector<std::vector<std::pair<int, long>>> run_jobs(std::size_t count, unsigned threads, Job&& job) {
  std::vector<std::vector<std::pair<int, long>>> out(count);
  unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = job(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = job(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

inline std::vector<std::pair<int, long>> nonzero(const std::vector<long>& h) {
  std::vector<std::pair<int, long>> out;
  for (std::size_t s = 0; s < h.size(); ++s)
    if (h[s] != 0) out.emplace_back(static_cast<int>(s), h[s]);
  return out;
}

// Squarefree ideal in few variables. With floor j > 0 this computes the
// Betti numbers of the squarefree component I_[j] without listing its
// generators: c lies in I_[j] iff |c| >= j and c contains a generator of
// degree <= j.
inline BettiTable table_engine(const MonomialIdeal& ideal, int floor, const BettiOptions& opt) {
  const int n = ideal.nvars();
  const Bits universe = full_set(n);
  const std::size_t size = std::size_t{1} << n;
  std::vector<char> member(size, 0), small(size, 0);
  std::vector<Bits> exact(size, 0);
  for (const auto& g : ideal.gens()) {
    Bits s = g.support();
    int d = popcount(s);
    if (floor > 0 && d > floor) continue;
    member[s] = 1;
    if (floor == 0 || d == floor) exact[s] |= s;
    if (floor > 0 && d < floor) small[s] = 1;
  }
  for (int v = 0; v < n; ++v)
    for (Bits b = 0; b < size; ++b)
      if (has(b, v)) {
        Bits a = b & ~bit(v);
        member[b] |= member[a];
        small[b] |= small[a];
        exact[b] |= exact[a];
      }
  auto in_ideal = [&](Bits c) { return member[c] && popcount(c) >= floor; };

  std::vector<Bits> lattice;
  for (Bits b = 1; b <= universe; ++b) {
    if (!in_ideal(b)) continue;
    Bits covered = small[b] ? b : exact[b];
    if (covered == b) lattice.push_back(b);
    if (b == universe) break;
  }
  if (lattice.size() > opt.lattice_budget) throw Error(Errc::BudgetExceeded, "lcm lattice exceeds the budget");

  auto results = run_jobs(lattice.size(), opt.threads, [&](std::size_t idx) {
    const Bits b = lattice[idx];
    std::vector<Bits> faces;
    Bits c = b;
    for (;;) {
      if (in_ideal(c)) faces.push_back(b & ~c);
      if (c == 0) break;
      c = (c - 1) & b;
    }
    return nonzero(homology_of(SimplicialComplex::from_faces(std::move(faces)), opt));
  });
  BettiTable table(n, opt.field);
  for (std::size_t idx = 0; idx < lattice.size(); ++idx)
    for (auto [i, r] : results[idx]) table.add(i, Monomial::squarefree(n, lattice[idx]), r);
  return table;
}

// Facets of K^b: the maximal sets {p : b_p > g_p} over generators g | x^b.
inline std::vector<Bits> koszul_facets(const MonomialIdeal& ideal, const Monomial& b) {
  std::vector<Bits> gens;
  for (const auto& g : ideal.gens()) {
    if (!g.divides(b)) continue;
    Bits s = 0;
    for (int p = 0; p < ideal.nvars(); ++p)
      if (b.exponent(p) > g.exponent(p)) s |= bit(p);
    gens.push_back(s);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Bits> facets;
  for (Bits s : gens) {
    bool maximal = true;
    for (Bits o : gens)
      if (o != s && subset_of(s, o)) maximal = false;
    if (maximal) facets.push_back(s);
  }
  return facets;
}

// K^b is generated by the sets {p : b_p > g_p} over generators g | x^b.
inline BettiTable lattice_engine(const MonomialIdeal& ideal, const BettiOptions& opt) {
  const int n = ideal.nvars();
  if (n > kMaxBits) throw Error(Errc::TooLarge, "the Betti engine supports at most 64 variables");
  const std::vector<Monomial> lattice = lcm_lattice(ideal, opt.lattice_budget);
  auto results = run_jobs(lattice.size(), opt.threads, [&](std::size_t idx) {
    const std::vector<Bits> facets = koszul_facets(ideal, lattice[idx]);
    Bits apex = ~Bits{0};
    for (Bits f : facets) apex &= f;
    if (apex != 0) return std::vector<std::pair<int, long>>{};
    return nonzero(homology_of(SimplicialComplex::from_facets(facets), opt));
  });
  BettiTable table(n, opt.field);
  for (std::size_t idx = 0; idx < lattice.size(); ++idx)
    for (auto [i, r] : results[idx]) table.add(i, lattice[idx], r);
  return table;
}

}  // namespace detail

// The upper Koszul complex K^b = {σ ⊆ supp b : x^b / x^σ ∈ I}; void when
// x^b is not in I.
inline SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& b) {
  if (ideal.nvars() > kMaxBits) throw Error(Errc::TooLarge, "at most 64 variables");
  return SimplicialComplex::from_facets(detail::koszul_facets(ideal, b));
}

// β_{i,b}(I) = dim H̃_{i-1}(K^b) over the lcm lattice, where
// K^b = {σ ⊆ supp b : x^b / x^σ ∈ I}.
inline BettiTable graded_betti(const MonomialIdeal& ideal, const BettiOptions& opt = {}) {
  if (ideal.is_zero()) return BettiTable(ideal.nvars(), opt.field);
  if (ideal.is_squarefree() && ideal.nvars() <= opt.table_max_vars) return detail::table_engine(ideal, 0, opt);
  return detail::lattice_engine(ideal, opt);
}

// Same numbers, always through the lcm lattice.
inline BettiTable graded_betti_lattice(const MonomialIdeal& ideal, const BettiOptions& opt = {}) {
  if (ideal.is_zero()) return BettiTable(ideal.nvars(), opt.field);
  return detail::lattice_engine(ideal, opt);
}

// Betti numbers of the squarefree component I_[j] of a squarefree ideal.
inline BettiTable squarefree_component_betti(const MonomialIdeal& ideal, int j, const BettiOptions& opt = {}) {
  if (!ideal.is_squarefree()) throw Error(Errc::BadParameter, "ideal is not squarefree");
  if (ideal.nvars() <= opt.table_max_vars) {
    if (j < 1) throw Error(Errc::BadParameter, "component degree must be positive");
    return detail::table_engine(ideal, j, opt);
  }
  return graded_betti(squarefree_component(ideal, j), opt);
}

enum class RegMode { Ideal, Quotient };

inline int regularity(const BettiTable& table, RegMode mode) {
  auto r = table.regularity();
  if (!r) {
    if (mode == RegMode::Quotient) return 0;
    throw Error(Errc::BadParameter, "the zero ideal has no regularity");
  }
  return mode == RegMode::Ideal ? *r : *r - 1;
}

inline int regularity(const MonomialIdeal& ideal, RegMode mode, const BettiOptions& opt = {}) {
  return regularity(graded_betti(ideal, opt), mode);
}

// All nonzero entries sit at |b| = i + d.
inline bool is_linear(const BettiTable& table, int d) {
  for (const auto& [k, r] : table.entries())
    if (k.second.degree() != k.first + d) return false;
  return true;
}

inline bool has_linear_resolution(const MonomialIdeal& component, const BettiOptions& opt = {}) {
  if (!component.is_equigenerated()) throw Error(Errc::NotEquigenerated, "generators differ in degree");
  if (component.is_zero()) return true;
  return is_linear(graded_betti(component, opt), component.min_degree());
}

enum class ComponentMode { Squarefree, Full };

struct ComponentCheck {
  int degree = 0;
  bool linear = false;
};

struct ComponentwiseReport {
  bool componentwise_linear = true;
  std::vector<ComponentCheck> components;
};

// Componentwise linearity tested on the components in degrees from the
// smallest to the largest generator degree. Squarefree mode uses the
// squarefree components I_[j]; Full mode uses I_<j>.
inline ComponentwiseReport componentwise_linearity(const MonomialIdeal& ideal, ComponentMode mode,
                                                   const BettiOptions& opt = {}) {
  ComponentwiseReport rep;
  if (ideal.is_zero()) return rep;
  if (mode == ComponentMode::Squarefree && !ideal.is_squarefree())
    throw Error(Errc::BadParameter, "squarefree mode needs a squarefree ideal");
  for (int j = ideal.min_degree(); j <= ideal.max_degree(); ++j) {
    BettiTable t = mode == ComponentMode::Squarefree ? squarefree_component_betti(ideal, j, opt)
                                                     : graded_betti(graded_component(ideal, j), opt);
    ComponentCheck c{j, is_linear(t, j)};
    rep.components.push_back(c);
    if (!c.linear) rep.componentwise_linear = false;
  }
  return rep;
}

// Macaulay2-style diagram: rows j - i, columns i.
inline std::string betti_diagram(const BettiTable& table, RegMode mode) {
  std::map<std::pair<int, int>, long> g = mode == RegMode::Quotient ? table.graded_quotient() : table.graded();
  if (g.empty()) return "0\n";
  int max_i = 0, min_row = 1 << 30, max_row = -(1 << 30);
  for (const auto& [ij, r] : g) {
    max_i = std::max(max_i, ij.first);
    min_row = std::min(min_row, ij.second - ij.first);
    max_row = std::max(max_row, ij.second - ij.first);
  }
  std::vector<long> total(static_cast<std::size_t>(max_i + 1), 0);
  for (const auto& [ij, r] : g) total[static_cast<std::size_t>(ij.first)] += r;
  std::size_t width = 1;
  for (long t : total) width = std::max(width, std::to_string(t).size());
  std::size_t label = std::max<std::size_t>(6, std::to_string(max_row).size() + 1);
  std::ostringstream out;
  auto cell = [&](const std::string& s) { out << ' ' << std::string(width - s.size(), ' ') << s; };
  out << std::string(label + 1, ' ');
  for (int i = 0; i <= max_i; ++i) cell(std::to_string(i));
  out << "\n" << std::string(label - 6, ' ') << "total:";
  for (long t : total) cell(std::to_string(t));
  out << "\n";
  for (int row = min_row; row <= max_row; ++row) {
    std::string l = std::to_string(row) + ":";
    out << std::string(label - l.size(), ' ') << l;
    for (int i = 0; i <= max_i; ++i) {
      auto it = g.find({i, i + row});
      cell(it == g.end() ? "." : std::to_string(it->second));
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sqfree
