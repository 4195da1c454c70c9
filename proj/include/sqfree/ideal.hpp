#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "bits.hpp"
#include "error.hpp"
#include "matching.hpp"
#include "monomial.hpp"
#include "ncomplex.hpp"
#include "tree.hpp"

namespace sqfree {

inline constexpr std::size_t kDefaultProductBudget = 10'000'000;

// Monomial ideal held by its minimal generators in canonical order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}

  // Keeps the divisibility-minimal members of `monomials`.
  static MonomialIdeal minimalize(int nvars, std::vector<Monomial> monomials) {
    for (const auto& m : monomials)
      if (m.nvars() != nvars) throw Error(Errc::SizeMismatch, "monomial has the wrong number of variables");
    std::sort(monomials.begin(), monomials.end(), graded_less);
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    MonomialIdeal out(nvars);
    for (auto& m : monomials) {
      bool redundant = false;
      for (const auto& g : out.gens_)
        if (g.divides(m)) {
          redundant = true;
          break;
        }
      if (!redundant) out.gens_.push_back(std::move(m));
    }
    return out;
  }

  int nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }

  int min_degree() const {
    int d = gens_.empty() ? 0 : gens_.front().degree();
    for (const auto& g : gens_) d = std::min(d, g.degree());
    return d;
  }
  // deg(I): the largest degree of a minimal generator.
  int max_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }
  bool is_equigenerated() const { return gens_.empty() || min_degree() == max_degree(); }
  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
  }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int nvars_ = 0;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal ni_ideal(const NComplex& c) {
  std::vector<Monomial> gens;
  for (const auto& f : c.facets()) gens.push_back(Monomial::squarefree(c.n(), f.vertices));
  return MonomialIdeal::minimalize(c.n(), std::move(gens));
}
inline MonomialIdeal ni_ideal(const Tree& t) { return ni_ideal(neighborhood_facets(t)); }

// Generators x_{V_M} over the k-matchings M. Throws KTooLarge when k > ν
// unless `allow_zero`, in which case the zero ideal is returned.
inline MonomialIdeal sqfree_power_matchings(const NComplex& c, int k, bool allow_zero = false) {
  if (k < 1) throw Error(Errc::BadParameter, "k must be at least 1");
  std::vector<Matching> ms = enumerate_matchings(c, k);
  if (ms.empty() && !allow_zero) throw Error(Errc::KTooLarge, "no " + std::to_string(k) + "-matching exists");
  std::vector<Monomial> gens;
  for (const auto& m : ms) gens.push_back(Monomial::squarefree(c.n(), m.vertices));
  return MonomialIdeal::minimalize(c.n(), std::move(gens));
}
inline MonomialIdeal sqfree_power_matchings(const Tree& t, int k, bool allow_zero = false) {
  return sqfree_power_matchings(neighborhood_facets(t), k, allow_zero);
}

// Squarefree products of k generators (with repetition), minimalized.
inline MonomialIdeal sqfree_power_bruteforce(const MonomialIdeal& ideal, int k,
                                             std::size_t budget = kDefaultProductBudget) {
  if (k < 1) throw Error(Errc::BadParameter, "k must be at least 1");
  const auto& g = ideal.gens();
  const std::size_t m = g.size();
  // C(m + k - 1, k) multisets, checked against the budget before any work.
  long double count = 1;
  for (int i = 1; i <= k; ++i) count = count * static_cast<long double>(m + static_cast<std::size_t>(i) - 1) / i;
  if (count > static_cast<long double>(budget))
    throw Error(Errc::BudgetExceeded, "k-fold products exceed the budget");

  std::vector<Monomial> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, const Monomial&)> rec = [&](std::size_t from, const Monomial& acc) {
    if (static_cast<int>(pick.size()) == k) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      Monomial next = acc * g[i];
      if (!next.is_squarefree()) continue;
      pick.push_back(i);
      rec(i, next);
      pick.pop_back();
    }
  };
  rec(0, Monomial(ideal.nvars()));
  return MonomialIdeal::minimalize(ideal.nvars(), std::move(out));
}

// All degree-a monomials of I, i.e. the generators of I_<a>.
inline MonomialIdeal graded_component(const MonomialIdeal& ideal, int a,
                                      std::size_t budget = kDefaultProductBudget) {
  const int n = ideal.nvars();
  std::set<Monomial> seen;
  std::size_t produced = 0;
  for (const auto& g : ideal.gens()) {
    int extra = a - g.degree();
    if (extra < 0) continue;
    Monomial cur = g;
    std::function<void(int, int)> rec = [&](int var, int left) {
      if (left == 0) {
        if (++produced > budget) throw Error(Errc::BudgetExceeded, "graded component exceeds the budget");
        seen.insert(cur);
        return;
      }
      for (int v = var; v < n; ++v) {
        std::vector<int> e = cur.exponents();
        Monomial saved = cur;
        ++e[static_cast<std::size_t>(v)];
        cur = Monomial(std::move(e));
        rec(v, left - 1);
        cur = saved;
      }
    };
    rec(0, extra);
  }
  return MonomialIdeal::minimalize(n, {seen.begin(), seen.end()});
}

// All squarefree degree-a monomials of a squarefree ideal: the generators
// of its squarefree component I_[a].
inline MonomialIdeal squarefree_component(const MonomialIdeal& ideal, int a,
                                          std::size_t budget = kDefaultProductBudget) {
  const int n = ideal.nvars();
  if (n > kMaxBits) throw Error(Errc::TooLarge, "squarefree components need at most 64 variables");
  std::set<Bits> seen;
  std::size_t produced = 0;
  for (const auto& g : ideal.gens()) {
    if (!g.is_squarefree()) continue;
    Bits s = g.support();
    int extra = a - popcount(s);
    if (extra < 0) continue;
    Bits free = full_set(n) & ~s;
    std::function<void(Bits, int, Bits)> rec = [&](Bits cur, int left, Bits avail) {
      if (left == 0) {
        if (++produced > budget) throw Error(Errc::BudgetExceeded, "squarefree component exceeds the budget");
        seen.insert(cur);
        return;
      }
      while (popcount(avail) >= left) {
        int v = lowest(avail);
        avail &= ~bit(v);
        rec(cur | bit(v), left - 1, avail);
      }
    };
    rec(s, extra, free);
  }
  std::vector<Monomial> gens;
  for (Bits s : seen) gens.push_back(Monomial::squarefree(n, s));
  return MonomialIdeal::minimalize(n, std::move(gens));
}

// I : f for a monomial f.
inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(g.colon(f));
  return MonomialIdeal::minimalize(ideal.nvars(), std::move(gens));
}

// Joins of nonempty generator subsets, by closure under pairwise lcm.
inline std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t budget = 1'000'000) {
  std::set<Monomial> points(ideal.gens().begin(), ideal.gens().end());
  std::vector<Monomial> frontier(points.begin(), points.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& p : frontier)
      for (const auto& g : ideal.gens()) {
        Monomial l = lcm(p, g);
        if (points.insert(l).second) {
          if (points.size() > budget) throw Error(Errc::BudgetExceeded, "lcm lattice exceeds the budget");
          next.push_back(std::move(l));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Monomial> out(points.begin(), points.end());
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

inline std::string format(const MonomialIdeal& ideal, const std::vector<std::string>& names = {}) {
  std::string s = "(";
  for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
    if (i) s += ", ";
    s += format(ideal.gens()[i], names);
  }
  return s + ")";
}

}  // namespace sqfree
