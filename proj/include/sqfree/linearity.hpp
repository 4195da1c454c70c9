#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "betti.hpp"
#include "bits.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "matching.hpp"
#include "monomial.hpp"
#include "orders.hpp"

namespace sqfree {

enum class ConditionKind { C1, C2 };

constexpr const char* to_string(ConditionKind k) noexcept { return k == ConditionKind::C1 ? "C1" : "C2"; }

// A path violating C1 or C2 with the (ν-1)- or (ν-n)-matching Y and the two
// ν-matchings it produces.
struct ConditionWitness {
  ConditionKind kind = ConditionKind::C1;
  std::vector<int> path;
  Matching Y;
  Matching first;
  Matching second;
};

namespace detail {

inline bool label_less(const Tree& t, const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](int x, int y) { return t.label(x) < t.label(y); });
}

}  // namespace detail

// Paths r1, r, s, t, t1 with deg(s) >= 3 are scanned in label order; the
// first one admitting Y is returned.
inline std::optional<ConditionWitness> check_c1(const TreeAnalysis& a) {
  const Tree& t = a.tree;
  const NComplex& c = a.complex;
  std::vector<std::vector<int>> paths;
  for (int s = 0; s < t.size(); ++s) {
    if (t.degree(s) < 3) continue;
    for (int r : t.neighbors(s))
      for (int u : t.neighbors(s)) {
        if (r == u || c.facet_of_center(r) < 0 || c.facet_of_center(u) < 0) continue;
        for (int r1 : t.neighbors(r))
          for (int u1 : t.neighbors(u))
            if (r1 != s && u1 != s) paths.push_back({r1, r, s, u, u1});
      }
  }
  std::sort(paths.begin(), paths.end(),
            [&](const auto& x, const auto& y) { return detail::label_less(t, x, y); });
  for (const auto& p : paths) {
    const int fr = c.facet_of_center(p[1]);
    const int ft = c.facet_of_center(p[3]);
    const VertexSet forbidden = c.facet(fr).vertices | c.facet(ft).vertices;
    auto y = first_matching_within(c, c.facets_avoiding(forbidden), a.nu - 1);
    if (!y) continue;
    return ConditionWitness{ConditionKind::C1, p, *y, make_matching(c, y->facets | bit(fr)),
                            make_matching(c, y->facets | bit(ft))};
  }
  return std::nullopt;
}

// Tree paths p1..p_{3n-1} between vertices of degree >= 3, scanned in
// label order.
inline std::optional<ConditionWitness> check_c2(const TreeAnalysis& a) {
  const Tree& t = a.tree;
  const NComplex& c = a.complex;
  std::vector<std::vector<int>> paths;
  for (int r = 0; r < t.size(); ++r)
    for (int s = 0; s < t.size(); ++s) {
      if (r == s || t.degree(r) < 3 || t.degree(s) < 3) continue;
      auto p = t.path(r, s);
      if (p.size() % 3 == 2) paths.push_back(std::move(p));
    }
  std::sort(paths.begin(), paths.end(),
            [&](const auto& x, const auto& y) { return detail::label_less(t, x, y); });
  for (const auto& p : paths) {
    const int n = static_cast<int>(p.size() + 1) / 3;
    Bits fa = 0, fb = 0;
    bool facets = true;
    for (std::size_t q = 0; q < p.size() && facets; ++q) {
      if (q % 3 == 2) continue;
      int f = c.facet_of_center(p[q]);
      if (f < 0) facets = false;
      else (q % 3 == 0 ? fa : fb) |= bit(f);
    }
    if (!facets) continue;
    const VertexSet forbidden = c.union_of(fa) | c.union_of(fb);
    auto y = first_matching_within(c, c.facets_avoiding(forbidden), a.nu - n);
    if (!y) continue;
    return ConditionWitness{ConditionKind::C2, p, *y, make_matching(c, y->facets | fa),
                            make_matching(c, y->facets | fb)};
  }
  return std::nullopt;
}

struct LinearQuotientsResult {
  bool ok = true;
  int i = -1;  // 0-based position whose colon fails
  int j = -1;  // earlier generator not covered by a linear colon generator
};

// (u_1..u_{i-1}) : u_i is generated by variables iff every u_j : u_i is
// divisible by some u_k : u_i of degree one.
inline LinearQuotientsResult has_linear_quotients(const std::vector<Monomial>& gens) {
  for (std::size_t i = 1; i < gens.size(); ++i) {
    std::vector<Monomial> colons;
    std::vector<int> linear;
    for (std::size_t k = 0; k < i; ++k) {
      colons.push_back(gens[k].colon(gens[i]));
      if (colons.back().degree() == 1)
        for (int v = 0; v < colons.back().nvars(); ++v)
          if (colons.back().exponent(v) == 1) linear.push_back(v);
    }
    for (std::size_t j = 0; j < i; ++j) {
      bool covered = std::any_of(linear.begin(), linear.end(), [&](int v) { return colons[j].exponent(v) > 0; });
      if (!covered) return {false, static_cast<int>(i), static_cast<int>(j)};
    }
  }
  return {};
}

// Squarefree version over supports: u_k : u_i has support V_k \ V_i.
inline LinearQuotientsResult has_linear_quotients(const std::vector<VertexSet>& supports) {
  for (std::size_t i = 1; i < supports.size(); ++i) {
    VertexSet linear = 0;
    for (std::size_t k = 0; k < i; ++k) {
      VertexSet d = supports[k] & ~supports[i];
      if (popcount(d) == 1) linear |= d;
    }
    for (std::size_t j = 0; j < i; ++j)
      if ((supports[j] & ~supports[i] & linear) == 0) return {false, static_cast<int>(i), static_cast<int>(j)};
  }
  return {};
}

// Searches for an order with linear quotients. The colon of a prefix only
// depends on the prefix as a set, so failing sets are memoized. Returns the
// order as generator indices, or nothing if none exists within budget.
inline std::optional<std::vector<int>> find_linear_quotients_order(const std::vector<Monomial>& gens,
                                                                   std::size_t node_budget = 1'000'000) {
  const int m = static_cast<int>(gens.size());
  if (m > kMaxBits) throw Error(Errc::TooLarge, "order search supports at most 64 generators");
  std::unordered_set<Bits> dead;
  std::vector<int> order;
  std::size_t nodes = 0;
  auto admissible = [&](Bits used, int g) {
    std::vector<Monomial> colons;
    Bits linear = 0;
    for_each_bit(used, [&](int k) {
      colons.push_back(gens[k].colon(gens[g]));
      if (colons.back().degree() == 1)
        for (int v = 0; v < colons.back().nvars(); ++v)
          if (colons.back().exponent(v) == 1) linear |= bit(v % kMaxBits);
    });
    for (const auto& c : colons) {
      bool hit = false;
      for_each_bit(linear, [&](int v) { hit = hit || c.exponent(v) > 0; });
      if (!hit) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, Bits used) -> bool {
    if (popcount(used) == m) return true;
    if (dead.count(used) || ++nodes > node_budget) return false;
    for (int g = 0; g < m; ++g) {
      if (has(used, g) || !admissible(used, g)) continue;
      order.push_back(g);
      if (self(self, used | bit(g))) return true;
      order.pop_back();
    }
    dead.insert(used);
    return false;
  };
  if (m == 0 || rec(rec, 0)) return order;
  return std::nullopt;
}

// G_I: generators of an equigenerated ideal, adjacent when their lcm has
// degree d + 1.
struct GIGraph {
  std::vector<Monomial> nodes;
  std::vector<std::pair<int, int>> edges;
};

inline GIGraph gi_graph(const std::vector<Monomial>& gens) {
  GIGraph g{gens, {}};
  if (gens.empty()) return g;
  const int d = gens.front().degree();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree() != d) throw Error(Errc::NotEquigenerated, "generators differ in degree");
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (lcm(gens[i], gens[j]).degree() == d + 1) g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return g;
}

struct LinearlyRelatedResult {
  bool related = true;
  std::optional<std::pair<int, int>> disconnected;  // generator indices
};

namespace detail {

// Whether u and v are joined inside G^{(u,v)}, the subgraph induced on the
// generators dividing lcm(u, v).
inline bool connected_in_lcm_graph(const std::vector<Monomial>& gens, int d, int u, int v) {
  const Monomial l = lcm(gens[static_cast<std::size_t>(u)], gens[static_cast<std::size_t>(v)]);
  std::vector<int> inside;
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (gens[k].divides(l)) inside.push_back(static_cast<int>(k));
  std::vector<char> seen(gens.size(), 0);
  std::vector<int> stack{u};
  seen[static_cast<std::size_t>(u)] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == v) return true;
    for (int y : inside)
      if (!seen[static_cast<std::size_t>(y)] && lcm(gens[static_cast<std::size_t>(x)], gens[static_cast<std::size_t>(y)]).degree() == d + 1) {
        seen[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
  }
  return false;
}

}  // namespace detail

inline LinearlyRelatedResult is_linearly_related(const std::vector<Monomial>& gens) {
  if (gens.empty()) return {};
  const int d = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != d) throw Error(Errc::NotEquigenerated, "generators differ in degree");
  const int m = static_cast<int>(gens.size());
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (!detail::connected_in_lcm_graph(gens, d, u, v)) return {false, std::make_pair(u, v)};
  return {};
}

// Two degree-a monomials of NI^[ν] built from a condition witness that are
// disconnected in G^{(u,v)} of the component in degree a.
struct NonlinearCertificate {
  int degree = 0;
  Monomial u;
  Monomial v;
};

// u = u' x_{D_v \ P}, v = v' x_{D_u \ Q} with |P| = |Q| = 2, where u', v'
// are the witness matchings' monomials and D_u, D_v their support
// differences. Every choice of P and Q is tried.
inline std::optional<NonlinearCertificate> nonlinear_certificate(const TreeAnalysis& a, const ConditionWitness& w) {
  const NComplex& c = a.complex;
  const VertexSet su = w.first.vertices, sv = w.second.vertices;
  const VertexSet du = su & ~sv, dv = sv & ~su;
  if (popcount(du) < 2 || popcount(dv) < 2) return std::nullopt;
  const VertexSet whole = su | sv;
  const int deg = popcount(whole) - 2;

  std::vector<VertexSet> supports;
  for (const auto& m : a.nu_matchings) supports.push_back(m.vertices);
  auto in_ideal = [&](VertexSet s) {
    return std::any_of(supports.begin(), supports.end(), [&](VertexSet g) { return subset_of(g, s); });
  };
  auto pairs_of = [](VertexSet s) {
    std::vector<VertexSet> out;
    auto e = elements(s);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) out.push_back(bit(e[i]) | bit(e[j]));
    return out;
  };
  for (VertexSet p : pairs_of(dv))
    for (VertexSet q : pairs_of(du)) {
      const VertexSet u = su | (dv & ~p);
      const VertexSet v = sv | (du & ~q);
      const VertexSet l = u | v;
      std::vector<VertexSet> nodes;
      for (VertexSet out : pairs_of(l)) {
        VertexSet x = l & ~out;
        if (popcount(l) == deg + 2 && in_ideal(x)) nodes.push_back(x);
      }
      if (popcount(l) != deg + 2) continue;
      // Flood from u over nodes whose unions have size deg + 1.
      std::vector<char> seen(nodes.size(), 0);
      std::vector<std::size_t> stack;
      for (std::size_t k = 0; k < nodes.size(); ++k)
        if (nodes[k] == u) {
          seen[k] = 1;
          stack.push_back(k);
        }
      bool reached = false;
      while (!stack.empty() && !reached) {
        std::size_t x = stack.back();
        stack.pop_back();
        if (nodes[x] == v) reached = true;
        for (std::size_t y = 0; y < nodes.size(); ++y)
          if (!seen[y] && popcount(nodes[x] | nodes[y]) == deg + 1) {
            seen[y] = 1;
            stack.push_back(y);
          }
      }
      if (!reached)
        return NonlinearCertificate{deg, Monomial::squarefree(c.n(), u), Monomial::squarefree(c.n(), v)};
    }
  return std::nullopt;
}

struct CwlOptions {
  std::optional<int> root;
  bool with_betti = false;
  BettiOptions betti;
};

struct CwlReport {
  std::optional<ConditionWitness> c1;
  std::optional<ConditionWitness> c2;
  LinearQuotientsResult lq_under_ell;
  std::optional<ComponentwiseReport> betti;
  std::optional<NonlinearCertificate> certificate;
  bool verdict = false;  // C1 and C2 hold

  bool consistent() const {
    if (lq_under_ell.ok != verdict) return false;
    return !betti || betti->componentwise_linear == verdict;
  }
};

inline std::vector<VertexSet> ell_supports(const OrderedGenerators& og) {
  std::vector<VertexSet> s;
  for (const auto& m : og.matchings) s.push_back(m.vertices);
  return s;
}

inline CwlReport cwl_verdict(const TreeAnalysis& a, const CwlOptions& opt = {}) {
  CwlReport rep;
  rep.c1 = check_c1(a);
  rep.c2 = check_c2(a);
  rep.verdict = !rep.c1 && !rep.c2;
  rep.lq_under_ell = has_linear_quotients(ell_supports(order_ell(a, opt.root)));
  if (rep.c1) rep.certificate = nonlinear_certificate(a, *rep.c1);
  if (!rep.certificate && rep.c2) rep.certificate = nonlinear_certificate(a, *rep.c2);
  if (opt.with_betti)
    rep.betti = componentwise_linearity(sqfree_power_matchings(a.complex, a.nu), ComponentMode::Squarefree, opt.betti);
  return rep;
}

}  // namespace sqfree
