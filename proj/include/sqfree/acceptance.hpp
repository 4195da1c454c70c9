#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "betti.hpp"
#include "caterpillar.hpp"
#include "enumeration.hpp"
#include "families.hpp"
#include "ideal.hpp"
#include "json_io.hpp"
#include "lemmas.hpp"
#include "linearity.hpp"
#include "matching.hpp"
#include "ncomplex.hpp"
#include "order_checks.hpp"
#include "orders.hpp"
#include "taylor.hpp"

namespace sqfree {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit = 0;
};

struct AcceptanceOptions {
  unsigned threads = 1;
  int exhaustive_max = 9;     // unlabeled classes and lemma suites
  int labeled_max = 9;        // every labeled tree up to this size
  int lemma_extended_max = 14;  // further exhaustive sizes for the lemma suites
  int oracle_max = 10;
  int random_trees = 300;
  int caterpillars = 50;
  std::uint64_t seed = 0;
};

namespace acceptance {

// Collects mismatches; `detail` keeps the first few.
class Ledger {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { extra_ += (extra_.empty() ? "" : "; ") + s; }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_) + " checks, " + std::to_string(failures_) + " failed";
    if (!notes_.empty()) s += " [" + notes_ + "]";
    if (!extra_.empty()) s += " (" + extra_ + ")";
    return s;
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string notes_;
  std::string extra_;
};

inline CriterionResult run(int id, std::string name, double limit, const std::function<void(Ledger&)>& body) {
  CriterionResult r{id, std::move(name), false, "", 0, limit};
  Ledger ledger;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(ledger);
    r.passed = ledger.ok();
    r.detail = ledger.summary();
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > limit) {
    r.passed = false;
    r.detail += "; exceeded time limit";
  }
  return r;
}

inline std::set<Label> label_set(const NComplex& c, VertexSet s) {
  std::set<Label> out;
  for_each_bit(s, [&](int v) { out.insert(c.labels()[static_cast<std::size_t>(v)]); });
  return out;
}

// Facet centers of a matching.
inline std::set<int> centers(const NComplex& c, const Matching& m) {
  std::set<int> out;
  for_each_bit(m.facets, [&](int f) { out.insert(c.facet(f).center); });
  return out;
}

inline std::set<std::set<int>> center_sets(const NComplex& c, const std::vector<Matching>& ms) {
  std::set<std::set<int>> out;
  for (const auto& m : ms) out.insert(centers(c, m));
  return out;
}

inline std::vector<Tree> trees_up_to(int n) {
  std::vector<Tree> out;
  for (int m = 1; m <= n; ++m)
    for (auto& t : unlabeled_trees(m)) out.push_back(std::move(t));
  return out;
}

inline BettiOptions betti_options(const AcceptanceOptions& opt, Field f = Field::GF2) {
  BettiOptions b;
  b.field = f;
  b.threads = opt.threads;
  return b;
}

}  // namespace acceptance

inline CriterionResult criterion_facets() {
  return acceptance::run(1, "facet golden (fig1)", 1.0, [](acceptance::Ledger& L) {
    const std::set<std::set<Label>> expected{{1, 2}, {5, 10}, {8, 9}, {2, 3, 4}, {3, 4, 5}, {5, 6, 7}, {6, 7, 8}};
    const NComplex c = neighborhood_facets(gen_family("fig1"));
    std::set<std::set<Label>> got;
    for (const auto& f : c.facets()) got.insert(acceptance::label_set(c, f.vertices));
    L.check(got == expected, "facet set differs");
    L.check(c.facet_count() == 7, "facet count " + std::to_string(c.facet_count()));
    const NComplex back = complex_from_json(json::parse(to_json(c).dump()));
    L.check(back == c, "JSON round trip changed the complex");
  });
}

inline CriterionResult criterion_matchings() {
  return acceptance::run(2, "matching goldens (fig1, g1, g2)", 30.0, [](acceptance::Ledger& L) {
    TreeAnalysis fig1(gen_family("fig1"));
    L.check(fig1.nu == 3, "nu(fig1) = " + std::to_string(fig1.nu));
    for (int m = 1; m <= 3; ++m) {
      NamedTree nt = named_family({FamilyKind::G1, m, 0});
      TreeAnalysis a(nt.tree);
      L.check(a.nu == 2 * m + 3, "nu(g1(" + std::to_string(m) + ")) = " + std::to_string(a.nu));
      std::set<int> common;
      for (int i = 1; i <= m + 1; ++i) {
        common.insert(nt.vertex("r''_" + std::to_string(i)));
        common.insert(nt.vertex("s''_" + std::to_string(i)));
      }
      std::set<int> m1 = common, m2 = common;
      m1.insert(nt.vertex("r"));
      m2.insert(nt.vertex("s"));
      L.check(acceptance::center_sets(a.complex, a.nu_matchings) == std::set<std::set<int>>{m1, m2},
              "g1(" + std::to_string(m) + ") nu-matchings differ from M1, M2");
    }
    for (int m = 1; m <= 2; ++m) {
      NamedTree nt = named_family({FamilyKind::G2, m, 0});
      TreeAnalysis a(nt.tree);
      L.check(a.nu == 4 * m + 1, "nu(g2(" + std::to_string(m) + ")) = " + std::to_string(a.nu));
      std::set<int> common;
      for (int i = 1; i <= m; ++i)
        for (const char* p : {"r''_", "r~~_", "s''_", "s~~_"}) common.insert(nt.vertex(p + std::to_string(i)));
      std::set<std::set<int>> expected;
      for (const char* extra : {"t1", "r", "s"}) {
        std::set<int> x = common;
        x.insert(nt.vertex(extra));
        expected.insert(x);
      }
      L.check(acceptance::center_sets(a.complex, a.nu_matchings) == expected,
              "g2(" + std::to_string(m) + ") nu-matchings differ from M1, M2, M3");
    }
  });
}

inline CriterionResult criterion_order() {
  return acceptance::run(3, "facet order and matching orders (fig2)", 5.0, [](acceptance::Ledger& L) {
    TreeAnalysis a(gen_family("fig2"));
    const NComplex& c = a.complex;
    const int root = a.tree.index_of(1);
    const OrderedGenerators og = order_ell(a, root);
    // center label -> (i, j, k), listed in decreasing facet order
    const std::vector<std::pair<Label, FacetKey>> expected{
        {1, {2, 0, 1}},  {14, {2, 6, 1}}, {11, {2, 10, 1}}, {3, {3, 2, 1}}, {12, {3, 4, 1}}, {5, {3, 4, 2}},
        {6, {3, 5, 2}},  {7, {3, 6, 2}},  {8, {3, 7, 1}},   {9, {3, 8, 1}}, {4, {4, 3, 1}}};
    L.check(c.facet_count() == 11, "facet count " + std::to_string(c.facet_count()));
    std::map<Label, FacetKey> got;
    for (int f = 0; f < c.facet_count(); ++f) got[c.labels()[c.facet(f).center]] = og.keys[f];
    for (std::size_t x = 0; x < expected.size(); ++x) {
      auto it = got.find(expected[x].first);
      L.check(it != got.end() && it->second == expected[x].second,
              "key of N[" + std::to_string(expected[x].first) + "]");
      if (x > 0) L.check(expected[x - 1].second < expected[x].second, "facet order is not decreasing");
    }
    auto facet_of = [&](Label l) { return c.facet_of_center(a.tree.index_of(l)); };
    auto matching = [&](std::initializer_list<Label> ls) {
      Bits b = 0;
      for (Label l : ls) b |= bit(facet_of(l));
      return make_matching(c, b);
    };
    const Matching m1 = matching({1, 14, 11, 5, 8});
    const Matching m2 = matching({1, 14, 11, 7, 4});
    const Matching m3 = matching({1, 14, 11, 8, 4});
    L.check(a.nu == 5, "nu(fig2) = " + std::to_string(a.nu));
    L.check(a.nu_matchings.size() == 3, std::to_string(a.nu_matchings.size()) + " nu-matchings");
    L.check(og.lex_order == std::vector<Matching>{m1, m2, m3}, ">_lex order differs");
    L.check(og.U == m1, "U differs from M1");
    auto level = [&](const Matching& m) { return a.nu - popcount(og.U.facets & m.facets); };
    L.check(level(m3) == 1, "level_U(M3) = " + std::to_string(level(m3)));
    L.check(level(m2) == 2, "level_U(M2) = " + std::to_string(level(m2)));
    L.check(og.matchings == std::vector<Matching>{m1, m3, m2}, ">_l order differs");
  });
}

inline CriterionResult criterion_counterexample(const AcceptanceOptions& opt) {
  return acceptance::run(4, "fig1 counterexample to componentwise linearity", 60.0, [&](acceptance::Ledger& L) {
    TreeAnalysis a(gen_family("fig1"));
    const MonomialIdeal power = sqfree_power_matchings(a.complex, 3);
    const MonomialIdeal comp = graded_component(power, 7);
    const LinearlyRelatedResult lr = is_linearly_related(comp.gens());
    L.check(!lr.related, "degree-7 component is linearly related");
    for (Field f : {Field::GF2, Field::QQ}) {
      const BettiTable t = graded_betti(comp, acceptance::betti_options(opt, f));
      L.check(!is_linear(t, 7), std::string("Betti engine finds a linear resolution over ") + to_string(f));
      bool off = false;
      for (const auto& [ij, r] : t.graded())
        if (ij.first == 1 && ij.second != 8 && r != 0) off = true;
      L.check(off, std::string("no first syzygy off degree 8 over ") + to_string(f));
    }
    const CwlReport rep = cwl_verdict(a);
    L.check(!rep.verdict, "conditions report componentwise linear");
    L.check(!rep.lq_under_ell.ok, "order passes linear quotients");
    L.note(std::to_string(comp.size()) + " generators in degree 7");
  });
}

inline CriterionResult criterion_regularity(const AcceptanceOptions& opt) {
  return acceptance::run(5, "regularity gaps (g1, g2)", 120.0, [&](acceptance::Ledger& L) {
    auto one = [&](const std::string& spec, int m, int want_deg, int want_reg) {
      TreeAnalysis a(gen_family(spec));
      const MonomialIdeal I = sqfree_power_matchings(a.complex, a.nu);
      const int deg = I.max_degree();
      const int reg = regularity(I, RegMode::Quotient, acceptance::betti_options(opt));
      L.check(deg == want_deg, spec + " deg = " + std::to_string(deg));
      L.check(reg == want_reg, spec + " reg(S/I) = " + std::to_string(reg));
      L.check(reg + 1 - deg == m, spec + " gap = " + std::to_string(reg + 1 - deg));
    };
    for (int m = 1; m <= 3; ++m) one("g1:" + std::to_string(m), m, 5 * m + 7, 6 * m + 6);
    for (int m = 1; m <= 2; ++m) one("g2:" + std::to_string(m), m, 9 * m + 2, 10 * m + 1);
  });
}

inline CriterionResult criterion_caterpillar(const AcceptanceOptions& opt) {
  return acceptance::run(6, "caterpillar regularity formula", 600.0, [&](acceptance::Ledger& L) {
    std::vector<std::string> specs;
    for (int s = 1; s <= opt.caterpillars; ++s)
      specs.push_back("random_caterpillar:" + std::to_string(4 + (s - 1) % 11) + ":" +
                      std::to_string(opt.seed + static_cast<std::uint64_t>(s)));
    for (int n = 1; n <= 8; ++n) {
      specs.push_back("path:" + std::to_string(n));
      specs.push_back("whiskered_path:" + std::to_string(n));
    }
    for (const auto& spec : specs) {
      TreeAnalysis a(gen_family(spec));
      const int formula = caterpillar_regularity(a);
      const int engine = regularity(sqfree_power_matchings(a.complex, a.nu), RegMode::Quotient,
                                    acceptance::betti_options(opt));
      L.check(formula == engine, spec + ": formula " + std::to_string(formula) + ", engine " + std::to_string(engine));
    }
  });
}

inline CriterionResult criterion_characterization(const AcceptanceOptions& opt) {
  return acceptance::run(7, "characterization: C1 and C2, linear quotients, Betti engine", 1800.0,
                         [&](acceptance::Ledger& L) {
    CwlOptions co;
    co.with_betti = true;
    co.betti = acceptance::betti_options(opt);
    std::unordered_map<std::uint64_t, bool> verdict;
    long cwl_trees = 0, root_dependent = 0;
    auto full = [&](const Tree& t, const std::string& name) {
      TreeAnalysis a(t);
      const CwlReport rep = cwl_verdict(a, co);
      L.check(rep.consistent(), name + ": C1^C2=" + std::to_string(rep.verdict) + " lq=" +
                                    std::to_string(rep.lq_under_ell.ok) + " betti=" +
                                    std::to_string(rep.betti->componentwise_linear));
      cwl_trees += rep.verdict ? 1 : 0;
      for (const auto& ro : lq_over_roots(a))
        if (ro.lq.ok != rep.verdict) {
          ++root_dependent;
          break;
        }
      return rep.verdict;
    };
    for (const Tree& t : acceptance::trees_up_to(opt.exhaustive_max))
      verdict[canonical_code(t)] = full(t, "tree " + t.compact());
    long labeled = 0;
    for (int n = 1; n <= opt.labeled_max; ++n)
      for_each_labeled_tree(n, [&](const std::vector<Bits>& adj) {
        ++labeled;
        const Tree t = detail::tree_from_masks(adj);
        const TreeAnalysis a(t);
        const bool lq = has_linear_quotients(ell_supports(order_ell(a))).ok;
        auto it = verdict.find(detail::unrooted_code(adj));
        L.check(it != verdict.end() && it->second == lq, "labeled tree " + t.compact());
      });
    for (int s = 1; s <= opt.random_trees; ++s) {
      const int n = 10 + (s - 1) % 3;
      const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(s);
      full(random_tree(n, seed), "random_tree:" + std::to_string(n) + ":" + std::to_string(seed));
    }
    L.note(std::to_string(labeled) + " labeled trees, " + std::to_string(cwl_trees) +
           " componentwise linear among the full checks, " + std::to_string(root_dependent) +
           " with a root-dependent order");
  });
}

// The gated properties; the remaining suite entries are reported only.
inline const std::vector<std::string>& gated_lemmas() {
  static const std::vector<std::string> names{"B_acyclic",         "containment_rigidity", "intersection",
                                              "component_bounds",  "reduction_witness",    "facet_persistence",
                                              "level_comparison",  "bridging_facet"};
  return names;
}

// Checks of statements with known counterexamples; they run and report
// but never decide a verdict.
inline bool is_refuted_lemma(const std::string& name) { return name == "component_reduction_i"; }

inline CriterionResult criterion_lemmas(const AcceptanceOptions& opt) {
  return acceptance::run(8, "lemma property suites", 1800.0, [&](acceptance::Ledger& L) {
    struct Tally {
      std::map<std::string, std::pair<long, long>> counts;  // name -> (checked, failed)
      std::map<std::string, std::string> first;
    };
    auto absorb = [](Tally& tl, const LemmaReport& rep, const std::string& where) {
      for (const auto& r : rep.results) {
        auto& [checked, failed] = tl.counts[r.name];
        checked += static_cast<long>(r.pairs_checked);
        if (r.status == CheckStatus::Fail) {
          ++failed;
          if (!tl.first.count(r.name)) tl.first[r.name] = where + ": " + r.counterexample.value_or("");
        }
      }
    };
    auto suite = [&](Tally& tl, const Tree& t) {
      TreeAnalysis a(t);
      const std::string where = t.compact();
      for (int k = 1; k <= a.nu; ++k) absorb(tl, verify_matching_lemmas(a, k), where + " k=" + std::to_string(k));
      for (int v = 0; v < t.size(); ++v)
        if (t.size() == 1 || t.is_pendant(v))
          absorb(tl, verify_order_properties(a, v), where + " root=" + std::to_string(t.label(v)));
    };
    auto report = [&](Tally& tl, const std::string& scope) {
      const auto& gated = gated_lemmas();
      for (const auto& name : gated) {
        const auto& cf = tl.counts[name];
        L.check(cf.second == 0, scope + " " + name + " failed on " + std::to_string(cf.second) + " cases, first " +
                                    tl.first[name]);
        L.note(scope + " " + name + " " + std::to_string(cf.first));
      }
      for (const auto& [name, cf] : tl.counts) {
        if (std::find(gated.begin(), gated.end(), name) != gated.end()) continue;
        std::string s = scope + " " + name + " " + std::to_string(cf.first);
        if (cf.second) s += " REPORTED FAILING on " + std::to_string(cf.second) + " cases, first " + tl.first[name];
        L.note(s);
      }
    };
    Tally core, extended;
    for (const Tree& t : acceptance::trees_up_to(opt.exhaustive_max)) suite(core, t);
    for (int n = opt.exhaustive_max + 1; n <= opt.lemma_extended_max; ++n)
      for (const Tree& t : unlabeled_trees(n)) suite(extended, t);
    report(core, "n<=" + std::to_string(opt.exhaustive_max) + ":");
    if (opt.lemma_extended_max > opt.exhaustive_max)
      report(extended, std::to_string(opt.exhaustive_max + 1) + "<=n<=" + std::to_string(opt.lemma_extended_max) + ":");
  });
}

inline CriterionResult criterion_oracle(const AcceptanceOptions& opt) {
  return acceptance::run(9, "squarefree powers: matchings vs brute force", 600.0, [&](acceptance::Ledger& L) {
    for (const Tree& t : acceptance::trees_up_to(opt.oracle_max)) {
      TreeAnalysis a(t);
      const MonomialIdeal ni = ni_ideal(a.complex);
      for (int k = 1; k <= a.nu; ++k) {
        const MonomialIdeal viaM = sqfree_power_matchings(a.complex, k);
        L.check(viaM == sqfree_power_bruteforce(ni, k), t.compact() + " k=" + std::to_string(k));
        L.check(viaM.size() == enumerate_matchings(a.complex, k).size(), "generator count vs matchings");
      }
      L.check(sqfree_power_bruteforce(ni, a.nu + 1).is_zero(), t.compact() + " power beyond nu");
    }
  });
}

inline CriterionResult criterion_engine(const AcceptanceOptions& opt) {
  return acceptance::run(10, "Betti engine self-checks", 300.0, [&](acceptance::Ledger& L) {
    std::vector<std::pair<std::string, MonomialIdeal>> ideals;
    {
      TreeAnalysis fig1(gen_family("fig1"));
      const MonomialIdeal p = sqfree_power_matchings(fig1.complex, 3);
      ideals.push_back({"NI(fig1)", ni_ideal(fig1.complex)});
      ideals.push_back({"NI(fig1)^[3]", p});
      ideals.push_back({"NI(fig1)^[3]_<7>", graded_component(p, 7)});
      TreeAnalysis fig2(gen_family("fig2"));
      ideals.push_back({"NI(fig2)^[5]", sqfree_power_matchings(fig2.complex, fig2.nu)});
      for (const char* spec : {"g1:1", "g1:2", "g1:3", "g2:1", "g2:2"}) {
        TreeAnalysis a(gen_family(spec));
        ideals.push_back({std::string("NI(") + spec + ")^[nu]", sqfree_power_matchings(a.complex, a.nu)});
      }
    }
    // Chain-level checks on every K^b of the smaller acceptance ideals.
    long complexes = 0;
    for (const auto& [name, I] : ideals) {
      if (I.nvars() > 16) continue;
      for (const Monomial& b : lcm_lattice(I)) {
        const SimplicialComplex k = upper_koszul(I, b);
        const ChainComplex cc(k, false);
        ++complexes;
        L.check(cc.boundary_squares_to_zero(), name + ": boundary does not square to zero");
        for (Field f : {Field::GF2, Field::QQ})
          L.check(alternating_sum(cc.reduced_homology(f)) == cc.euler_characteristic(), name + ": Euler mismatch");
      }
    }
    for (const auto& [name, I] : ideals) {
      const BettiTable g = graded_betti(I, acceptance::betti_options(opt, Field::GF2));
      const BettiTable q = graded_betti(I, acceptance::betti_options(opt, Field::QQ));
      L.check(g == q, name + ": GF(2) and QQ disagree");
    }
    // Taylor oracle on ideals with at most six generators.
    std::vector<MonomialIdeal> small;
    for (const Tree& t : acceptance::trees_up_to(8)) {
      TreeAnalysis a(t);
      for (int k = 1; k <= a.nu; ++k) {
        MonomialIdeal p = sqfree_power_matchings(a.complex, k);
        if (p.size() <= 6) small.push_back(std::move(p));
      }
    }
    std::mt19937_64 rng(opt.seed + 7);
    for (int r = 0; r < 60; ++r) {
      const int nv = 3 + static_cast<int>(detail::bounded(rng, 3));
      const int ng = 2 + static_cast<int>(detail::bounded(rng, 5));
      std::vector<Monomial> gens;
      for (int g = 0; g < ng; ++g) {
        std::vector<int> e(static_cast<std::size_t>(nv));
        for (auto& x : e) x = static_cast<int>(detail::bounded(rng, 3));
        gens.emplace_back(std::move(e));
      }
      MonomialIdeal I = MonomialIdeal::minimalize(nv, std::move(gens));
      if (!I.is_zero() && !(I.size() == 1 && I.gens().front().is_one())) small.push_back(std::move(I));
    }
    for (const auto& I : small)
      for (Field f : {Field::GF2, Field::QQ}) {
        const BettiTable oracle = taylor_betti(I, f);
        L.check(graded_betti(I, acceptance::betti_options(opt, f)) == oracle, format(I) + ": engine vs Taylor");
        L.check(graded_betti_lattice(I, acceptance::betti_options(opt, f)) == oracle,
                format(I) + ": lattice engine vs Taylor");
      }
    L.note(std::to_string(complexes) + " complexes, " + std::to_string(small.size()) + " Taylor ideals");
  });
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {},
                                                   const std::function<void(const CriterionResult&)>& progress = {}) {
  std::vector<std::function<CriterionResult()>> all{
      [] { return criterion_facets(); },
      [] { return criterion_matchings(); },
      [] { return criterion_order(); },
      [&] { return criterion_counterexample(opt); },
      [&] { return criterion_regularity(opt); },
      [&] { return criterion_caterpillar(opt); },
      [&] { return criterion_characterization(opt); },
      [&] { return criterion_lemmas(opt); },
      [&] { return criterion_oracle(opt); },
      [&] { return criterion_engine(opt); },
  };
  std::vector<CriterionResult> out;
  for (auto& c : all) {
    out.push_back(c());
    if (progress) progress(out.back());
  }
  return out;
}

}  // namespace sqfree
