#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"

#include "betti.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "linearity.hpp"
#include "matching.hpp"
#include "ncomplex.hpp"
#include "orders.hpp"
#include "report.hpp"
#include "tree.hpp"

namespace sqfree {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline json labels_of(const std::vector<Label>& labels, VertexSet s) {
  json out = json::array();
  for_each_bit(s, [&](int v) { out.push_back(labels[static_cast<std::size_t>(v)]); });
  return out;
}

inline void expect(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::BadJson, what);
}

inline void expect_header(const json& j, const char* kind) {
  expect(j.is_object(), "document is not an object");
  expect(j.contains("schema") && j["schema"] == kSchemaVersion, "missing or unsupported schema version");
  expect(j.contains("kind") && j["kind"] == kind, std::string("expected kind \"") + kind + "\"");
}

}  // namespace detail

inline json header(const char* kind) { return json{{"schema", kSchemaVersion}, {"kind", kind}}; }

inline json to_json(const Tree& t) {
  json j = header("tree");
  j["n"] = t.size();
  j["edges"] = json::array();
  for (auto [u, v] : t.edges()) j["edges"].push_back({t.label(u), t.label(v)});
  if (t.size() == 1) j["label"] = t.label(0);
  return j;
}

inline Tree tree_from_json(const json& j) {
  detail::expect_header(j, "tree");
  try {
    std::vector<LabeledEdge> edges;
    for (const auto& e : j.at("edges")) {
      detail::expect(e.is_array() && e.size() == 2, "edges must be label pairs");
      edges.emplace_back(e[0].get<Label>(), e[1].get<Label>());
    }
    if (edges.empty()) {
      detail::expect(j.at("n").get<int>() == 1, "a tree without edges has one vertex");
      return Tree::single_vertex(j.contains("label") ? j["label"].get<Label>() : 1);
    }
    return Tree::from_edges(edges);
  } catch (const json::exception& e) {
    throw Error(Errc::BadJson, e.what());
  }
}

inline json to_json(const NComplex& c) {
  json j = header("complex");
  j["n"] = c.n();
  j["labels"] = c.labels();
  j["facets"] = json::array();
  for (const auto& f : c.facets())
    j["facets"].push_back({{"center", c.labels()[static_cast<std::size_t>(f.center)]},
                           {"vertices", detail::labels_of(c.labels(), f.vertices)}});
  return j;
}

inline NComplex complex_from_json(const json& j) {
  detail::expect_header(j, "complex");
  try {
    const int n = j.at("n").get<int>();
    auto labels = j.at("labels").get<std::vector<Label>>();
    detail::expect(n >= 0 && n <= kMaxBits && labels.size() == static_cast<std::size_t>(n), "bad vertex count");
    detail::expect(std::is_sorted(labels.begin(), labels.end()) &&
                       std::adjacent_find(labels.begin(), labels.end()) == labels.end(),
                   "labels must be strictly increasing");
    auto index = [&](Label l) {
      auto it = std::lower_bound(labels.begin(), labels.end(), l);
      detail::expect(it != labels.end() && *it == l, "unknown vertex " + std::to_string(l));
      return static_cast<int>(it - labels.begin());
    };
    std::vector<Facet> facets;
    for (const auto& f : j.at("facets")) {
      Facet x;
      x.center = index(f.at("center").get<Label>());
      for (const auto& v : f.at("vertices")) x.vertices |= bit(index(v.get<Label>()));
      detail::expect(has(x.vertices, x.center), "facet does not contain its center");
      facets.push_back(x);
    }
    return NComplex(n, std::move(labels), std::move(facets));
  } catch (const json::exception& e) {
    throw Error(Errc::BadJson, e.what());
  }
}

// Variables are x1..xn; `labels`, when given, records the vertex behind
// each variable.
inline json to_json(const MonomialIdeal& ideal, const std::vector<Label>& labels = {}) {
  json j = header("ideal");
  j["nvars"] = ideal.nvars();
  if (!labels.empty()) j["labels"] = labels;
  j["gens"] = json::array();
  for (const auto& g : ideal.gens()) j["gens"].push_back(format(g));
  return j;
}

inline MonomialIdeal ideal_from_json(const json& j) {
  detail::expect_header(j, "ideal");
  try {
    const int n = j.at("nvars").get<int>();
    detail::expect(n >= 0, "negative variable count");
    std::vector<Monomial> gens;
    for (const auto& g : j.at("gens")) gens.push_back(parse_monomial(g.get<std::string>(), n));
    return MonomialIdeal::minimalize(n, std::move(gens));
  } catch (const json::exception& e) {
    throw Error(Errc::BadJson, e.what());
  }
}

inline json to_json(const NComplex& c, const Matching& m) {
  json centers = json::array();
  for_each_bit(m.facets, [&](int f) { centers.push_back(c.labels()[static_cast<std::size_t>(c.facet(f).center)]); });
  return json{{"centers", centers}, {"vertices", detail::labels_of(c.labels(), m.vertices)}};
}

inline json matchings_json(const NComplex& c, int k, const std::vector<Matching>& ms) {
  json j = header("matchings");
  j["k"] = k;
  j["count"] = ms.size();
  j["matchings"] = json::array();
  for (const auto& m : ms) j["matchings"].push_back(to_json(c, m));
  return j;
}

inline json to_json(const LemmaReport& rep) {
  json j = header("lemmas");
  j["passed"] = rep.all_passed();
  j["results"] = json::array();
  for (const auto& r : rep.results) {
    json x{{"name", r.name}, {"status", to_string(r.status)}, {"checked", r.pairs_checked}};
    if (r.counterexample) x["counterexample"] = *r.counterexample;
    j["results"].push_back(std::move(x));
  }
  return j;
}

inline json to_json(const BettiTable& table, RegMode mode) {
  json j = header("betti");
  j["field"] = to_string(table.field());
  j["mode"] = mode == RegMode::Ideal ? "ideal" : "quotient";
  j["entries"] = json::array();
  auto g = mode == RegMode::Ideal ? table.graded() : table.graded_quotient();
  for (const auto& [ij, r] : g) j["entries"].push_back({{"i", ij.first}, {"j", ij.second}, {"value", r}});
  if (table.empty() && mode == RegMode::Ideal) j["regularity"] = nullptr;
  else j["regularity"] = regularity(table, mode);
  return j;
}

inline json to_json(const Tree& t, const NComplex& c, const ConditionWitness& w) {
  json path = json::array();
  for (int v : w.path) path.push_back(t.label(v));
  return json{{"kind", to_string(w.kind)},
              {"path", path},
              {"Y", to_json(c, w.Y)},
              {"matchings", {to_json(c, w.first), to_json(c, w.second)}}};
}

inline json to_json(const TreeAnalysis& a, const CwlReport& rep) {
  json j = header("cwl");
  j["nu"] = a.nu;
  j["c1"] = !rep.c1;
  j["c2"] = !rep.c2;
  j["lq_under_ell"] = rep.lq_under_ell.ok;
  if (!rep.lq_under_ell.ok) j["lq_violation"] = {rep.lq_under_ell.i + 1, rep.lq_under_ell.j + 1};
  j["verdict"] = rep.verdict ? "componentwise-linear" : "not-componentwise-linear";
  json w = json::array();
  if (rep.c1) w.push_back(to_json(a.tree, a.complex, *rep.c1));
  if (rep.c2) w.push_back(to_json(a.tree, a.complex, *rep.c2));
  j["witnesses"] = w;
  if (rep.certificate) {
    std::vector<std::string> names;
    for (Label l : a.complex.labels()) names.push_back("x" + std::to_string(l));
    j["certificate"] = {{"degree", rep.certificate->degree},
                        {"u", format(rep.certificate->u, names)},
                        {"v", format(rep.certificate->v, names)}};
  }
  if (rep.betti) {
    json comps = json::array();
    for (const auto& c : rep.betti->components) comps.push_back({{"degree", c.degree}, {"linear", c.linear}});
    j["betti"] = {{"componentwise_linear", rep.betti->componentwise_linear}, {"components", comps}};
  }
  j["consistent"] = rep.consistent();
  return j;
}

inline json to_json(const TreeAnalysis& a, const OrderedGenerators& og) {
  json j = header("order");
  j["root"] = a.tree.label(og.root);
  j["U"] = to_json(a.complex, og.U);
  j["facets"] = json::array();
  for (int f = 0; f < a.complex.facet_count(); ++f) {
    const auto& k = og.keys[static_cast<std::size_t>(f)];
    j["facets"].push_back({{"center", a.complex.labels()[static_cast<std::size_t>(a.complex.facet(f).center)]},
                           {"key", {k.i, k.j, k.k}}});
  }
  j["matchings"] = json::array();
  for (std::size_t m = 0; m < og.matchings.size(); ++m) {
    json keys = json::array();
    for (const auto& k : key_sequence(og.matchings[m], og.keys)) keys.push_back({k.i, k.j, k.k});
    json x = to_json(a.complex, og.matchings[m]);
    x["beta"] = og.betas[m];
    x["level"] = og.levels[m];
    x["keys"] = keys;
    j["matchings"].push_back(std::move(x));
  }
  return j;
}

}  // namespace sqfree
