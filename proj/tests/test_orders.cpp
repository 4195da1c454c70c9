#include <gtest/gtest.h>

#include <queue>

#include "oracles.hpp"

using namespace sqfree;

namespace {

// (size, level, rank among the level by descending label) per center label.
std::map<Label, std::tuple<int, int, int>> oracle_keys(const Tree& t, Label root) {
  auto nb = oracle::closed_neighborhoods(oracle::labeled_edges(t));
  std::map<Label, int> level{{root, 0}};
  std::queue<Label> q;
  q.push(root);
  while (!q.empty()) {
    Label u = q.front();
    q.pop();
    for (Label w : nb[u])
      if (!level.count(w)) {
        level[w] = level[u] + 1;
        q.push(w);
      }
  }
  std::map<Label, std::tuple<int, int, int>> out;
  for (auto [u, s] : nb) {
    int rank = 1;
    for (auto [w, l] : level)
      if (l == level[u] && w > u) ++rank;
    out[u] = {static_cast<int>(s.size()), level[u], rank};
  }
  return out;
}

std::vector<Label> centers(const NComplex& c, const Matching& m) {
  std::vector<Label> out;
  for_each_bit(m.facets, [&](int f) { out.push_back(c.labels()[static_cast<std::size_t>(c.facet(f).center)]); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Orders, Fig2FacetKeys) {
  TreeAnalysis a(gen_family("fig2"));
  auto keys = facet_keys(a.tree, a.complex, *a.tree.find(1));
  const std::map<Label, FacetKey> expect{{1, {2, 0, 1}},  {14, {2, 6, 1}}, {11, {2, 10, 1}}, {3, {3, 2, 1}},
                                         {12, {3, 4, 1}}, {5, {3, 4, 2}},  {6, {3, 5, 2}},   {7, {3, 6, 2}},
                                         {8, {3, 7, 1}},  {9, {3, 8, 1}},  {4, {4, 3, 1}}};
  ASSERT_EQ(a.complex.facet_count(), 11);
  for (int f = 0; f < a.complex.facet_count(); ++f) {
    Label center = a.complex.labels()[static_cast<std::size_t>(a.complex.facet(f).center)];
    EXPECT_EQ(keys[static_cast<std::size_t>(f)], expect.at(center)) << "N[" << center << "]";
  }
}

TEST(Orders, Fig2MatchingOrders) {
  TreeAnalysis a(gen_family("fig2"));
  OrderedGenerators og = order_ell(a, *a.tree.find(1));
  const std::vector<Label> m1{1, 5, 8, 11, 14}, m2{1, 4, 7, 11, 14}, m3{1, 4, 8, 11, 14};
  ASSERT_EQ(og.lex_order.size(), 3u);
  EXPECT_EQ(centers(a.complex, og.lex_order[0]), m1);
  EXPECT_EQ(centers(a.complex, og.lex_order[1]), m2);
  EXPECT_EQ(centers(a.complex, og.lex_order[2]), m3);
  EXPECT_EQ(centers(a.complex, og.U), m1);
  EXPECT_EQ(centers(a.complex, og.matchings[0]), m1);
  EXPECT_EQ(centers(a.complex, og.matchings[1]), m3);
  EXPECT_EQ(centers(a.complex, og.matchings[2]), m2);
  EXPECT_EQ(og.levels, (std::vector<int>{0, 1, 2}));
}

TEST(Orders, KeysMatchBreadthFirstDefinition) {
  for (std::uint64_t s = 1; s <= 40; ++s) {
    Tree t = random_tree(6 + static_cast<int>(s % 9), s);
    NComplex c = neighborhood_facets(t);
    for (int r = 0; r < t.size(); ++r) {
      if (!t.is_pendant(r)) continue;
      auto want = oracle_keys(t, t.label(r));
      auto keys = facet_keys(t, c, r);
      for (int f = 0; f < c.facet_count(); ++f) {
        const auto& k = keys[static_cast<std::size_t>(f)];
        EXPECT_EQ(std::make_tuple(k.i, k.j, k.k), want.at(c.labels()[static_cast<std::size_t>(c.facet(f).center)]));
      }
    }
  }
}

TEST(Orders, DefaultRootIsSmallestPendant) {
  Tree t = parse_tree("5 2\n2 9\n2 3\n");
  EXPECT_EQ(t.label(default_root(t)), 3);
  EXPECT_THROW(facet_keys(t, neighborhood_facets(t), *t.find(2)), Error);
}

TEST(Orders, SortedListsAgreeWithComparators) {
  for (const auto& t : oracle::all_trees(9)) {
    TreeAnalysis a(t);
    OrderedGenerators og = order_ell(a);
    for (std::size_t i = 0; i < og.matchings.size(); ++i)
      for (std::size_t j = i + 1; j < og.matchings.size(); ++j) {
        EXPECT_EQ(compare_matchings_ell(a.complex, og.matchings[i], og.matchings[j], og.U, og.keys),
                  std::strong_ordering::greater)
            << t.compact();
        EXPECT_EQ(compare_matchings_lex(og.lex_order[i], og.lex_order[j], og.keys), std::strong_ordering::greater);
      }
    EXPECT_EQ(og.matchings.front(), og.U);
  }
}

TEST(OrderChecks, PassOnSmallTrees) {
  for (const auto& t : oracle::all_trees(8)) {
    TreeAnalysis a(t);
    for (int r = 0; r < t.size(); ++r) {
      if (t.size() > 1 && !t.is_pendant(r)) continue;
      LemmaReport rep = verify_order_properties(a, r);
      EXPECT_TRUE(rep.all_passed()) << t.compact() << " root " << t.label(r);
    }
  }
}

TEST(OrderChecks, ConditionalChecksSkipWithoutConditions) {
  TreeAnalysis a(gen_family("fig1"));
  LemmaReport rep = verify_order_properties(a);
  EXPECT_EQ(rep.find("facet_persistence")->status, CheckStatus::Skipped);
  EXPECT_EQ(rep.find("level_comparison")->status, CheckStatus::Skipped);
  EXPECT_EQ(rep.find("bridging_facet")->status, CheckStatus::Pass);
}
