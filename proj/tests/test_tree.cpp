#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace sqfree;

namespace {

Errc parse_error(const std::string& text) {
  try {
    parse_tree(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return Errc::BadJson;
}

bool oracle_caterpillar(const Tree& t) {
  for (int v = 0; v < t.size(); ++v) {
    if (t.is_pendant(v) || t.size() <= 2) continue;
    int inner = 0;
    for (int w : t.neighbors(v))
      if (!t.is_pendant(w)) ++inner;
    if (inner > 2) return false;
  }
  return true;
}

}  // namespace

TEST(TreeParse, ReadsEdgeListWithComments) {
  Tree t = parse_tree("# a path\n1 2\n\n2 3  # middle\n3 4\n");
  EXPECT_EQ(t.size(), 4);
  EXPECT_EQ(t.edge_count(), 3);
  EXPECT_EQ(t.compact(), "1-2,2-3,3-4");
  EXPECT_TRUE(t.is_pendant(*t.find(1)));
  EXPECT_FALSE(t.is_pendant(*t.find(2)));
}

TEST(TreeParse, SparseLabelsKeepTheirValues) {
  Tree t = parse_tree("10 300\n300 7\n");
  EXPECT_EQ(t.labels(), (std::vector<Label>{7, 10, 300}));
  EXPECT_EQ(t.degree(*t.find(300)), 2);
}

TEST(TreeParse, ErrorKinds) {
  EXPECT_EQ(parse_error(""), Errc::BadToken);
  EXPECT_EQ(parse_error("1 x\n"), Errc::BadToken);
  EXPECT_EQ(parse_error("1 2 3\n"), Errc::BadToken);
  EXPECT_EQ(parse_error("0 1\n"), Errc::BadToken);
  EXPECT_EQ(parse_error("-1 2\n"), Errc::BadToken);
  EXPECT_EQ(parse_error("2 2\n"), Errc::SelfLoop);
  EXPECT_EQ(parse_error("1 2\n2 1\n"), Errc::DuplicateEdge);
  EXPECT_EQ(parse_error("1 2\n2 3\n3 1\n"), Errc::HasCycle);
  EXPECT_EQ(parse_error("1 2\n3 4\n"), Errc::Disconnected);
}

TEST(TreeParse, ErrorsCarryTheLine) {
  try {
    parse_tree("1 2\n# skip\n2 3\n3 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(TreeParse, RejectsMoreThan64Vertices) {
  std::string text;
  for (int i = 1; i <= 64; ++i) text += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
  try {
    parse_tree(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(TreePaths, PathAndDistancesAgree) {
  Tree t = gen_family("fig2");
  for (int a = 0; a < t.size(); ++a) {
    auto d = t.distances_from(a);
    for (int b = 0; b < t.size(); ++b) {
      auto p = t.path(a, b);
      ASSERT_EQ(static_cast<int>(p.size()), d[static_cast<std::size_t>(b)] + 1);
      EXPECT_EQ(p.front(), a);
      EXPECT_EQ(p.back(), b);
      for (std::size_t i = 1; i < p.size(); ++i) EXPECT_TRUE(p[i - 1] != p[i] && has(t.closed_neighborhood(p[i - 1]), p[i]));
    }
  }
}

TEST(Families, Sizes) {
  EXPECT_EQ(gen_family("fig1").size(), 10);
  EXPECT_EQ(gen_family("fig2").size(), 14);
  EXPECT_EQ(gen_family("path:6").size(), 6);
  EXPECT_EQ(gen_family("whiskered_path:4").size(), 8);
  EXPECT_EQ(gen_family("star:5").size(), 6);
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(gen_family("g1:" + std::to_string(m)).size(), 6 * m + 8);
  for (int m = 1; m <= 2; ++m) EXPECT_EQ(gen_family("g2:" + std::to_string(m)).size(), 10 * m + 4);
}

TEST(Families, G2RootDegree) {
  // r carries its m pendant branches and the edge to t.
  for (int m = 1; m <= 3; ++m) {
    NamedTree nt = named_family(parse_family("g2:" + std::to_string(m)));
    EXPECT_EQ(nt.tree.degree(nt.vertex("r")), m + 1);
    EXPECT_EQ(nt.tree.degree(nt.vertex("t")), 3);
  }
}

TEST(Families, SeededGeneratorsAreReproducible) {
  EXPECT_EQ(gen_family("random_tree:12:7"), gen_family("random_tree:12:7"));
  EXPECT_EQ(gen_family("random_caterpillar:11:3"), gen_family("random_caterpillar:11:3"));
  EXPECT_EQ(gen_family("random_tree:12:7").size(), 12);
}

TEST(Families, BadSpecs) {
  for (const char* spec : {"nope", "path", "path:x", "random_tree:5", "fig1:2", "g1:0", "g1:10"}) {
    EXPECT_THROW(gen_family(spec), Error) << spec;
  }
}

TEST(Families, RandomCaterpillarsAreCaterpillars) {
  for (std::uint64_t s = 1; s <= 40; ++s) {
    Tree t = random_caterpillar(4 + static_cast<int>(s % 11), s);
    EXPECT_TRUE(is_caterpillar(t).has_value());
  }
}

TEST(Enumeration, LabeledCountIsCayley) {
  for (int n = 1; n <= 7; ++n) {
    long count = 0;
    for_each_labeled_tree(n, [&](const std::vector<Bits>&) { ++count; });
    long expect = 1;
    for (int i = 0; i < n - 2; ++i) expect *= n;
    EXPECT_EQ(count, expect) << n;
  }
}

TEST(Enumeration, UnlabeledCounts) {
  const long known[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(static_cast<long>(unlabeled_trees(n).size()), known[n - 1]) << n;
}

TEST(Enumeration, PruferAndLeafExtensionAgree) {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::uint64_t> a, b;
    for (const auto& t : unlabeled_trees(n)) a.insert(canonical_code(t));
    for (const auto& t : unlabeled_trees_prufer(n)) b.insert(canonical_code(t));
    EXPECT_EQ(a, b) << n;
  }
}

TEST(Enumeration, CanonicalCodeIgnoresLabels) {
  std::mt19937_64 rng(5);
  for (std::uint64_t s = 0; s < 30; ++s) {
    Tree t = random_tree(11, s);
    std::vector<Label> perm(11);
    for (int i = 0; i < 11; ++i) perm[static_cast<std::size_t>(i)] = 100 + i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<LabeledEdge> edges;
    for (auto [u, v] : t.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    EXPECT_EQ(canonical_code(Tree::from_edges(edges)), canonical_code(t));
  }
}

TEST(Caterpillar, MatchesLeafDeletionDefinition) {
  for (const auto& t : oracle::all_trees(10)) EXPECT_EQ(is_caterpillar(t).has_value(), oracle_caterpillar(t)) << t.compact();
}
