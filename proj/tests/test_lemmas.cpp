#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace sqfree;

namespace {

void expect_decisive_pass(const LemmaReport& rep, const std::string& where) {
  for (const auto& r : rep.results) {
    if (is_refuted_lemma(r.name)) continue;
    EXPECT_NE(r.status, CheckStatus::Fail) << where << " " << r.name << ": " << r.counterexample.value_or("");
  }
}

}  // namespace

TEST(MatchingLemmas, HoldOnSmallTrees) {
  for (const auto& t : oracle::all_trees(8)) {
    TreeAnalysis a(t);
    for (int k = 1; k <= a.nu; ++k) expect_decisive_pass(verify_matching_lemmas(a, k), t.compact() + " k=" + std::to_string(k));
  }
}

TEST(MatchingLemmas, HoldOnSampledLargerTrees) {
  LemmaOptions opt;
  opt.exhaustive_max_vertices = 0;
  opt.pair_cap = 300;
  opt.seed = 9;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    TreeAnalysis a(random_tree(16, s));
    expect_decisive_pass(verify_matching_lemmas(a, a.nu, opt), a.tree.compact());
  }
}

TEST(MatchingLemmas, ResultsAreNamedAndCounted) {
  TreeAnalysis a(gen_family("fig2"));
  LemmaReport rep = verify_matching_lemmas(a, a.nu);
  for (const char* name : {"B_acyclic", "containment_rigidity", "intersection", "component_bounds", "reduction_witness"}) {
    const LemmaResult* r = rep.find(name);
    ASSERT_NE(r, nullptr) << name;
  }
  EXPECT_GT(rep.find("B_acyclic")->pairs_checked, 0u);
}

TEST(MatchingLemmas, LiteralComponentReductionHasACounterexample) {
  // Path 6-4-2-1-3-5 with M = {N[1], N[6]} and N = {N[2], N[5]}: removing
  // u = 1 leaves the component {2,4,6}, where M keeps one facet and N none.
  TreeAnalysis a(parse_tree("1 2\n1 3\n2 4\n3 5\n4 6\n"));
  ASSERT_EQ(a.nu, 2);
  LemmaReport rep = verify_matching_lemmas(a, 2);
  EXPECT_EQ(rep.find("component_reduction_i")->status, CheckStatus::Fail);
  EXPECT_EQ(rep.find("component_reduction_i_meeting")->status, CheckStatus::Pass);
  EXPECT_EQ(rep.find("component_reduction_ii")->status, CheckStatus::Pass);
  EXPECT_EQ(rep.find("component_reduction_iii")->status, CheckStatus::Pass);
  EXPECT_TRUE(is_refuted_lemma("component_reduction_i"));
  EXPECT_FALSE(is_refuted_lemma("B_acyclic"));
}

TEST(CaterpillarColons, HoldOnCaterpillars) {
  std::vector<Tree> trees;
  for (int n = 2; n <= 10; ++n) trees.push_back(gen_family("path:" + std::to_string(n)));
  for (std::uint64_t s = 1; s <= 30; ++s) trees.push_back(random_caterpillar(4 + static_cast<int>(s % 11), s));
  for (const auto& t : trees) {
    TreeAnalysis a(t);
    LemmaReport rep = verify_caterpillar_colon_structure(a);
    EXPECT_TRUE(rep.all_passed()) << t.compact();
  }
  EXPECT_THROW(verify_caterpillar_colon_structure(TreeAnalysis(gen_family("g1:1"))), Error);
}

TEST(CaterpillarColons, SquarefreeColonStep) {
  // (x1x2, x2x3) : x3x4 = (x1x2, x2) = (x2).
  std::vector<VertexSet> s{bit(0) | bit(1), bit(1) | bit(2), bit(2) | bit(3)};
  EXPECT_EQ(squarefree_colon_step(s, 2), (std::vector<VertexSet>{bit(1)}));
}
