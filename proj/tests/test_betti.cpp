#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace sqfree;

namespace {

std::map<std::pair<int, int>, long> nonzero_graded(const BettiTable& t) {
  std::map<std::pair<int, int>, long> out;
  for (auto [ij, v] : t.graded())
    if (v) out[ij] = v;
  return out;
}

BettiOptions with(Field f) {
  BettiOptions o;
  o.field = f;
  return o;
}

MonomialIdeal from_supports(int n, const std::vector<Bits>& s) {
  std::vector<Monomial> g;
  for (Bits b : s) g.push_back(Monomial::squarefree(n, b));
  return MonomialIdeal::minimalize(n, g);
}

// Stanley-Reisner ideal of the six-vertex real projective plane: the ten
// triangles that are not faces.
MonomialIdeal rp2_ideal() {
  const int faces[10][3] = {{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                            {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}};
  std::set<Bits> tri;
  for (auto& f : faces) tri.insert(bit(f[0] - 1) | bit(f[1] - 1) | bit(f[2] - 1));
  std::vector<Bits> gens;
  for (Bits s = 0; s < 64; ++s)
    if (popcount(s) == 3 && !tri.count(s)) gens.push_back(s);
  return from_supports(6, gens);
}

}  // namespace

TEST(Betti, MaximalIdealIsKoszul) {
  MonomialIdeal m = from_supports(5, {bit(0), bit(1), bit(2), bit(3), bit(4)});
  auto g = nonzero_graded(graded_betti(m));
  const long binom[] = {5, 10, 10, 5, 1};
  ASSERT_EQ(g.size(), 5u);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(g.at({i, i + 1}), binom[i]);
}

TEST(Betti, TwoGenerators) {
  auto I = from_supports(3, {bit(0) | bit(1), bit(1) | bit(2)});
  auto g = nonzero_graded(graded_betti(I));
  EXPECT_EQ(g, (std::map<std::pair<int, int>, long>{{{0, 2}, 2}, {{1, 3}, 1}}));
  EXPECT_EQ(regularity(graded_betti(I), RegMode::Ideal), 2);
  EXPECT_EQ(regularity(graded_betti(I), RegMode::Quotient), 1);
}

TEST(Betti, HochsterAgreementOnTreePowers) {
  for (const auto& t : oracle::all_trees(9)) {
    NComplex c = neighborhood_facets(t);
    for (int k = 1; k <= matching_number(c); ++k) {
      MonomialIdeal I = sqfree_power_matchings(c, k);
      auto o = oracle::from_ideal(I);
      for (Field f : {Field::GF2, Field::QQ}) {
        auto want = oracle::hochster_betti(o, f == Field::GF2);
        EXPECT_EQ(nonzero_graded(graded_betti(I, with(f))), want) << t.compact() << " k=" << k;
        EXPECT_EQ(nonzero_graded(graded_betti_lattice(I, with(f))), want) << t.compact() << " k=" << k;
      }
    }
  }
}

TEST(Betti, EnginesAgreeMultigraded) {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    Tree t = random_tree(9 + static_cast<int>(s % 4), s);
    MonomialIdeal I = sqfree_power_matchings(neighborhood_facets(t), 2);
    EXPECT_EQ(graded_betti(I), graded_betti_lattice(I)) << t.compact();
  }
}

TEST(Betti, TaylorOracleOnRandomIdeals) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 3;
    std::vector<Monomial> g;
    for (int i = 0; i < 2 + trial % 5; ++i) {
      std::vector<int> e(static_cast<std::size_t>(n));
      for (int& x : e) x = static_cast<int>(rng() % 3);
      if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[0] = 1;
      g.emplace_back(e);
    }
    MonomialIdeal I = MonomialIdeal::minimalize(n, g);
    for (Field f : {Field::GF2, Field::QQ})
      EXPECT_EQ(graded_betti_lattice(I, with(f)), taylor_betti(I, f)) << format(I);
  }
}

TEST(Betti, ProjectivePlaneDependsOnCharacteristic) {
  MonomialIdeal I = rp2_ideal();
  ASSERT_EQ(I.size(), 10u);
  const Monomial top = Monomial::squarefree(6, full_set(6));
  BettiTable two = graded_betti(I, with(Field::GF2));
  BettiTable rat = graded_betti(I, with(Field::QQ));
  // Hochster: β_{i,[6]} = dim H~_{4-i}(RP^2), nonzero in char 2 only.
  EXPECT_EQ(two.multigraded(2, top), 1);
  EXPECT_EQ(two.multigraded(3, top), 1);
  EXPECT_EQ(rat.multigraded(2, top), 0);
  EXPECT_EQ(rat.multigraded(3, top), 0);
  EXPECT_EQ(nonzero_graded(two), oracle::hochster_betti(oracle::from_ideal(I), true));
  EXPECT_EQ(nonzero_graded(rat), oracle::hochster_betti(oracle::from_ideal(I), false));
  EXPECT_EQ(graded_betti_lattice(I, with(Field::GF2)), two);
}

TEST(Betti, UpperKoszulChainsAreComplexes) {
  MonomialIdeal I = sqfree_power_matchings(neighborhood_facets(gen_family("fig1")), 2);
  for (const auto& b : lcm_lattice(I)) {
    SimplicialComplex k = upper_koszul(I, b);
    ChainComplex cc(k, false);
    EXPECT_TRUE(cc.boundary_squares_to_zero());
    for (Field f : {Field::GF2, Field::QQ}) EXPECT_EQ(alternating_sum(cc.reduced_homology(f)), cc.euler_characteristic());
  }
}

TEST(Betti, ComponentwiseLinearityAgreesWithOracle) {
  for (const auto& t : oracle::all_trees(8)) {
    NComplex c = neighborhood_facets(t);
    MonomialIdeal I = sqfree_power_matchings(c, matching_number(c));
    EXPECT_EQ(componentwise_linearity(I, ComponentMode::Squarefree).componentwise_linear,
              oracle::componentwise_linear(oracle::from_ideal(I)))
        << t.compact();
  }
}

TEST(Betti, LatticeBudget) {
  BettiOptions o;
  o.lattice_budget = 3;
  MonomialIdeal I = ni_ideal(gen_family("path:8"));
  EXPECT_THROW(graded_betti_lattice(I, o), Error);
  EXPECT_THROW(graded_betti(I, o), Error);
}

TEST(Betti, ThreadCountDoesNotChangeResults) {
  MonomialIdeal I = sqfree_power_matchings(neighborhood_facets(gen_family("g2:1")), 3);
  BettiOptions one, four;
  four.threads = 4;
  EXPECT_EQ(graded_betti(I, one), graded_betti(I, four));
  EXPECT_EQ(graded_betti_lattice(I, one), graded_betti_lattice(I, four));
}

TEST(Betti, DiagramLayout) {
  auto I = from_supports(3, {bit(0) | bit(1), bit(1) | bit(2)});
  EXPECT_EQ(betti_diagram(graded_betti(I), RegMode::Quotient),
            "        0 1 2\n"
            "total: 1 2 1\n"
            "    0: 1 . .\n"
            "    1: . 2 1\n");
}

TEST(Regularity, PaperFamilies) {
  // reg(S/I) = 6m+6 and deg I = 5m+7 for g1(m); m = 1 keeps the test fast.
  MonomialIdeal g1 = sqfree_power_matchings(neighborhood_facets(gen_family("g1:1")), 5);
  EXPECT_EQ(g1.max_degree(), 12);
  EXPECT_EQ(regularity(g1, RegMode::Quotient), 12);
  MonomialIdeal g2 = sqfree_power_matchings(neighborhood_facets(gen_family("g2:1")), 5);
  EXPECT_EQ(g2.max_degree(), 11);
  EXPECT_EQ(regularity(g2, RegMode::Quotient), 11);
}

TEST(Regularity, QuotientShiftAndDegreeBound) {
  for (const auto& t : oracle::all_trees(9)) {
    NComplex c = neighborhood_facets(t);
    for (int k = 1; k <= matching_number(c); ++k) {
      MonomialIdeal I = sqfree_power_matchings(c, k);
      BettiTable b = graded_betti(I);
      const int q = regularity(b, RegMode::Quotient);
      EXPECT_EQ(q, regularity(b, RegMode::Ideal) - 1) << t.compact();
      EXPECT_GE(q, I.max_degree() - 1) << t.compact();
    }
  }
}

TEST(Regularity, CaterpillarFormulaAgainstHochster) {
  std::vector<Tree> trees;
  for (int n = 2; n <= 8; ++n) trees.push_back(gen_family("path:" + std::to_string(n)));
  for (std::uint64_t s = 1; s <= 12; ++s) trees.push_back(random_caterpillar(5 + static_cast<int>(s % 5), s));
  for (const auto& t : trees) {
    TreeAnalysis a(t);
    MonomialIdeal I = sqfree_power_matchings(a.complex, a.nu);
    EXPECT_EQ(caterpillar_regularity(a), oracle::regularity(oracle::hochster_betti(oracle::from_ideal(I))) - 1)
        << t.compact();
  }
  EXPECT_THROW(caterpillar_regularity(gen_family("g1:1")), Error);
}
