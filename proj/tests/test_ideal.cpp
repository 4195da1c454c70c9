#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace sqfree;

namespace {

std::set<std::uint32_t> supports(const MonomialIdeal& I) {
  std::set<std::uint32_t> out;
  for (const auto& g : I.gens()) out.insert(static_cast<std::uint32_t>(g.support()));
  return out;
}

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialIdeal random_ideal(std::mt19937_64& rng, int nvars, int gens, int max_exp) {
  std::vector<Monomial> g;
  for (int i = 0; i < gens; ++i) {
    std::vector<int> e(static_cast<std::size_t>(nvars));
    for (int& x : e) x = static_cast<int>(rng() % static_cast<unsigned>(max_exp + 1));
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[0] = 1;
    g.push_back(mono(e));
  }
  return MonomialIdeal::minimalize(nvars, g);
}

// Every degree-a monomial, tested against the generators one by one.
std::set<Monomial> degree_slice(const MonomialIdeal& I, int a) {
  std::set<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(I.nvars()), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == I.nvars() - 1) {
      e[static_cast<std::size_t>(var)] = left;
      Monomial m(e);
      if (I.contains(m)) out.insert(m);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[static_cast<std::size_t>(var)] = x;
      rec(var + 1, left - x);
    }
  };
  rec(0, a);
  return out;
}

}  // namespace

TEST(Monomial, FormatAndParseRoundTrip) {
  Monomial m = mono({2, 0, 1, 3});
  EXPECT_EQ(format(m), "x1^2*x3*x4^3");
  EXPECT_EQ(parse_monomial("x1^2*x3*x4^3", 4), m);
  EXPECT_EQ(parse_monomial("1", 4), Monomial(4));
  EXPECT_EQ(format(Monomial(3)), "1");
  EXPECT_EQ(parse_monomial("x2*x2", 2), mono({0, 2}));
}

TEST(Monomial, ParseErrors) {
  for (const char* bad : {"", "y1", "x0", "x5", "x1^", "x1**x2", "x1^a", "2"}) EXPECT_THROW(parse_monomial(bad, 4), Error) << bad;
}

TEST(Monomial, Arithmetic) {
  Monomial a = mono({1, 2, 0}), b = mono({0, 1, 3});
  EXPECT_EQ(lcm(a, b), mono({1, 2, 3}));
  EXPECT_EQ(gcd(a, b), mono({0, 1, 0}));
  EXPECT_EQ(a * b, mono({1, 3, 3}));
  EXPECT_EQ(a.colon(b), mono({1, 1, 0}));
  EXPECT_TRUE(mono({0, 1, 0}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_FALSE(a.is_squarefree());
  EXPECT_EQ(a.degree(), 3);
}

TEST(Ideal, MinimalizeKeepsMinimalGenerators) {
  auto I = MonomialIdeal::minimalize(3, {mono({1, 1, 0}), mono({1, 0, 0}), mono({0, 2, 1}), mono({1, 0, 0}), mono({0, 1, 1})});
  ASSERT_EQ(I.size(), 2u);
  EXPECT_TRUE(I.contains(mono({3, 3, 3})));
  EXPECT_FALSE(I.contains(mono({0, 0, 5})));
  EXPECT_THROW(MonomialIdeal::minimalize(2, {mono({1, 0, 0})}), Error);
}

TEST(Ideal, NiIdealOfFig1) {
  MonomialIdeal I = ni_ideal(gen_family("fig1"));
  EXPECT_EQ(I.size(), 7u);
  EXPECT_EQ(I.min_degree(), 2);
  EXPECT_EQ(I.max_degree(), 3);
  EXPECT_TRUE(I.is_squarefree());
}

TEST(Ideal, SquarefreePowerMatchesSubsetScan) {
  for (const auto& t : oracle::all_trees(9)) {
    NComplex c = neighborhood_facets(t);
    auto I = oracle::from_ideal(ni_ideal(c));
    const int nu = matching_number(c);
    for (int k = 1; k <= nu; ++k)
      EXPECT_EQ(supports(sqfree_power_matchings(c, k)), oracle::squarefree_power(I, k)) << t.compact() << " k=" << k;
    EXPECT_TRUE(sqfree_power_matchings(c, nu + 1, true).is_zero());
    EXPECT_THROW(sqfree_power_matchings(c, nu + 1), Error);
  }
}

TEST(Ideal, BruteForcePowerAgreesOnRandomTrees) {
  for (std::uint64_t s = 1; s <= 15; ++s) {
    Tree t = random_tree(10 + static_cast<int>(s % 3), s);
    NComplex c = neighborhood_facets(t);
    for (int k = 1; k <= matching_number(c); ++k)
      EXPECT_EQ(sqfree_power_matchings(c, k), sqfree_power_bruteforce(ni_ideal(c), k)) << t.compact();
  }
}

TEST(Ideal, BruteForceBudget) {
  EXPECT_THROW(sqfree_power_bruteforce(ni_ideal(gen_family("g1:3")), 9, 100), Error);
}

TEST(Ideal, GradedComponentMatchesDegreeSlice) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    MonomialIdeal I = random_ideal(rng, 3, 3, 2);
    for (int a = I.min_degree(); a <= I.max_degree() + 1; ++a) {
      auto got = graded_component(I, a);
      std::set<Monomial> gens(got.gens().begin(), got.gens().end());
      EXPECT_EQ(gens, degree_slice(I, a)) << format(I) << " a=" << a;
    }
  }
}

TEST(Ideal, SquarefreeComponentMatchesOracle) {
  for (const char* spec : {"fig1", "path:7", "whiskered_path:4", "path:9"}) {
    MonomialIdeal I = sqfree_power_matchings(neighborhood_facets(gen_family(spec)), 2);
    auto o = oracle::from_ideal(I);
    for (int a = I.min_degree(); a <= I.max_degree() + 1; ++a) {
      auto got = supports(squarefree_component(I, a));
      auto want = oracle::squarefree_component(o, a).gens;
      EXPECT_EQ(got, std::set<std::uint32_t>(want.begin(), want.end())) << spec << " a=" << a;
    }
  }
}

TEST(Ideal, ColonByMonomial) {
  auto I = MonomialIdeal::minimalize(3, {mono({2, 1, 0}), mono({0, 1, 2})});
  auto q = colon(I, mono({1, 1, 0}));
  EXPECT_EQ(q, MonomialIdeal::minimalize(3, {mono({1, 0, 0}), mono({0, 0, 2})}));
}

TEST(Ideal, LcmLatticeEqualsSubsetJoins) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal I = random_ideal(rng, 4, 2 + trial % 6, 2);
    EXPECT_EQ(lcm_lattice(I), subset_join_lattice(I)) << format(I);
  }
  EXPECT_THROW(lcm_lattice(ni_ideal(gen_family("path:30")), 5), Error);
}
