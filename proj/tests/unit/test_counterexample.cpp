#include <gtest/gtest.h>

#include <random>

#include <ekchains/counterexample.hpp>

#include "random_symelem.hpp"

using namespace ekc;

namespace {

const IterChainModel& model8() {
  static const IterChainModel m = iterated_centralizer_model(8);
  return m;
}

std::vector<BitFn> fns(std::initializer_list<const char*> texts) {
  std::vector<BitFn> v;
  for (auto t : texts)
    v.push_back(BitFn::parse(t));
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST(Model, FirstLevels) {
  const auto& m = model8();
  EXPECT_EQ(m.level(0), fns({"|0"}));
  EXPECT_EQ(m.level(1), fns({"|0", "|1"}));
  EXPECT_EQ(m.level(2), fns({"|0", "|1", "|0110", "|1001"}));
}

TEST(Model, SizesStrictlyIncrease) {
  const auto& m = model8();
  ASSERT_EQ(m.depth(), 8u);
  for (std::size_t i = 1; i <= 8; ++i)
    EXPECT_LT(m.level(i - 1).size(), m.level(i).size()) << i;
}

TEST(Model, LevelsArePeriodicXorClosedAndInfinitelySupported) {
  const auto& m = model8();
  for (std::size_t i = 1; i <= m.depth(); ++i) {
    const auto& lv = m.level(i);
    const std::size_t bound = std::size_t{1} << i;
    EXPECT_TRUE(m.contains(i, BitFn::zero()));
    for (const auto& a : lv) {
      ASSERT_TRUE(a.is_purely_periodic());
      ASSERT_EQ(bound % a.period(), 0u);
      ASSERT_TRUE(m.contains(i - 1, delta(a)));
      if (!a.is_zero())
        for (std::size_t start = 0; start < 4 * bound; start += bound) {
          bool one = false;
          for (std::size_t x = start; x < start + bound; ++x)
            one = one || a(x);
          ASSERT_TRUE(one) << a.str();
        }
      if (i <= 6)
        for (const auto& b : lv)
          ASSERT_TRUE(m.contains(i, a ^ b));
    }
  }
}

TEST(Model, EveryPeriodicPreimageIsFound) {
  // Any 2^{i+1}-periodic g with delta(g) in C^i belongs to C^{i+1}; sample
  // members of C^{i+1} and random patterns to check both directions.
  const auto& m = model8();
  std::mt19937_64 rng(17);
  for (std::size_t i = 4; i < 8; ++i) {
    const std::size_t p = std::size_t{1} << (i + 1);
    for (int t = 0; t < 200; ++t) {
      std::vector<bool> block(p);
      for (std::size_t x = 0; x < p; ++x)
        block[x] = rng() % 2;
      BitFn g = BitFn::periodic(block);
      ASSERT_EQ(m.contains(i + 1, g), m.contains(i, delta(g)));
    }
  }
}

TEST(Model, OracleAgreement) {
  const auto& m = model8();
  EXPECT_EQ(brute_force_candidates(1), 4u);
  EXPECT_EQ(brute_force_candidates(2), 16u);
  EXPECT_EQ(brute_force_candidates(3), 256u);
  for (std::size_t i = 0; i <= 3; ++i)
    EXPECT_EQ(brute_force_level(i), m.level(i)) << i;
  EXPECT_THROW(brute_force_level(5), std::invalid_argument);
}

TEST(Model, BudgetErrorNamesLevel) {
  ModelOptions tiny;
  tiny.max_cells = 200;
  try {
    iterated_centralizer_model(8, tiny);
    FAIL() << "expected ModelBudgetExceeded";
  } catch (const ModelBudgetExceeded& e) {
    EXPECT_GE(e.level_reached(), 1u);
    EXPECT_LT(e.level_reached(), 8u);
  }
  EXPECT_THROW(iterated_centralizer_model(0), std::invalid_argument);
}

TEST(Model, PeriodExponents) {
  const auto& m = model8();
  EXPECT_EQ(minimal_period_exponent(m.level(1)), 0u);
  EXPECT_EQ(minimal_period_exponent(m.level(2)), 2u);
  for (std::size_t i = 1; i <= 8; ++i)
    EXPECT_LE(minimal_period_exponent(m.level(i)), i);
}

TEST(AscentWitness, LevelOne) {
  auto g = ascent_witness(1, model8());
  EXPECT_TRUE(g == BitFn::parse("|0110") || g == BitFn::parse("|1001")) << g.str();
}

TEST(AscentWitness, DefiningProperties) {
  const auto& m = model8();
  for (std::size_t i = 1; i < m.depth(); ++i) {
    auto g = ascent_witness(i, m);
    EXPECT_TRUE(m.contains(i, delta(g))) << i;
    EXPECT_TRUE(m.contains(i + 1, g)) << i;
    EXPECT_FALSE(m.contains(i, g)) << i;
  }
  EXPECT_THROW(ascent_witness(0, m), std::invalid_argument);
  EXPECT_THROW(ascent_witness(8, m), std::invalid_argument);
}

TEST(FirstOne, Examples) {
  EXPECT_EQ(first_one(BitFn::parse("|0110")), 1u);
  EXPECT_EQ(first_one(BitFn::parse("000|1")), 3u);
  EXPECT_THROW(first_one(BitFn::zero()), std::invalid_argument);
}

TEST(GxlGenerators, FirstGeneratorAndInvolutions) {
  auto gens = gxl_generators(0, 0, 6);
  ASSERT_EQ(gens.size(), 6u);
  EXPECT_EQ(format_cycles(*finite_permutation(gens[0])), "(0 2)(1 3)");
  for (const auto& g : gens) {
    EXPECT_TRUE(sym_mul(g, g).is_identity());
    EXPECT_EQ(g.blocks.moves().size(), 2u);
  }
  auto g2 = gxl_generators(1, 2, 3);
  EXPECT_EQ(g2[0].blocks.str(), "(1 5)");
  EXPECT_EQ(g2[1].blocks.str(), "(1 9)");
  EXPECT_EQ(g2[2].blocks.str(), "(5 9)");
  EXPECT_THROW(gxl_generators(4, 2, 1), std::invalid_argument);
}

TEST(GxlGenerators, CommuteWithPeriodicLevel) {
  const auto& m = model8();
  for (std::size_t k = 0; k + 1 <= 6; ++k) {
    const auto l = static_cast<unsigned>(minimal_period_exponent(m.level(k + 1)));
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << l); ++x)
      for (const auto& g : gxl_generators(x, l, 6))
        for (const auto& h : m.level(k + 1))
          ASSERT_TRUE(sym_commutator(g, SymElem::from_bits(h)).is_identity());
  }
}

TEST(DescentWitness, KZero) {
  IterChainModel m = iterated_centralizer_model(2);
  auto w = descent_witness(0, 12, m);
  EXPECT_EQ(w.k_prime, 1u);
  EXPECT_EQ(w.l, 0u);
  EXPECT_EQ(w.x0, 0u);
  EXPECT_EQ(w.h, BitFn::parse("|0110"));
  EXPECT_EQ(format_cycles(*finite_permutation(w.g)), "(0 2)(1 3)");
  EXPECT_EQ(format_cycles(w.commutator), "(0 1)(2 3)");
}

TEST(DescentWitness, CommutatorFormulaUpToFour) {
  IterChainModel m = iterated_centralizer_model(2);
  for (std::size_t k = 0; k <= 4; ++k) {
    auto w = descent_witness(k, 12, m);
    EXPECT_GT(w.k_prime, k);
    EXPECT_LE(w.k_prime, 12u);
    const Point a = static_cast<Point>(w.x0), b = static_cast<Point>(w.x0 + (1u << w.l));
    auto want = Permutation::from_cycles(w.commutator.degree(), {{2 * a, 2 * a + 1}, {2 * b, 2 * b + 1}});
    EXPECT_EQ(w.commutator, want) << k;
    // g does not commute with B(h), so it fails the membership test one level down.
    EXPECT_FALSE(sym_commutator(w.g, SymElem::from_bits(w.h)).is_identity());
  }
}

TEST(DescentWitness, ScanRangeTooSmall) {
  IterChainModel m = iterated_centralizer_model(2);
  // For k = 4, members of C^5 have period 16 and no h up to C^8 breaks it.
  EXPECT_THROW(descent_witness(4, 7, m), NoDescentWitness);
  EXPECT_THROW(descent_witness(3, 3, m), std::invalid_argument);
}
