#include <gtest/gtest.h>

#include <random>

#include <ekchains/symelem.hpp>

#include "random_symelem.hpp"

using namespace ekc;
using testsupport::random_symelem;

TEST(BlockPerm, Basics) {
  auto s = BlockPerm::swap(2, 5);
  EXPECT_EQ(s(2), 5u);
  EXPECT_EQ(s(5), 2u);
  EXPECT_EQ(s(3), 3u);
  EXPECT_EQ(s.extent(), 6u);
  EXPECT_EQ(s.str(), "(2 5)");
  EXPECT_TRUE(BlockPerm::swap(4, 4).is_identity());
  EXPECT_EQ(BlockPerm().str(), "()");
  auto c = BlockPerm::from_cycles({{3, 1, 2}});
  EXPECT_EQ(c.str(), "(1 2 3)");
  EXPECT_TRUE(compose(c, c.inverse()).is_identity());
  EXPECT_THROW(BlockPerm::from_map({{0, 1}}), std::invalid_argument);
  EXPECT_THROW(BlockPerm::from_map({{0, 2}, {1, 2}, {2, 0}}), std::invalid_argument);
}

TEST(SymElem, TextForm) {
  auto g = SymElem::from_blocks(BlockPerm::swap(0, 1));
  EXPECT_EQ(g.str(), "B(|0) P((0 1)) F^0");
  EXPECT_EQ(SymElem::f_power(-2).str(), "B(|0) P(()) F^-2");
}

TEST(SymElem, PointActionOfGenerators) {
  // B flips inside a block, P moves blocks rigidly, F moves block x to f(x).
  auto b = SymElem::from_bits(BitFn::parse("1|0"));
  EXPECT_EQ(sym_apply(b, 0), 1u);
  EXPECT_EQ(sym_apply(b, 1), 0u);
  EXPECT_EQ(sym_apply(b, 2), 2u);
  auto p = SymElem::from_blocks(BlockPerm::swap(0, 1));
  EXPECT_EQ(sym_apply(p, 0), 2u);
  EXPECT_EQ(sym_apply(p, 3), 1u);
  auto f = SymElem::f_power(1);
  EXPECT_EQ(sym_apply(f, 0), 4u); // block 0 -> block 2
  EXPECT_EQ(sym_apply(f, 3), 1u); // block 1 -> block 0
}

TEST(SymElem, CommutatorExamples) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    auto a = random_symelem(rng);
    EXPECT_TRUE(sym_commutator(a, a).is_identity());
  }
  // [B(j), F] = B(delta(j)).
  for (const char* t : {"|0110", "|10", "01|1", "|00111100"}) {
    BitFn j = BitFn::parse(t);
    EXPECT_EQ(sym_commutator(SymElem::from_bits(j), SymElem::f_power(1)),
              SymElem::from_bits(delta(j)))
        << t;
  }
  // Block swap against a bit function that differs on the two blocks.
  auto g = SymElem::from_blocks(BlockPerm::swap(0, 1));
  auto h = SymElem::from_bits(BitFn::parse("|0110"));
  auto c = finite_permutation(sym_commutator(g, h));
  ASSERT_TRUE(c);
  EXPECT_EQ(format_cycles(*c), "(0 1)(2 3)");
  EXPECT_EQ(format_cycles(*finite_permutation(g)), "(0 2)(1 3)");
  EXPECT_FALSE(finite_permutation(h));
}

TEST(SymElemProperty, PointActionHomomorphism) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_symelem(rng), b = random_symelem(rng);
    auto ab = sym_mul(a, b);
    auto ia = sym_inv(a);
    for (std::uint64_t x = 0; x < 512; ++x) {
      ASSERT_EQ(sym_apply(ab, x), sym_apply(a, sym_apply(b, x)));
      ASSERT_EQ(sym_apply(ia, sym_apply(a, x)), x);
    }
  }
}

TEST(SymElemProperty, NormalFormGroupLaws) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_symelem(rng), b = random_symelem(rng), c = random_symelem(rng);
    ASSERT_EQ(sym_mul(a, sym_mul(b, c)), sym_mul(sym_mul(a, b), c));
    ASSERT_TRUE(sym_mul(a, sym_inv(a)).is_identity());
    ASSERT_EQ(sym_mul(SymElem::identity(), a), a);
  }
}

// The full product of block involutions is abelian, so B(p) commutes with
// every B(h).
TEST(SymElemProperty, BitPartsCommute) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = SymElem::from_bits(testsupport::random_bitfn(rng));
    auto h = SymElem::from_bits(testsupport::random_bitfn(rng));
    ASSERT_TRUE(sym_commutator(p, h).is_identity());
  }
}
