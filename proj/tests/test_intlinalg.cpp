#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "surfcls/error.hpp"
#include "surfcls/intlinalg.hpp"

using namespace surfcls;

using V = std::vector<std::int64_t>;

TEST(IntLinAlg, SnfExamples) {
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{1, 0}, {0, 1}})), (V{1, 1}));
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}})), (V{2, 4}));
  EXPECT_EQ(smith_normal_form(IntMatrix(3, 3)), V{});
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})), (V{1, 6}));
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{0, 2}, {2, 0}, {0, 0}})), (V{2, 2}));
}

TEST(IntLinAlg, Rank) {
  IntMatrix id(4, 4);
  for (int i = 0; i < 4; ++i) id(i, i) = 1;
  EXPECT_EQ(rank(id), 4u);
  EXPECT_EQ(rank(IntMatrix::from_rows({{2, 4}, {6, 8}})), 2u);
  EXPECT_EQ(rank(IntMatrix(1, 3)), 0u);
  EXPECT_EQ(rank(IntMatrix::from_rows({{1, 2}, {2, 4}})), 1u);
}

TEST(IntLinAlg, Cokernel) {
  EXPECT_EQ(cokernel(2, IntMatrix::from_rows({{2}, {0}})), (FgAbelianGroup{1, {2}}));
  EXPECT_EQ(cokernel(3, IntMatrix(3, 0)), (FgAbelianGroup{3, {}}));
  EXPECT_EQ(cokernel(1, IntMatrix::from_rows({{1}})), (FgAbelianGroup{0, {}}));
  EXPECT_EQ(cokernel(2, IntMatrix::from_rows({{2, 0}, {0, 3}})), (FgAbelianGroup{0, {6}}));
  EXPECT_THROW(cokernel(3, IntMatrix::from_rows({{1}})), Error);
}

TEST(IntLinAlg, GroupFormat) {
  EXPECT_EQ(group_format({2, {}}), "Z^2");
  EXPECT_EQ(group_format({1, {2}}), "Z (+) Z/2");
  EXPECT_EQ(group_format({0, {}}), "0");
  EXPECT_EQ(group_format({1, {}}), "Z");
  EXPECT_EQ(group_format({0, {2, 4}}), "Z/2 (+) Z/4");
}

TEST(IntLinAlg, FromRowsRagged) {
  try {
    IntMatrix::from_rows({{1, 2}, {3}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(IntLinAlg, Multiply) {
  IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  IntMatrix b = IntMatrix::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(multiply(a, b), IntMatrix::from_rows({{2, 1}, {4, 3}}));
  EXPECT_THROW(multiply(a, IntMatrix(3, 1)), Error);
  IntMatrix big = IntMatrix::from_rows({{INT64_MAX / 2 + 1}});
  try {
    multiply(big, IntMatrix::from_rows({{4}}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Overflow);
  }
}

TEST(IntLinAlg, SnfMatchesMinorsOracle) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 400; ++t) {
    IntMatrix m = oracle::random_matrix(rng, 5, -9, 9);
    auto got = smith_normal_form(m);
    EXPECT_EQ(got, oracle::snf_by_minors(m));
    EXPECT_EQ(smith_normal_form(m.transposed()), got);
    for (std::size_t i = 1; i < got.size(); ++i) EXPECT_EQ(got[i] % got[i - 1], 0);
  }
}

TEST(IntLinAlg, LargerSparseMatchesOracle) {
  // boundary-like matrices: entries in {-1,0,1}, a few columns per row
  std::mt19937_64 rng(77);
  for (int t = 0; t < 100; ++t) {
    IntMatrix m = oracle::random_matrix(rng, 5, -1, 1);
    EXPECT_EQ(smith_normal_form(m), oracle::snf_by_minors(m));
  }
}
