#include <blowchern/integer.hpp>
#include <blowchern/lattice.hpp>

#include <gtest/gtest.h>

using namespace blowchern;

TEST(Integer, FloorDivRoundsDown) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(-6, 3), -2);
  EXPECT_EQ(floor_div(6, -4), -2);
}

TEST(Integer, ExtendedGcd) {
  const Bezout b = extended_gcd(240, 46);
  EXPECT_EQ(b.gcd, 2);
  EXPECT_EQ(b.x * 240 + b.y * 46, 2);
  const Bezout n = extended_gcd(-4, 6);
  EXPECT_EQ(n.gcd, 2);
  EXPECT_EQ(n.x * -4 + n.y * 6, 2);
}

TEST(Integer, ToInt64) {
  EXPECT_EQ(to_int64(Integer(-5)), -5);
  Integer big = 1;
  for (int i = 0; i < 70; ++i) big *= 2;
  EXPECT_FALSE(to_int64(big).has_value());
  EXPECT_EQ(to_string(big), "1180591620717411303424");
}

TEST(Lattice, ReducedHermiteForm) {
  // Smith form diag(2, 6, 12)
  Lattice l(3, {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  ASSERT_EQ(l.rank(), 3u);
  for (std::size_t i = 0; i < l.rank(); ++i) {
    const auto p = l.pivots()[i];
    EXPECT_GT(l.rows()[i][p], 0);
    for (std::size_t j = 0; j < i; ++j) {
      EXPECT_GE(l.rows()[j][p], 0);
      EXPECT_LT(l.rows()[j][p], l.rows()[i][p]);
    }
  }
  // determinant is preserved up to sign: |det| = 2*... product of pivots
  Integer prod = 1;
  for (std::size_t i = 0; i < 3; ++i) prod *= l.rows()[i][l.pivots()[i]];
  EXPECT_EQ(prod, 144);  // |det| of the generator matrix
}

TEST(Lattice, ReduceIsCanonicalOnCosets) {
  Lattice l(2, {{2, 0}, {0, 3}});
  EXPECT_EQ(l.reduce({5, 7}), (IntVector{1, 1}));
  EXPECT_EQ(l.reduce({-1, -2}), (IntVector{1, 1}));
  EXPECT_TRUE(l.contains({4, -9}));
  EXPECT_FALSE(l.contains({1, 0}));
}

TEST(Lattice, DependentGeneratorsCollapse) {
  Lattice l(3, {{1, 2, 3}, {2, 4, 6}, {0, 0, 0}});
  EXPECT_EQ(l.rank(), 1u);
  EXPECT_TRUE(l.contains({-3, -6, -9}));
}

TEST(Lattice, SmithInvariants) {
  EXPECT_EQ(smith_invariants({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3), (std::vector<Integer>{2, 6, 12}));
  EXPECT_EQ(smith_invariants({{2, 0}, {0, 3}}, 2), (std::vector<Integer>{1, 6}));
  Lattice l(2, {{2, 0}, {0, 3}});
  EXPECT_EQ(l.invariant_factors(), (std::vector<Integer>{1, 6}));
}
