#include <gtest/gtest.h>

#include "gwfano/errors.hpp"
#include "gwfano/invariants.hpp"

using namespace gwfano;

namespace {

std::vector<MultiDegree> grid() {
  return {MultiDegree(5, {3}), MultiDegree(6, {3}),    MultiDegree(7, {3}),
          MultiDegree(7, {2, 2}), MultiDegree(9, {2, 2}), MultiDegree(6, {2, 3})};
}

}  // namespace

TEST(ChernOracle, HandValues) {
  EXPECT_EQ(chern_degree0_oracle(MultiDegree(5, {3})), frac(-1, 2));
  EXPECT_EQ(chern_degree0_oracle(MultiDegree(6, {2, 2})), frac(-1, 2));
}

TEST(Invariants, DegreeZeroMatchesChern) {
  auto cases = grid();
  cases.emplace_back(6, std::vector<int>{2, 2});
  cases.emplace_back(8, std::vector<int>{2, 3});
  for (const auto& md : cases) {
    const InvariantEngine e(md, 0);
    EXPECT_EQ(e.standard(0), chern_degree0_oracle(md)) << md.label();
    EXPECT_EQ(e.type_A(0), 0);
    EXPECT_EQ(e.block(0), 0);
    EXPECT_EQ(e.type_B(0), e.residue_row(0));
    EXPECT_EQ(e.svr_difference(0), 0);
    EXPECT_EQ(e.reduced(0), e.standard(0));
  }
}

TEST(Invariants, ASeriesVanishesAtZeroAndMatchesDoubleResidue) {
  for (const auto& md : {MultiDegree(5, {3}), MultiDegree(7, {2, 2})}) {
    const InvariantEngine e(md, -1, {6 - md.max_b(), 0, ThetaRoute::Lemma});
    ASSERT_EQ(e.hyper().order(), 6);
    const QSeries A = e.A_series();
    EXPECT_EQ(A[0], 0);
    EXPECT_EQ(A, e.A_double_residue()) << md.label();
  }
}

TEST(Invariants, ThreePathConsistencyOnGrid) {
  for (const auto& md : grid()) {
    const InvariantEngine e(md);
    for (const auto& row : e.rows()) {
      EXPECT_TRUE(row.consistent) << md.label() << " b=" << row.b;
      EXPECT_EQ(row.standard, row.reduced + row.difference);
      EXPECT_EQ(row.insertion_power, 1 + md.nu() * row.b);
    }
  }
}

TEST(Invariants, SvrVanishesBeyondThreshold) {
  for (const auto& md : grid()) {
    const InvariantEngine e(md);
    for (int b = 0; b <= md.max_b(); ++b) {
      if (b * md.nu() > md.n() - 2 - md.r()) {
        EXPECT_EQ(e.svr_difference(b), 0) << md.label() << " b=" << b;
        EXPECT_EQ(e.reduced(b), e.standard(b));
      }
    }
  }
  const InvariantEngine cubic(MultiDegree(5, {3}));
  EXPECT_EQ(cubic.svr_difference(2), 0);
}

TEST(Invariants, DifferenceEqualsStandardMinusReduced) {
  const InvariantEngine e(MultiDegree(7, {2, 2}));
  EXPECT_EQ(e.svr_difference(1), e.standard(1) - e.reduced(1));
  EXPECT_EQ(e.svr_difference(1), frac(-4, 3));
}

TEST(Invariants, TypeBLemmaOracle) {
  for (const auto& md : grid()) {
    if (md.nu() < 2) continue;
    const InvariantEngine e(md);
    for (int b = 1; b <= md.max_b(); ++b) EXPECT_EQ(e.type_B_lemma_oracle(b), e.type_B(b)) << md.label();
  }
}

TEST(Invariants, TypeBLemmaOracleAlsoAgreesAtIndexOne) {
  // Outside the range where the oracle is required; recorded as an observation.
  const InvariantEngine e(MultiDegree(6, {2, 3}));
  for (int b = 1; b <= 5; ++b) EXPECT_EQ(e.type_B_lemma_oracle(b), e.type_B(b)) << b;
}

TEST(Invariants, TruncationAndRouteStability) {
  for (const auto& md : grid()) {
    const InvariantEngine base(md);
    const InvariantEngine big(md, -1, {2, 4, ThetaRoute::Lemma});
    const InvariantEngine res(md, -1, {0, 0, ThetaRoute::Residue});
    for (int b = 0; b <= md.max_b(); ++b) {
      EXPECT_EQ(base.standard(b), big.standard(b)) << md.label() << " b=" << b;
      EXPECT_EQ(base.type_A(b), big.type_A(b));
      EXPECT_EQ(base.type_B(b), big.type_B(b));
      EXPECT_EQ(base.type_A(b), res.type_A(b));
      EXPECT_EQ(base.standard(b), res.standard(b));
    }
  }
}

TEST(Invariants, VanishWhenInsertionExceedsDimension) {
  for (const auto& md : grid()) {
    const InvariantEngine e(md);
    for (int b = 0; b <= md.max_b(); ++b) {
      if (1 + md.nu() * b > md.dim()) EXPECT_EQ(e.standard(b), 0) << md.label() << " b=" << b;
    }
  }
}

// Values produced by an independent exact-fraction prototype of the same
// formulas (no shared code).
TEST(Invariants, FrozenPrototypeValues) {
  struct Case {
    MultiDegree md;
    std::vector<Rat> standard;
  };
  const std::vector<Case> cases = {
      {MultiDegree(5, {3}), {frac(-1, 2), 0, 0}},
      {MultiDegree(6, {3}), {frac(-1, 4), frac(-9, 4)}},
      {MultiDegree(7, {3}), {frac(-11, 8), frac(-3, 4)}},
      {MultiDegree(7, {2, 2}), {frac(-1, 2), frac(-4, 3), 0}},
      {MultiDegree(9, {2, 2}), {-1, frac(-10, 3)}},
      {MultiDegree(6, {2, 3}), {-1, frac(15, 2), 0, 0, 0, 0}},
  };
  for (const auto& c : cases) {
    const InvariantEngine e(c.md);
    ASSERT_EQ(static_cast<int>(c.standard.size()), c.md.max_b() + 1);
    for (int b = 0; b <= c.md.max_b(); ++b) EXPECT_EQ(e.standard(b), c.standard[b]) << c.md.label() << " b=" << b;
  }
  const InvariantEngine e(MultiDegree(6, {2, 3}));
  EXPECT_EQ(e.type_A(2), 441);
  EXPECT_EQ(e.type_A(3), 30780);
  EXPECT_EQ(e.type_A(4), frac(2948805, 2));
  EXPECT_EQ(e.type_B(4), -frac(2948805, 2));
  EXPECT_EQ(e.svr_difference(1), frac(15, 2));
  const InvariantEngine s(MultiDegree(6, {3}));
  EXPECT_EQ(s.svr_difference(1), frac(-9, 4));
  EXPECT_EQ(s.type_A(1), 0);
  EXPECT_EQ(s.type_B(1), 0);
}

TEST(Invariants, RangeErrors) {
  const MultiDegree md(5, {3});
  EXPECT_THROW(InvariantEngine(md, 3), OutOfRange);
  const InvariantEngine e(md, 1);
  EXPECT_THROW(e.standard(2), OutOfRange);
  EXPECT_THROW(e.type_A(-1), OutOfRange);
  EXPECT_THROW(e.type_B_lemma_oracle(0), OutOfRange);
}
