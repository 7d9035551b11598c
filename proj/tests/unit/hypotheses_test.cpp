// Copyright 2026 The bnglue Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>

#include <gtest/gtest.h>

#include "bnglue/hypotheses.hpp"
#include "support/oracles.hpp"

namespace bnglue {
namespace {

const Check* find_check(const Verdict& v, const std::string& prefix) {
  for (const Check& c : v.checks) {
    if (c.label.rfind(prefix, 0) == 0) return &c;
  }
  return nullptr;
}

bool slacks_agree(const Verdict& v) {
  bool all = std::all_of(v.checks.begin(), v.checks.end(), [](const Check& c) { return c.holds(); });
  return all == v.passed();
}

TEST(CheckMainTest, WorkedInstancePassesWithZeroUnionRho) {
  GluingInstance x(CurveSpec(4, 1, 3), CurveSpec(5, 2, 3), 6);
  Verdict v = check_main(x);
  EXPECT_TRUE(v.passed());
  EXPECT_EQ(v.conclusion, Conclusion::bn);
  const Check* u = find_check(v, "brill-noether number of union");
  ASSERT_NE(u, nullptr);
  EXPECT_EQ(u->slack, 0);
  EXPECT_EQ(rho(x.glued()), 0);
  EXPECT_NE(find_check(v, "both limit linearly normal"), nullptr);
}

TEST(CheckMainTest, OneMoreNodeMakesUnionRhoNegative) {
  Verdict v = check_main(GluingInstance(CurveSpec(4, 1, 3), CurveSpec(5, 2, 3), 7));
  EXPECT_FALSE(v.passed());
  EXPECT_EQ(v.conclusion, Conclusion::none);
  EXPECT_LT(find_check(v, "brill-noether number of union")->slack, 0);
}

TEST(CheckMainTest, ExceptionalSideIsStrict) {
  // (5,2,3) passes through 9 general points, not 10.
  GluingInstance at9(CurveSpec(5, 2, 3), CurveSpec(9, 6, 3), 9);
  GluingInstance at10(CurveSpec(5, 2, 3), CurveSpec(9, 6, 3), 10);
  EXPECT_GE(find_check(check_main(at9), "interpolation, side 1")->slack, 0);
  EXPECT_LT(find_check(check_main(at10), "interpolation, side 1")->slack, 0);
  EXPECT_FALSE(check_main(at10).passed());
}

TEST(CheckMainTest, NonLlnSideNeedsMarginTwo) {
  // (6,2,3) at n = 11 has margin exactly 2.
  GluingInstance x(CurveSpec(6, 2, 3), CurveSpec(7, 0, 3), 11);
  Verdict v = check_main(x);
  const Check* m = find_check(v, "extra margin");
  ASSERT_NE(m, nullptr);
  EXPECT_EQ(oracle::margin(6, 2, 3, 11), 2);
  EXPECT_EQ(v.passed(), oracle::main_hypotheses(6, 2, 7, 0, 3, 11));
}

TEST(CheckMainTest, RejectsDimensionOneAndEmptyNodeSet) {
  EXPECT_FALSE(check_main(GluingInstance(CurveSpec(3, 1, 1), CurveSpec(3, 1, 1), 1)).passed());
  EXPECT_LT(find_check(check_main(GluingInstance(CurveSpec(3, 1, 1), CurveSpec(3, 1, 1), 1)), "ambient dimension")->slack,
            0);
  EXPECT_THROW(GluingInstance(CurveSpec(3, 0, 3), CurveSpec(3, 0, 3), 0), DomainError);
}

TEST(CheckMainTest, SpecialSideFailsNnsRange) {
  Verdict v = check_main(GluingInstance(CurveSpec(4, 2, 3), CurveSpec(5, 2, 3), 2));
  EXPECT_FALSE(v.passed());
  EXPECT_EQ(find_check(v, "nns range, side 1")->slack, -1);
}

TEST(CheckMainTest, AgreesWithBruteForceOracle) {
  int passes = 0;
  for (Int r = 2; r <= 6; ++r) {
    for (Int d1 = 1; d1 <= 12; ++d1) {
      for (Int g1 = 0; g1 <= d1; ++g1) {
        for (Int d2 = 1; d2 <= 12; ++d2) {
          for (Int g2 = 0; g2 <= d2; ++g2) {
            for (Int n = 1; n <= 16; ++n) {
              GluingInstance x(CurveSpec(d1, g1, r), CurveSpec(d2, g2, r), n);
              Verdict v = check_main(x);
              ASSERT_EQ(v.passed(), oracle::main_hypotheses(d1, g1, d2, g2, r, n)) << to_string(x);
              ASSERT_TRUE(slacks_agree(v));
              passes += v.passed() ? 1 : 0;
            }
          }
        }
      }
    }
  }
  EXPECT_GT(passes, 1000);
}

TEST(CheckMainTest, SymmetricUnderSwap) {
  for (Int r = 2; r <= 5; ++r) {
    for (Int d1 = r; d1 <= 10; ++d1) {
      for (Int g1 = 0; g1 <= d1 - r; ++g1) {
        for (Int d2 = r; d2 <= 10; ++d2) {
          for (Int g2 = 0; g2 <= d2 - r; ++g2) {
            for (Int n = 1; n <= 14; ++n) {
              GluingInstance x(CurveSpec(d1, g1, r), CurveSpec(d2, g2, r), n);
              ASSERT_EQ(check_main(x).passed(), check_main(x.swapped()).passed()) << to_string(x);
            }
          }
        }
      }
    }
  }
}

TEST(CheckMainSpTest, NnsPairsWithFewNodesPass) {
  // (r+1)(g+r) - rg + r = g + r(r+2) >= rn whenever n <= r+2.
  for (Int r = 2; r <= 7; ++r) {
    for (Int g1 = 0; g1 <= 6; ++g1) {
      for (Int g2 = 0; g2 <= 6; ++g2) {
        for (Int n = 1; n <= r + 2; ++n) {
          Verdict v = check_main_sp(GluingInstance(CurveSpec(g1 + r, g1, r), CurveSpec(g2 + r, g2, r), n));
          ASSERT_TRUE(v.passed());
          ASSERT_EQ(v.conclusion, Conclusion::wbn);
        }
      }
    }
  }
}

TEST(CheckMainSpTest, WitnessIsTheStrongerSide) {
  Verdict v = check_main_sp(GluingInstance(CurveSpec(1, 0, 3), CurveSpec(5, 2, 3), 2));
  ASSERT_TRUE(v.passed());
  EXPECT_EQ(v.witness_side, 2);
  EXPECT_EQ(v.checks.size(), 1u);
  EXPECT_EQ(v.checks[0].slack, 17 - 6);
  Verdict f = check_main_sp(GluingInstance(CurveSpec(1, 0, 3), CurveSpec(1, 0, 3), 3));
  EXPECT_FALSE(f.passed());
  EXPECT_FALSE(f.witness_side.has_value());
}

TEST(CheckMainHypTest, Examples) {
  HyperplaneInstance ok(CurveSpec(3, 0, 3), CurveSpec(2, 0, 2), 3);
  EXPECT_TRUE(check_main_hyp(ok).passed());
  HyperplaneInstance high_genus(CurveSpec(5, 2, 3), CurveSpec(2, 0, 2), 3);
  EXPECT_FALSE(check_main_hyp(high_genus).passed());
  HyperplaneInstance many(CurveSpec(3, 0, 3), CurveSpec(2, 0, 2), 6);
  EXPECT_FALSE(check_main_hyp(many).passed());
}

TEST(CheckSmallMidTest, Examples) {
  EXPECT_THROW(SmallMidQuery(CurveSpec(8, 3, 3), 4), DomainError);
  EXPECT_TRUE(check_small_mid(SmallMidQuery(CurveSpec(8, 3, 3), 3)).passed());
  EXPECT_TRUE(check_small_mid(SmallMidQuery(CurveSpec(7, 2, 5), 3)).passed());
  Verdict low = check_small_mid(SmallMidQuery(CurveSpec(8, 3, 3), 0));
  EXPECT_FALSE(low.passed());
  EXPECT_LT(find_check(low, "half-dimension lower bound")->slack, 0);
  Verdict neg = check_small_mid(SmallMidQuery(CurveSpec(3, 1, 3), 3));
  EXPECT_FALSE(neg.passed());
  EXPECT_LT(find_check(neg, "brill-noether number")->slack, 0);
}

TEST(CheckSmallMidTest, MatchesDirectReading) {
  for (Int r = 1; r <= 7; ++r) {
    for (Int d = 1; d <= 20; ++d) {
      for (Int g = 0; g <= 20; ++g) {
        for (Int a = 0; a <= r; ++a) {
          Int p = oracle::rho(d, g, r);
          bool want = 2 * a >= r - 2 && a >= r - p && a <= r && p >= 0;
          Verdict v = check_small_mid(SmallMidQuery(CurveSpec(d, g, r), a));
          ASSERT_EQ(v.passed(), want);
          ASSERT_TRUE(slacks_agree(v));
        }
      }
    }
  }
}

TEST(CheckSmallHypTest, Examples) {
  EXPECT_TRUE(check_small_hyp(HyperplaneInstance(CurveSpec(3, 0, 3), CurveSpec(2, 0, 2), 3)).passed());
  Verdict many = check_small_hyp(HyperplaneInstance(CurveSpec(3, 0, 3), CurveSpec(2, 0, 2), 6));
  EXPECT_FALSE(many.passed());
  EXPECT_EQ(find_check(many, "node count upper bound")->slack, -1);
  Verdict thin = check_small_hyp(HyperplaneInstance(CurveSpec(3, 0, 3), CurveSpec(1, 0, 2), 1));
  EXPECT_FALSE(thin.passed());
  EXPECT_LT(find_check(thin, "hyperplane excess")->slack, 0);
}

TEST(CheckSmallHypTest, UnionRhoUsesAmbientOfInnerCurve) {
  HyperplaneInstance x(CurveSpec(4, 0, 3), CurveSpec(1, 0, 2), 6);
  EXPECT_EQ(x.glued(), CurveSpec(5, 5, 3));
  EXPECT_EQ(rho(x.glued()), oracle::rho(5, 5, 3));
  EXPECT_FALSE(check_small_hyp(x).passed());
}

TEST(VerdictTest, OutcomeIsAFunctionOfSlacks) {
  Verdict v = Verdict::from_checks({Check{"a", "x", 0}, Check{"b", "y", 3}}, Conclusion::bn);
  EXPECT_TRUE(v.passed());
  Verdict f = Verdict::from_checks({Check{"a", "x", 0}, Check{"b", "y", -1}}, Conclusion::bn, 1);
  EXPECT_FALSE(f.passed());
  EXPECT_EQ(f.conclusion, Conclusion::none);
  EXPECT_FALSE(f.witness_side.has_value());
  EXPECT_EQ(check_gt("s", "a", 3, "b", 3).slack, -1);
  EXPECT_EQ(check_eq("e", "a", 3, "b", 5).slack, -2);
}

}  // namespace
}  // namespace bnglue
