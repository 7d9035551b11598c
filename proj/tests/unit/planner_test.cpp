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

#include <gtest/gtest.h>

#include "bnglue/planner.hpp"
#include "support/oracles.hpp"

namespace bnglue {
namespace {

TEST(PlannerTest, TwoRationalNormalCurves) {
  PlanResult res = plan_decomposition(CurveSpec(6, 4, 3));
  ASSERT_TRUE(res.feasible());
  ASSERT_EQ(res.plans.size(), 1u);
  const DecompositionPlan& p = res.plans[0];
  EXPECT_EQ(p.left, CurveSpec(3, 0, 3));
  EXPECT_EQ(p.right, CurveSpec(3, 0, 3));
  EXPECT_EQ(p.n, 5);
  EXPECT_EQ(p.certificate->case_id, case_id::kBase);
}

TEST(PlannerTest, LowDegreeIsInfeasibleWithBounds) {
  PlanResult res = plan_decomposition(CurveSpec(5, 2, 3));
  EXPECT_FALSE(res.feasible());
  EXPECT_TRUE(res.findings.empty());
  EXPECT_EQ(res.bounds.d1_min, 3);
  EXPECT_EQ(res.bounds.d1_max, 2);
  EXPECT_EQ(res.bounds.pairs_examined, 0);
}

TEST(PlannerTest, ZeroRhoAtTwiceTheDimension) {
  for (Int r = 3; r <= 9; ++r) {
    CurveSpec target(2 * r, r + 1, r);
    ASSERT_EQ(oracle::rho(2 * r, r + 1, r), 0);
    PlanResult res = plan_decomposition(target);
    ASSERT_TRUE(res.feasible()) << r;
    EXPECT_EQ(res.plans[0].n, r + 2);
    EXPECT_EQ(res.plans[0].left, rational_normal_curve(r));
  }
}

TEST(PlannerTest, PlansGlueToTargetAndVerify) {
  CurveSpec target(8, 5, 3);
  PlanResult res = enumerate_decompositions(target, 3);
  ASSERT_EQ(res.plans.size(), 3u);
  Int last_n = 0;
  for (const auto& p : res.plans) {
    EXPECT_EQ(glue(p.left, p.right, p.n), target);
    EXPECT_TRUE(verify(*p.certificate).ok);
    EXPECT_EQ(p.certificate->instance, Instance(GluingInstance(p.left, p.right, p.n)));
    EXPECT_GE(p.n, last_n);
    last_n = p.n;
  }
  EXPECT_GE(res.bounds.candidates, 3);
}

TEST(PlannerTest, EnumerationIsConsistentWithSinglePlan) {
  CurveSpec target(10, 6, 4);
  PlanResult one = plan_decomposition(target);
  PlanResult many = enumerate_decompositions(target, 5);
  ASSERT_TRUE(one.feasible());
  ASSERT_FALSE(many.plans.empty());
  EXPECT_EQ(one.plans[0].left, many.plans[0].left);
  EXPECT_EQ(one.plans[0].right, many.plans[0].right);
  EXPECT_EQ(one.plans[0].n, many.plans[0].n);
  EXPECT_EQ(enumerate_decompositions(target, 0).plans.size(), 0u);
}

TEST(PlannerTest, Preconditions) {
  EXPECT_THROW(plan_decomposition(CurveSpec(4, 1, 2)), DomainError);
  EXPECT_THROW(plan_decomposition(CurveSpec(6, 5, 3)), DomainError);
  EXPECT_THROW(enumerate_decompositions(CurveSpec(6, 4, 3), -1), DomainError);
}

TEST(PlannerTest, FeasibleExactlyFromTwiceTheDimension) {
  for (Int r = 3; r <= 4; ++r) {
    for (Int d = 1; d <= 14; ++d) {
      for (Int g = 0; g <= 3 * d; ++g) {
        if (oracle::rho(d, g, r) < 0) continue;
        PlanResult res = plan_decomposition(CurveSpec(d, g, r));
        ASSERT_EQ(res.feasible(), d >= 2 * r) << d << "," << g << "," << r;
        ASSERT_TRUE(res.findings.empty());
      }
    }
  }
}

}  // namespace
}  // namespace bnglue
