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

#include <limits>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "bnglue/numerics.hpp"
#include "support/oracles.hpp"

namespace bnglue {
namespace {

TEST(CurveSpecTest, RejectsInvalidFields) {
  EXPECT_THROW(CurveSpec(0, 0, 3), DomainError);
  EXPECT_THROW(CurveSpec(3, -1, 3), DomainError);
  EXPECT_THROW(CurveSpec(3, 0, 0), DomainError);
  EXPECT_NO_THROW(CurveSpec(1, 0, 1));
}

TEST(CurveSpecTest, RoleFlagsAreDerived) {
  CurveSpec lln(5, 2, 3);
  EXPECT_TRUE(lln.is_nns_range());
  EXPECT_TRUE(lln.is_limit_linearly_normal());
  EXPECT_FALSE(lln.is_degenerate_nonspecial_range());

  CurveSpec wide(7, 2, 3);
  EXPECT_TRUE(wide.is_nns_range());
  EXPECT_FALSE(wide.is_limit_linearly_normal());

  CurveSpec line(1, 0, 3);
  EXPECT_FALSE(line.is_nns_range());
  EXPECT_TRUE(line.is_degenerate_nonspecial_range());

  CurveSpec special(2, 3, 3);
  EXPECT_FALSE(special.is_nns_range());
  EXPECT_FALSE(special.is_degenerate_nonspecial_range());
}

TEST(RhoTest, LimitLinearlyNormalClassHasRhoEqualToGenus) {
  EXPECT_EQ(rho(CurveSpec(5, 2, 3)), 2);
  for (Int r = 1; r <= 10; ++r) {
    for (Int g = 0; g <= 50; ++g) EXPECT_EQ(rho(g + r, g, r), g) << "g=" << g << " r=" << r;
  }
}

TEST(RhoTest, RationalNormalCurveHasRhoZero) {
  for (Int r = 1; r <= 30; ++r) EXPECT_EQ(rho(rational_normal_curve(r)), 0);
}

TEST(RhoTest, MatchesOracle) {
  EXPECT_EQ(rho(6, 2, 3), oracle::rho(6, 2, 3));
  EXPECT_EQ(rho(6, 2, 3), 6);
  for (Int r = 1; r <= 8; ++r) {
    for (Int d = 1; d <= 30; ++d) {
      for (Int g = 0; g <= 30; ++g) ASSERT_EQ(rho(d, g, r), oracle::rho(d, g, r));
    }
  }
}

TEST(ExceptionalTest, ExactlyTwoClasses) {
  EXPECT_TRUE(is_exceptional(CurveSpec(5, 2, 3)));
  EXPECT_TRUE(is_exceptional(CurveSpec(7, 2, 5)));
  EXPECT_FALSE(is_exceptional(CurveSpec(6, 2, 3)));
  int count = 0;
  for (Int r = 1; r <= 10; ++r) {
    for (Int d = 1; d <= 20; ++d) {
      for (Int g = 0; g <= 20; ++g) count += is_exceptional(d, g, r) ? 1 : 0;
    }
  }
  EXPECT_EQ(count, 2);
}

TEST(MarginTest, Examples) {
  EXPECT_EQ(margin(CurveSpec(6, 3, 3), 10), 4);
  EXPECT_EQ(margin(CurveSpec(6, 2, 3), 11), 2);
  for (Int r = 2; r <= 20; ++r) {
    EXPECT_EQ(margin(rational_normal_curve(r), r + 3), oracle::margin(r, 0, r, r + 3));
    EXPECT_EQ(margin(rational_normal_curve(r), r + 3), 0);
  }
  EXPECT_THROW(margin(CurveSpec(3, 0, 3), -1), DomainError);
}

TEST(MarginTest, DecreasesByRMinusOnePerNode) {
  for (Int r = 2; r <= 8; ++r) {
    for (Int d = 1; d <= 15; ++d) {
      for (Int g = 0; g <= d; ++g) {
        CurveSpec s(d, g, r);
        for (Int n = 0; n < 20; ++n) ASSERT_EQ(margin(s, n) - margin(s, n + 1), r - 1);
      }
    }
  }
}

TEST(CapacityTest, ExceptionalOverrideIsOneBelowFormula) {
  for (CurveSpec s : {CurveSpec(5, 2, 3), CurveSpec(7, 2, 5)}) {
    EXPECT_EQ(interpolation_capacity(s).value(), 9);
    EXPECT_EQ(formula_capacity(s), 10);
  }
}

TEST(CapacityTest, Examples) {
  EXPECT_EQ(interpolation_capacity(CurveSpec(1, 0, 3)), Capacity::bounded(2));
  EXPECT_EQ(interpolation_capacity(CurveSpec(3, 0, 3)), Capacity::bounded(6));
  EXPECT_EQ(interpolation_capacity(CurveSpec(6, 2, 3)).value(), *oracle::capacity(6, 2, 3));
  EXPECT_EQ(interpolation_capacity(CurveSpec(6, 2, 3)).value(), 12);
  EXPECT_EQ(to_string(interpolation_capacity(CurveSpec(6, 2, 3))), "12");
}

TEST(CapacityTest, RationalNormalCurvePassesThroughRPlusThree) {
  for (Int r = 2; r <= 20; ++r) EXPECT_EQ(interpolation_capacity(rational_normal_curve(r)).value(), r + 3);
}

TEST(CapacityTest, UnboundedOnlyInDimensionOne) {
  EXPECT_TRUE(interpolation_capacity(CurveSpec(4, 1, 1)).is_unbounded());
  EXPECT_EQ(to_string(interpolation_capacity(CurveSpec(4, 1, 1))), "unbounded");
  EXPECT_TRUE(passes_through(CurveSpec(4, 1, 1), 1000000));
  for (Int r = 2; r <= 8; ++r) {
    for (Int d = 1; d <= 20; ++d) {
      for (Int g = 0; g <= d; ++g) ASSERT_FALSE(interpolation_capacity(CurveSpec(d, g, r)).is_unbounded());
    }
  }
}

TEST(CapacityTest, RejectsSpecialClasses) {
  EXPECT_THROW(interpolation_capacity(CurveSpec(2, 3, 3)), DomainError);
  EXPECT_THROW(passes_through(CurveSpec(2, 3, 3), 1), DomainError);
  EXPECT_THROW(formula_capacity(CurveSpec(3, 0, 1)), DomainError);
}

TEST(CapacityTest, MatchesCountingOracle) {
  for (Int r = 1; r <= 9; ++r) {
    for (Int d = 1; d <= 40; ++d) {
      for (Int g = 0; g <= d; ++g) {
        Capacity c = interpolation_capacity(CurveSpec(d, g, r));
        auto o = oracle::capacity(d, g, r);
        ASSERT_EQ(c.is_unbounded(), !o.has_value());
        if (o) {
          ASSERT_EQ(c.value(), *o) << d << "," << g << "," << r;
        }
      }
    }
  }
}

TEST(PassesThroughTest, Examples) {
  EXPECT_TRUE(passes_through(CurveSpec(5, 2, 3), 9));
  EXPECT_FALSE(passes_through(CurveSpec(5, 2, 3), 10));
  EXPECT_TRUE(passes_through(CurveSpec(4, 1, 3), 8));
  EXPECT_FALSE(passes_through(CurveSpec(4, 1, 3), 9));
  EXPECT_EQ(passes_through(CurveSpec(4, 1, 3), 8), oracle::passes(4, 1, 3, 8));
  EXPECT_THROW(passes_through(CurveSpec(4, 1, 3), -1), DomainError);
}

TEST(PassesThroughTest, EmptyPointSetAlwaysPasses) {
  for (Int r = 1; r <= 6; ++r) {
    for (Int d = 1; d <= 12; ++d) {
      for (Int g = 0; g <= d; ++g) EXPECT_TRUE(passes_through(CurveSpec(d, g, r), 0));
    }
  }
}

TEST(PassesThroughTest, MonotoneInN) {
  for (Int r = 1; r <= 7; ++r) {
    for (Int d = 1; d <= 20; ++d) {
      for (Int g = 0; g <= d; ++g) {
        CurveSpec s(d, g, r);
        for (Int n = 1; n <= 60; ++n) {
          if (passes_through(s, n)) {
            ASSERT_TRUE(passes_through(s, n - 1));
          }
        }
      }
    }
  }
}

TEST(GlueTest, Examples) {
  EXPECT_EQ(glue(CurveSpec(3, 0, 3), CurveSpec(3, 0, 3), 5), CurveSpec(6, 4, 3));
  EXPECT_EQ(glue(CurveSpec(4, 1, 3), CurveSpec(5, 2, 3), 6), CurveSpec(9, 8, 3));
  auto o = oracle::glue(4, 1, 5, 2, 6);
  EXPECT_EQ(glue(CurveSpec(4, 1, 3), CurveSpec(5, 2, 3), 6), CurveSpec(o.d, o.g, 3));
  for (Int d = 1; d <= 10; ++d) {
    for (Int g = 0; g <= 5; ++g) EXPECT_EQ(glue(CurveSpec(d, g, 4), line(4), 1), CurveSpec(d + 1, g, 4));
  }
}

TEST(GlueTest, RejectsBadInputs) {
  EXPECT_THROW(glue(CurveSpec(3, 0, 3), CurveSpec(3, 0, 4), 1), DomainError);
  EXPECT_THROW(glue(CurveSpec(3, 0, 3), CurveSpec(3, 0, 3), 0), DomainError);
}

TEST(GlueTest, CommutativeAndRhoAdditive) {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<Int> rdist(1, 12), ddist(1, 60), gdist(0, 40), ndist(1, 40);
  for (int i = 0; i < 10000; ++i) {
    Int r = rdist(rng);
    CurveSpec a(ddist(rng), gdist(rng), r), b(ddist(rng), gdist(rng), r);
    Int n = ndist(rng);
    CurveSpec u = glue(a, b, n);
    ASSERT_EQ(u, glue(b, a, n));
    ASSERT_EQ(rho(u), rho(a) + rho(b) - r * n + r * (r + 2));
  }
}

TEST(OverflowTest, RejectsOverflowingIntermediates) {
  Int big = std::numeric_limits<Int>::max() / 2;
  EXPECT_THROW(rho(big, 0, 3), std::overflow_error);
  EXPECT_THROW(margin(CurveSpec(big, 0, 5), 1), std::overflow_error);
  EXPECT_THROW(glue(CurveSpec(std::numeric_limits<Int>::max(), 0, 3), CurveSpec(1, 0, 3), 1), std::overflow_error);
}

TEST(FloorDivTest, RoundsTowardNegativeInfinity) {
  EXPECT_EQ(detail::floor_div(7, 2), 3);
  EXPECT_EQ(detail::floor_div(-7, 2), -4);
  EXPECT_EQ(detail::floor_div(7, -2), -4);
  EXPECT_EQ(detail::floor_div(-8, 2), -4);
  EXPECT_THROW(detail::floor_div(1, 0), DomainError);
}

}  // namespace
}  // namespace bnglue
