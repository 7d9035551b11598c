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

#include <memory>
#include <string>

#include <gtest/gtest.h>

#include "bnglue/certifier.hpp"
#include "bnglue/hypotheses.hpp"
#include "bnglue/verifier.hpp"

namespace bnglue {
namespace {

CertPtr worked() {
  return certify_main(GluingInstance(CurveSpec(4, 1, 3), CurveSpec(5, 2, 3), 6)).certificate();
}

bool has_failure(const VerificationReport& rep, const std::string& path, const std::string& label) {
  for (const auto& f : rep.failures) {
    if (f.path == path && f.label == label) return true;
  }
  return false;
}

const Check* find_label(const std::vector<Check>& checks, const std::string& label) {
  for (const Check& c : checks) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

TEST(VerifierTest, WorkedCertificateVerifies) {
  VerificationReport rep = verify(*worked());
  EXPECT_TRUE(rep.ok);
  EXPECT_TRUE(rep.failures.empty());
  EXPECT_EQ(rep.nodes_checked, 6);
  EXPECT_GT(rep.conditions_checked, 30);
}

TEST(VerifierTest, TamperedInternalNodeCountBreaksGenusAdditivity) {
  CertPtr good = worked();
  Certificate bad = *good;
  std::get<Split>(bad.node).plan.n0 = 3;
  VerificationReport rep = verify(bad);
  EXPECT_FALSE(rep.ok);
  EXPECT_TRUE(has_failure(rep, "root", "genus additivity"));
  for (const auto& f : rep.failures) EXPECT_LT(f.slack, 0);
}

TEST(VerifierTest, BaseLeafWithTooManyNodesFails) {
  GluingInstance x(CurveSpec(3, 0, 3), CurveSpec(3, 0, 3), 6);
  Certificate c{x, BaseMainSp{check_main_sp(x)}, case_id::kBase};
  VerificationReport rep = verify(c);
  EXPECT_FALSE(rep.ok);
  EXPECT_TRUE(has_failure(rep, "root", "base node count"));
}

TEST(VerifierTest, BaseLeafAtRPlusTwoHasZeroSlack) {
  GluingInstance x(CurveSpec(3, 0, 3), CurveSpec(3, 0, 3), 5);
  Certificate c{x, BaseMainSp{check_main_sp(x)}, case_id::kBase};
  std::vector<Check> checks = verify_node(c);
  const Check* k = find_label(checks, "base node count");
  ASSERT_NE(k, nullptr);
  EXPECT_EQ(k->slack, 0);
  EXPECT_TRUE(find_label(checks, "recorded verdict")->holds());
}

TEST(VerifierTest, RncSplitOuterBaseHasZeroSlack) {
  CertPtr root = worked();
  const CertPtr& b = std::get<Swap>(std::get<Split>(root->node).outer->node).child;
  std::vector<Check> checks = verify_node(*b);
  EXPECT_EQ(find_label(checks, "condition 5: outer base node count")->slack, 0);
  EXPECT_EQ(find_label(checks, "condition 3")->slack, 1);
  EXPECT_EQ(find_label(checks, "genus additivity")->slack, 0);
}

TEST(VerifierTest, SwapNodes) {
  CertPtr root = worked();
  const CertPtr& outer = std::get<Split>(root->node).outer;
  EXPECT_TRUE(verify_node(*outer).empty());

  Certificate bad{GluingInstance(CurveSpec(3, 0, 3), CurveSpec(6, 3, 3), 5), outer->node, outer->case_id};
  std::vector<Check> checks = verify_node(bad);
  ASSERT_EQ(checks.size(), 1u);
  EXPECT_EQ(checks[0].label, "malformed swap");
  EXPECT_FALSE(checks[0].holds());
}

TEST(VerifierTest, FailuresAccumulateWithPaths) {
  CertPtr root = worked();
  Certificate bad = *root;
  Split& top = std::get<Split>(bad.node);
  Certificate inner = *top.inner;
  std::get<BaseMainSp>(inner.node).verdict.outcome = Outcome::fail;
  top.inner = std::make_shared<const Certificate>(inner);
  top.plan.n_prime = 5;
  VerificationReport rep = verify(bad);
  EXPECT_FALSE(rep.ok);
  EXPECT_TRUE(has_failure(rep, "root", "node additivity"));
  EXPECT_TRUE(has_failure(rep, "root/inner", "recorded verdict"));
  EXPECT_GE(rep.failures.size(), 2u);
}

TEST(VerifierTest, RootHypothesesArePrefixed) {
  GluingInstance x(CurveSpec(4, 1, 3), CurveSpec(5, 2, 3), 7);
  Certificate c = *worked();
  c.instance = x;
  VerificationReport rep = verify(c);
  EXPECT_TRUE(has_failure(rep, "root", "root: union rho"));
}

TEST(VerifierTest, CacheGivesTheSameVerdicts) {
  Verifier cached(true);
  MainCertifier certifier;
  for (Int n = 1; n <= 10; ++n) {
    for (Int g2 = 0; g2 <= 4; ++g2) {
      GluingInstance x(CurveSpec(4, 1, 3), CurveSpec(g2 + 3, g2, 3), n);
      CertifyResult res = certifier.certify(x);
      if (!res.ok()) continue;
      EXPECT_EQ(cached.verify(*res.certificate()).ok, verify(*res.certificate()).ok);
    }
  }
  Certificate bad = *worked();
  std::get<Split>(bad.node).plan.n0 = 3;
  EXPECT_FALSE(cached.verify(bad).ok);
}

TEST(VerifierTest, VerifiedMainCertificatesSatisfyHypotheses) {
  MainCertifier certifier;
  for (Int r = 3; r <= 4; ++r) {
    for (Int d1 = r; d1 <= 9; ++d1) {
      for (Int g1 = 0; g1 <= d1 - r; ++g1) {
        for (Int d2 = r; d2 <= 9; ++d2) {
          for (Int g2 = 0; g2 <= d2 - r; ++g2) {
            for (Int n = 1; n <= 12; ++n) {
              GluingInstance x(CurveSpec(d1, g1, r), CurveSpec(d2, g2, r), n);
              CertifyResult res = certifier.certify(x);
              if (res.ok() && verify(*res.certificate()).ok) {
                ASSERT_TRUE(check_main(x).passed()) << to_string(x);
              }
            }
          }
        }
      }
    }
  }
}

TEST(VerifierTest, SmallMidLeafWithWrongTagFails) {
  SmallMidQuery q(CurveSpec(8, 3, 3), 3);
  Certificate c{q, LemmaLeaf{"made up", {}}, case_id::kMidTop};
  EXPECT_FALSE(verify(c).ok);
  Certificate rho_leaf{q, LemmaLeaf{lemma_tag::kRhoLarge, {}}, case_id::kMidRhoLarge};
  VerificationReport rep = verify(rho_leaf);
  EXPECT_TRUE(has_failure(rep, "root", "a <= r-1"));
}

TEST(VerifierTest, ReduceWithWrongChildFails) {
  CertifyResult main = certify_small_hyp(HyperplaneInstance(CurveSpec(4, 1, 3), CurveSpec(2, 0, 2), 3));
  ASSERT_TRUE(main.ok());
  Certificate bad = *main.certificate();
  auto& red = std::get<Reduce>(bad.node);
  red.children[0] = certify_main(GluingInstance(CurveSpec(3, 0, 3), CurveSpec(3, 0, 3), 3)).certificate();
  VerificationReport rep = verify(bad);
  EXPECT_FALSE(rep.ok);
  EXPECT_TRUE(has_failure(rep, "root", "child0: instance"));
}

}  // namespace
}  // namespace bnglue
