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

// Search for ways to write a target class (d, g, r) as two NNS curves glued
// at n points, each with a verified main-theorem certificate.

#ifndef BNGLUE_PLANNER_HPP_
#define BNGLUE_PLANNER_HPP_

#include <algorithm>
#include <cstdlib>
#include <string>
#include <tuple>
#include <vector>

#include "bnglue/certificate.hpp"
#include "bnglue/certifier.hpp"
#include "bnglue/hypotheses.hpp"
#include "bnglue/numerics.hpp"
#include "bnglue/verifier.hpp"

namespace bnglue {

struct DecompositionPlan {
  CurveSpec left;
  CurveSpec right;
  Int n;
  CertPtr certificate;
};

// A candidate that passed the hypothesis check but produced no verified
// certificate.
struct PlannerFinding {
  GluingInstance instance;
  std::string reason;
};

// The exhausted search space: d1 in [d1_min, d1_max], g_i in [0, d_i - r],
// n = g - g1 - g2 + 1 >= 1.
struct SearchBounds {
  Int d1_min = 0;
  Int d1_max = -1;
  Int pairs_examined = 0;
  Int candidates = 0;
};

struct PlanResult {
  CurveSpec target;
  std::vector<DecompositionPlan> plans;
  std::vector<PlannerFinding> findings;
  SearchBounds bounds;

  bool feasible() const { return !plans.empty(); }
};

// Up to `limit` verified plans in canonical order: fewest nodes, then most
// balanced degrees, then d1, then g1. Orientation is fixed by
// (d1, g1) <= (d2, g2).
inline PlanResult enumerate_decompositions(const CurveSpec& target, Int limit) {
  if (target.r() < 3) throw DomainError("decomposition search requires r >= 3");
  if (rho(target) < 0) throw DomainError("decomposition search requires rho(target) >= 0");
  if (limit < 0) throw DomainError("limit must be nonnegative");
  Int d = target.d(), g = target.g(), r = target.r();
  PlanResult out{target, {}, {}, {}};
  out.bounds.d1_min = r;
  out.bounds.d1_max = d - r;

  struct Candidate {
    Int n, gap, d1, g1, d2, g2;
  };
  std::vector<Candidate> cands;
  for (Int d1 = r; d1 <= d - r; ++d1) {
    Int d2 = d - d1;
    for (Int g1 = 0; g1 <= d1 - r; ++g1) {
      for (Int g2 = 0; g2 <= d2 - r; ++g2) {
        if (std::tie(d1, g1) > std::tie(d2, g2)) continue;
        ++out.bounds.pairs_examined;
        Int n = g - g1 - g2 + 1;
        if (n < 1) continue;
        GluingInstance x(CurveSpec(d1, g1, r), CurveSpec(d2, g2, r), n);
        if (!check_main(x).passed()) continue;
        cands.push_back({n, std::abs(d1 - d2), d1, g1, d2, g2});
      }
    }
  }
  out.bounds.candidates = static_cast<Int>(cands.size());
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.n, a.gap, a.d1, a.g1) < std::tie(b.n, b.gap, b.d1, b.g1);
  });

  MainCertifier certifier;
  for (const Candidate& c : cands) {
    if (static_cast<Int>(out.plans.size()) >= limit) break;
    CurveSpec left(c.d1, c.g1, r), right(c.d2, c.g2, r);
    GluingInstance x(left, right, c.n);
    CertifyResult res = certifier.certify(x);
    if (!res.ok()) {
      out.findings.push_back({x, "certifier refused: " + res.refusal().reason});
      continue;
    }
    VerificationReport v = verify(*res.certificate());
    if (!v.ok) {
      out.findings.push_back({x, "certificate failed verification at " + v.failures.front().path});
      continue;
    }
    out.plans.push_back({left, right, c.n, res.certificate()});
  }
  return out;
}

inline PlanResult plan_decomposition(const CurveSpec& target) { return enumerate_decompositions(target, 1); }

}  // namespace bnglue

#endif  // BNGLUE_PLANNER_HPP_
