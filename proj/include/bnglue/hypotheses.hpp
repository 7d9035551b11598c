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

// Hypothesis checkers for the gluing theorems. Each returns a Verdict that
// lists every inequality it evaluated together with its slack.
//
// Theorem names used throughout:
//   main      two NNS curves glued at n general points are a BN-curve
//   main-sp   WBN gluing when one side satisfies (r+1)d - rg + r >= rn
//   main-hyp  WBN gluing of a curve with a curve inside a hyperplane
//   small-mid attaching a degree-a rational curve at a+2 points
//   small-hyp BN gluing of a curve with a curve inside a hyperplane

#ifndef BNGLUE_HYPOTHESES_HPP_
#define BNGLUE_HYPOTHESES_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "bnglue/instances.hpp"
#include "bnglue/numerics.hpp"

namespace bnglue {

namespace detail {

inline std::string side_label(const char* what, int i) { return std::string(what) + ", side " + std::to_string(i); }

// (r+1)d - r g + r, the left-hand side of the main-sp inequality.
inline Int wbn_capacity_term(const CurveSpec& s) {
  return add(sub(mul(add(s.r(), 1), s.d()), mul(s.r(), s.g())), s.r());
}

// Interpolation gate for one side. The strict form at the exceptional
// classes must agree with the capacity override; that equivalence is asserted.
inline Check interpolation_check(const CurveSpec& s, Int n, int side) {
  Check c;
  if (s.is_degenerate_nonspecial_range()) {
    c = check_ge(side_label("interpolation", side), "d+1-g", add(sub(s.d(), s.g()), 1), "n", n);
  } else if (is_exceptional(s)) {
    c = check_gt(side_label("interpolation", side), "(r+1)d-(r-3)(g-1)", interpolation_numerator(s), "(r-1)n",
                 mul(sub(s.r(), 1), n));
  } else {
    c = check_ge(side_label("interpolation", side), "(r+1)d-(r-3)(g-1)", interpolation_numerator(s), "(r-1)n",
                 mul(sub(s.r(), 1), n));
  }
  if (c.holds() != passes_through(s, n)) {
    throw std::logic_error("strict interpolation inequality disagrees with capacity override at " + to_string(s));
  }
  return c;
}

// Additional margin condition for one side: >= 2 off the LLN line, >= 4 on it.
inline Int extra_margin_slack(const CurveSpec& s, Int n) {
  Int threshold = s.is_limit_linearly_normal() ? 4 : 2;
  return sub(margin(s, n), threshold);
}

}  // namespace detail

// WBN gluing (main-sp): passes iff some side has (r+1)d_i - r g_i + r >= r n.
inline Verdict check_main_sp(const GluingInstance& inst) {
  using namespace detail;
  Int rhs = mul(inst.r(), inst.n());
  Int s1 = wbn_capacity_term(inst.left());
  Int s2 = wbn_capacity_term(inst.right());
  int side = s2 > s1 ? 2 : 1;
  Int best = side == 1 ? s1 : s2;
  std::vector<Check> checks{check_ge(side_label("wbn gluing bound", side), "(r+1)d-rg+r", best, "rn", rhs)};
  return Verdict::from_checks(std::move(checks), Conclusion::wbn, side);
}

// WBN gluing with a hyperplane curve (main-hyp).
inline Verdict check_main_hyp(const HyperplaneInstance& inst) {
  using namespace detail;
  const CurveSpec& c = inst.inner();
  std::vector<Check> checks{
      check_ge("hyperplane genus bound", "d'-rg'-1", sub(sub(c.d(), mul(c.r(), c.g())), 1), "0", 0),
      check_ge("wbn gluing bound, inner", "(r+1)d'-rg'+r", wbn_capacity_term(c), "rn", mul(c.r(), inst.n())),
  };
  return Verdict::from_checks(std::move(checks), Conclusion::wbn);
}

// BN gluing of two NNS curves (main). Gates: NNS range and interpolation on
// both sides, n >= 1, the limit-linearly-normal / margin alternative, and a
// nonnegative Brill-Noether number of the union. r = 1 is unsupported.
inline Verdict check_main(const GluingInstance& inst) {
  using namespace detail;
  std::vector<Check> checks;
  checks.push_back(check_ge("ambient dimension", "r", inst.r(), "2", 2));
  checks.push_back(check_ge("node count", "n", inst.n(), "1", 1));
  for (int i = 1; i <= 2; ++i) {
    const CurveSpec& s = inst.side(i);
    Check nns = check_ge(side_label("nns range", i), "d", s.d(), "g+r", add(s.g(), s.r()));
    bool in_range = nns.holds();
    checks.push_back(std::move(nns));
    if (in_range && inst.r() >= 2) checks.push_back(interpolation_check(s, inst.n(), i));
  }
  if (inst.left().is_limit_linearly_normal() && inst.right().is_limit_linearly_normal()) {
    checks.push_back(check_flag("both limit linearly normal", "d1 = g1+r and d2 = g2+r", true));
  } else {
    Int s1 = extra_margin_slack(inst.left(), inst.n());
    Int s2 = extra_margin_slack(inst.right(), inst.n());
    int side = s2 > s1 ? 2 : 1;
    const CurveSpec& s = inst.side(side);
    Int threshold = s.is_limit_linearly_normal() ? 4 : 2;
    checks.push_back(check_ge(side_label("extra margin", side), "margin", margin(s, inst.n()), "threshold", threshold));
  }
  // rho(union) >= 0, i.e. r n <= r(r+2) + rho1 + rho2 without division.
  checks.push_back(check_ge("brill-noether number of union", "rho" + to_string(inst.glued()), rho(inst.glued()), "0", 0));
  return Verdict::from_checks(std::move(checks), Conclusion::bn);
}

// Attaching a rational curve of degree a at a + 2 points (small-mid).
inline Verdict check_small_mid(const SmallMidQuery& q) {
  using namespace detail;
  const CurveSpec& s = q.spec();
  Int p = rho(s);
  std::vector<Check> checks{
      check_ge("half-dimension lower bound", "2a", mul(2, q.a()), "r-2", sub(s.r(), 2)),
      check_ge("brill-noether lower bound", "a", q.a(), "r-rho", sub(s.r(), p)),
      check_ge("upper bound", "r", s.r(), "a", q.a()),
      check_ge("brill-noether number", "rho" + to_string(s), p, "0", 0),
  };
  return Verdict::from_checks(std::move(checks), Conclusion::bn);
}

// BN gluing of a curve with a curve in a hyperplane (small-hyp).
inline Verdict check_small_hyp(const HyperplaneInstance& inst) {
  using namespace detail;
  const CurveSpec& h = inst.hyper();
  std::vector<Check> checks{
      check_ge("ambient dimension", "r", inst.r(), "2", 2),
      check_ge("node count upper bound", "r+2", add(inst.r(), 2), "n", inst.n()),
      check_ge("hyperplane excess", "d''+n", add(h.d(), inst.n()), "g''+r", add(h.g(), inst.r())),
      check_ge("brill-noether number of union", "rho" + to_string(inst.glued()), rho(inst.glued()), "0", 0),
  };
  return Verdict::from_checks(std::move(checks), Conclusion::bn);
}

}  // namespace bnglue

#endif  // BNGLUE_HYPOTHESES_HPP_
