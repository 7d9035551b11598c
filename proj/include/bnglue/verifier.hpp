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

// Node-by-node certificate checker. It recomputes every hypothesis from the
// numbers stored in the tree and does not call the hypothesis checkers or the
// certifiers; only the arithmetic in numerics.hpp is shared.

#ifndef BNGLUE_VERIFIER_HPP_
#define BNGLUE_VERIFIER_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "bnglue/certificate.hpp"
#include "bnglue/instances.hpp"
#include "bnglue/numerics.hpp"

namespace bnglue {

struct VerificationFailure {
  std::string path;
  std::string label;
  std::string inequality;
  Int slack = 0;

  friend bool operator==(const VerificationFailure&, const VerificationFailure&) = default;
};

struct VerificationReport {
  bool ok = true;
  std::vector<VerificationFailure> failures;
  Int nodes_checked = 0;
  Int conditions_checked = 0;
};

namespace verify_detail {

using detail::add;
using detail::mul;
using detail::sub;

inline void append(std::vector<Check>& out, const std::string& prefix, std::vector<Check> more) {
  for (auto& c : more) {
    c.label = prefix + c.label;
    out.push_back(std::move(c));
  }
}

// Capacity as an integer for the checks below; r = 1 never reaches here
// because every gluing role requires r >= 2.
inline Check capacity_at_least(std::string label, const CurveSpec& s, Int needed) {
  if (s.d() < s.g()) return check_ge(std::move(label), "d", s.d(), "g", s.g());
  Capacity cap = interpolation_capacity(s);
  if (cap.is_unbounded()) return check_flag(std::move(label), "unbounded capacity", true);
  return check_ge(std::move(label), "capacity" + to_string(s), cap.value(), "n", needed);
}

inline Int wbn_term(const CurveSpec& s) { return add(sub(mul(add(s.r(), 1), s.d()), mul(s.r(), s.g())), s.r()); }

// Hypotheses of the main theorem, with the exceptional strictness taken from
// the capacity function rather than from a strict inequality.
inline std::vector<Check> main_conditions(const GluingInstance& x) {
  std::vector<Check> out;
  Int r = x.r(), n = x.n();
  out.push_back(check_ge("r >= 2", "r", r, "2", 2));
  out.push_back(check_ge("n >= 1", "n", n, "1", 1));
  bool lln[2] = {false, false};
  Int best_excess = 0;
  bool have_excess = false;
  for (int i = 1; i <= 2; ++i) {
    const CurveSpec& s = x.side(i);
    std::string side = " (side " + std::to_string(i) + ")";
    out.push_back(check_ge("nns" + side, "d", s.d(), "g+r", add(s.g(), r)));
    if (r >= 2 && s.d() >= s.g()) out.push_back(capacity_at_least("interpolation" + side, s, n));
    lln[i - 1] = s.d() == add(s.g(), r);
    Int m = sub(sub(mul(add(r, 1), s.d()), mul(sub(r, 3), sub(s.g(), 1))), mul(sub(r, 1), n));
    Int excess = sub(m, lln[i - 1] ? 4 : 2);
    if (!have_excess || excess > best_excess) best_excess = excess;
    have_excess = true;
  }
  if (!(lln[0] && lln[1])) {
    out.push_back(Check{"margin alternative", "max over sides of margin - threshold = " + std::to_string(best_excess) +
                                                  " >= 0",
                        best_excess});
  }
  // Union rho, written as r n <= r(r+2) + rho1 + rho2.
  Int lhs = add(add(mul(r, add(r, 2)), rho(x.left())), rho(x.right()));
  out.push_back(check_ge("union rho", "r(r+2)+rho1+rho2", lhs, "rn", mul(r, n)));
  return out;
}

inline std::vector<Check> wbn_conditions(const GluingInstance& x) {
  Int best = std::max(wbn_term(x.left()), wbn_term(x.right()));
  return {check_ge("wbn gluing bound", "max (r+1)d-rg+r", best, "rn", mul(x.r(), x.n()))};
}

inline std::vector<Check> main_hyp_conditions(const HyperplaneInstance& x) {
  const CurveSpec& c = x.inner();
  return {
      check_ge("hyperplane genus bound", "d'-rg'-1", sub(sub(c.d(), mul(c.r(), c.g())), 1), "0", 0),
      check_ge("wbn gluing bound", "(r+1)d'-rg'+r", wbn_term(c), "rn", mul(c.r(), x.n())),
  };
}

inline std::vector<Check> small_mid_conditions(const SmallMidQuery& q) {
  const CurveSpec& s = q.spec();
  Int p = rho(s);
  return {
      check_ge("2a >= r-2", "2a", mul(2, q.a()), "r-2", sub(s.r(), 2)),
      check_ge("a >= r-rho", "a", q.a(), "r-rho", sub(s.r(), p)),
      check_ge("a <= r", "r", s.r(), "a", q.a()),
      check_ge("rho >= 0", "rho", p, "0", 0),
  };
}

inline std::vector<Check> small_hyp_conditions(const HyperplaneInstance& x) {
  const CurveSpec& h = x.hyper();
  Int r = x.r(), n = x.n();
  CurveSpec u(add(x.inner().d(), h.d()), sub(add(add(x.inner().g(), h.g()), n), 1), r);
  return {
      check_ge("r >= 2", "r", r, "2", 2),
      check_ge("n <= r+2", "r+2", add(r, 2), "n", n),
      check_ge("d''+n >= g''+r", "d''+n", add(h.d(), n), "g''+r", add(h.g(), r)),
      check_ge("union rho", "rho" + to_string(u), rho(u), "0", 0),
  };
}

inline Check recorded_verdict(const Verdict& recorded, const std::vector<Check>& recomputed) {
  bool want = std::all_of(recomputed.begin(), recomputed.end(), [](const Check& c) { return c.holds(); });
  bool self = std::all_of(recorded.checks.begin(), recorded.checks.end(), [](const Check& c) { return c.holds(); });
  bool ok = recorded.passed() == want && recorded.passed() == self;
  return check_flag("recorded verdict", "recorded outcome matches recomputation", ok);
}

// Lexicographic decrease of (total degree, n, least genus of an lln side).
inline std::pair<std::string, bool> metric_decreases(const GluingInstance& from, const GluingInstance& to) {
  auto m = [](const GluingInstance& x) {
    Int lln = INT64_MAX;
    for (int i = 1; i <= 2; ++i) {
      const CurveSpec& s = x.side(i);
      if (s.d() == s.g() + s.r()) lln = std::min(lln, s.g());
    }
    return std::array<Int, 3>{add(x.left().d(), x.right().d()), x.n(), lln};
  };
  auto a = m(from), b = m(to);
  auto show = [](const std::array<Int, 3>& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
           (v[2] == INT64_MAX ? std::string("inf") : std::to_string(v[2])) + ")";
  };
  return {show(b) + " < " + show(a), b < a};
}

enum class Role { main, wbn, small_mid, small_hyp };

struct ExpectedChild {
  Instance instance;
  Role role;
};

inline CurveSpec lift(const CurveSpec& s, Int r) { return CurveSpec(s.d(), s.g(), r); }

// Numeric side conditions and prescribed children for each reduction step.
struct Reduction {
  std::vector<Check> side;
  std::vector<ExpectedChild> children;
  bool known = true;
};

inline Reduction small_mid_reduction(const SmallMidQuery& q, const std::string& id) {
  Reduction red;
  const CurveSpec& s = q.spec();
  Int d = s.d(), g = s.g(), r = s.r(), a = q.a(), p = rho(s);
  if (id == case_id::kMidGenusLarge) {
    red.side.push_back(check_ge("g >= r+1", "g", g, "r+1", r + 1));
    if (g >= r + 1 && d - r >= 1) {
      CurveSpec child(d - r, g - r - 1, r);
      red.side.push_back(check_eq("rho preserved", "rho(child)", rho(child), "rho", p));
      red.children.push_back({SmallMidQuery(child, a), Role::small_mid});
    }
  } else if (id == case_id::kMidStep) {
    red.side.push_back(check_ge("rho >= 1", "rho", p, "1", 1));
    red.side.push_back(check_ge("g >= 1", "g", g, "1", 1));
    red.side.push_back(check_ge("a >= r+1-rho", "a", a, "r+1-rho", r + 1 - p));
    if (g >= 1 && d >= 2) red.children.push_back({SmallMidQuery(CurveSpec(d - 1, g - 1, r), a), Role::small_mid});
  } else {
    red.known = false;
  }
  return red;
}

inline Reduction small_hyp_reduction(const HyperplaneInstance& x, const std::string& id) {
  Reduction red;
  const CurveSpec& c = x.inner();
  const CurveSpec& h = x.hyper();
  Int r = x.r(), n = x.n(), d1 = c.d(), g1 = c.g(), d2 = h.d(), g2 = h.g();
  CurveSpec h_up = lift(h, r);
  CurveSpec rnc_h(r - 1, 0, r - 1);
  auto wide = [&] { return check_ge("d'' >= g''+r-1", "d''", d2, "g''+r-1", g2 + r - 1); };
  auto special_inner = [&] { return check_ge("d' <= g'+r-1", "g'+r-1", g1 + r - 1, "d'", d1); };
  if (id == case_id::kHypDegenerate) {
    red.side = {wide(), check_ge("n <= r-1", "r-1", r - 1, "n", n)};
    red.children.push_back({GluingInstance(c, h_up, n), Role::wbn});
  } else if (id == case_id::kHypMain) {
    red.side = {check_ge("d' >= g'+r", "d'", d1, "g'+r", g1 + r), wide(), check_ge("g' >= 1", "g'", g1, "1", 1),
                check_ge("lemma divisor degree", "r+3-(n-1)", r + 3 - (n - 1), "m", 2)};
    if (g1 >= 1) {
      red.side.push_back(check_ge("rho of lowered curve", "rho(d'-1,g'-1,r)", rho(d1 - 1, g1 - 1, r), "0", 0));
      red.children.push_back(
          {GluingInstance(CurveSpec(d1 - 1, g1 - 1, r), CurveSpec(d2 + 1, g2, r), n + 1), Role::main});
    }
  } else if (id == case_id::kHypSmallN) {
    red.side = {special_inner(), wide(), check_ge("n <= r", "r", r, "n", n)};
    red.children.push_back({GluingInstance(c, h_up, n), Role::wbn});
  } else if (id == case_id::kHypMid) {
    red.side = {special_inner(), check_eq("d'' = r-1", "d''", d2, "r-1", r - 1), check_eq("g'' = 0", "g''", g2, "0", 0),
                check_eq("n = r+1", "n", n, "r+1", r + 1)};
    red.children.push_back({SmallMidQuery(c, r - 1), Role::small_mid});
  } else if (id == case_id::kHypExceptional) {
    red.side = {special_inner(), check_eq("d'' = r-1", "d''", d2, "r-1", r - 1), check_eq("g'' = 0", "g''", g2, "0", 0),
                check_eq("n = r+2", "n", n, "r+2", r + 2), check_ge("g' >= r", "g'", g1, "r", r)};
    if (g1 >= r && d1 - r >= 1) {
      CurveSpec c0(d1 - r, g1 - r, r);
      red.side.push_back(check_ge("rho of split piece", "rho(d'-r,g'-r,r)", rho(c0), "1", 1));
      CurveSpec rnc = rational_normal_curve(r);
      red.children.push_back({GluingInstance(c0, rnc, r + 1), Role::wbn});
      red.children.push_back({HyperplaneInstance(c0, h, n - 1), Role::small_hyp});
      red.children.push_back({GluingInstance(glue(c0, h_up, n - 1), rnc, r + 2), Role::wbn});
    }
  } else if (id == case_id::kHypGeneral) {
    red.side = {special_inner(), wide(), check_ge("rho(C) >= 0", "rho", rho(c), "0", 0),
                check_ge("g' >= r", "g'", g1, "r", r), check_ge("n >= r+1", "n", n, "r+1", r + 1)};
    if (g1 >= r && d1 - r + 1 >= 1 && n >= 2) {
      CurveSpec c0(d1 - r + 1, g1 - r, r);
      red.children.push_back({HyperplaneInstance(c0, rnc_h, r + 1), Role::small_hyp});
      red.children.push_back({HyperplaneInstance(c0, h, n - 1), Role::small_hyp});
      red.children.push_back({HyperplaneInstance(glue(c0, h_up, n - 1), rnc_h, r + 2), Role::small_hyp});
    }
  } else if (id == case_id::kHypHyperSplit) {
    red.side = {check_ge("d'' <= g''+r-2", "g''+r-2", g2 + r - 2, "d''", d2), check_ge("g'' >= r", "g''", g2, "r", r),
                check_ge("rho(D) >= 0", "rho", rho(h), "0", 0),
                check_ge("hyperplane curve admits deformation", "d''-g''+1+n", d2 - g2 + 1 + n, "r+1", r + 1)};
    if (g2 >= r && d2 - r + 1 >= 1) {
      CurveSpec d0(d2 - r + 1, g2 - r, r - 1);
      red.children.push_back({GluingInstance(d0, rnc_h, r + 1), Role::wbn});
      red.children.push_back({HyperplaneInstance(c, d0, n), Role::small_hyp});
      red.children.push_back({HyperplaneInstance(glue(c, lift(d0, r), n), rnc_h, r + 1), Role::small_hyp});
    }
  } else {
    red.known = false;
  }
  return red;
}

inline std::vector<Check> role_conditions(const Instance& inst, Role role) {
  if (role == Role::main) {
    if (const auto* g = std::get_if<GluingInstance>(&inst)) return main_conditions(*g);
  } else if (role == Role::wbn) {
    if (std::holds_alternative<GluingInstance>(inst)) return {};
  } else if (role == Role::small_mid) {
    if (const auto* q = std::get_if<SmallMidQuery>(&inst)) return small_mid_conditions(*q);
  } else if (const auto* h = std::get_if<HyperplaneInstance>(&inst)) {
    return small_hyp_conditions(*h);
  }
  return {check_flag("instance kind", "instance kind matches role", false)};
}

inline std::vector<Check> split_conditions(const GluingInstance& x, const Split& s) {
  std::vector<Check> out;
  const SplitPlan& p = s.plan;
  Int r = x.r();
  out.push_back(check_flag("split parent", "parent equals side 1", p.parent == x.left()));
  out.push_back(check_flag("piece ambient", "pieces lie in P^r",
                           p.piece_main.r() == r && p.piece_off.r() == r && p.parent.r() == r));
  out.push_back(check_eq("degree additivity", "d1'+d1''", add(p.piece_main.d(), p.piece_off.d()), "d1", p.parent.d()));
  out.push_back(check_eq("genus additivity", "g1'+g1''+n0-1", sub(add(add(p.piece_main.g(), p.piece_off.g()), p.n0), 1),
                         "g1", p.parent.g()));
  out.push_back(check_eq("node additivity", "n'+n''", add(p.n_prime, p.n_dprime), "n", x.n()));
  out.push_back(check_ge("n' >= 0", "n'", p.n_prime, "0", 0));
  out.push_back(check_ge("n'' >= 1", "n''", p.n_dprime, "1", 1));
  out.push_back(check_ge("n0 >= 1", "n0", p.n0, "1", 1));
  out.push_back(check_ge("off piece nonspecial", "d1''", p.piece_off.d(), "g1''", p.piece_off.g()));

  bool off_is_line = p.piece_off == line(r);
  switch (s.kind) {
    case SplitKind::line1:
      out.push_back(check_flag("split shape", "line meeting the main piece once", off_is_line && p.n0 == 1));
      break;
    case SplitKind::line2:
      out.push_back(check_flag("split shape", "line meeting the main piece twice", off_is_line && p.n0 == 2));
      break;
    case SplitKind::rnc:
      out.push_back(check_flag("split shape", "rational normal curve main piece with r+1 internal nodes",
                               p.piece_main == rational_normal_curve(r) && p.n0 == add(r, 1)));
      break;
  }

  // Condition 1: the main piece is NNS and passes through its nodes.
  out.push_back(check_ge("condition 1: nns", "d1'", p.piece_main.d(), "g1'+r", add(p.piece_main.g(), r)));
  if (r >= 2 && p.n_prime >= 0) {
    out.push_back(capacity_at_least("condition 1: interpolation", p.piece_main, add(p.n_prime, p.n0)));
  }
  // Condition 2: the off piece passes through max(n'', n0) points.
  Int need = std::max(p.n_dprime, p.n0);
  if (p.piece_off.d() >= add(p.piece_off.g(), r)) {
    out.push_back(capacity_at_least("condition 2a: interpolation", p.piece_off, need));
  } else {
    out.push_back(check_ge("condition 2b: degenerate interpolation", "d1''+1-g1''",
                           sub(add(p.piece_off.d(), 1), p.piece_off.g()), "max(n'',n0)", need));
  }
  out.push_back(check_ge("condition 3", "r+2", add(r, 2), "n0", p.n0));

  const Certificate& inner = *s.inner;
  const Certificate& outer = *s.outer;
  const auto* in_inst = std::get_if<GluingInstance>(&inner.instance);
  const auto* out_inst = std::get_if<GluingInstance>(&outer.instance);
  if (!in_inst || !out_inst) {
    out.push_back(check_flag("child instances", "children are gluing instances", false));
    return out;
  }
  bool shapes_valid = p.n_dprime >= 1 && add(p.n0, p.n_prime) >= 1 && p.piece_off.r() == r && p.piece_main.r() == r;
  if (shapes_valid) {
    GluingInstance want_inner(p.piece_off, x.right(), p.n_dprime);
    GluingInstance want_outer(p.piece_main, glue(p.piece_off, x.right(), p.n_dprime), add(p.n0, p.n_prime));
    out.push_back(check_flag("inner instance", "inner = (C1'', C2, n'')", *in_inst == want_inner));
    out.push_back(check_flag("outer instance", "outer = (C1', C1'' u C2, n0+n')", *out_inst == want_outer));
  } else {
    out.push_back(check_flag("child instances", "split fields admit child instances", false));
  }

  // Condition 4: the inner union is handled by the base theorem or by recursion.
  if (std::holds_alternative<BaseMainSp>(inner.node)) {
    out.push_back(check_ge("condition 4: inner base node count", "r+2", add(r, 2), "n''", in_inst->n()));
  } else {
    append(out, "condition 4: inner ", main_conditions(*in_inst));
    out.push_back(check_ge("condition 4: inner degree decrease", "d1+d2", x.total_degree(), "inner d1+d2 + 1",
                           add(in_inst->total_degree(), 1)));
  }
  // Condition 5: the outer union, same alternatives.
  if (std::holds_alternative<BaseMainSp>(outer.node)) {
    out.push_back(check_ge("condition 5: outer base node count", "r+2", add(r, 2), "n0+n'", out_inst->n()));
  } else {
    append(out, "condition 5: outer ", main_conditions(*out_inst));
    out.push_back(check_ge("condition 5: n0 <= n''", "n''", p.n_dprime, "n0", p.n0));
    auto [text, ok] = metric_decreases(x, *out_inst);
    out.push_back(check_flag("condition 5: metric decrease", text, ok));
  }
  return out;
}

inline std::vector<Check> lemma_conditions(const Certificate& c, const LemmaLeaf& leaf) {
  const auto* q = std::get_if<SmallMidQuery>(&c.instance);
  if (!q) return {check_flag("lemma instance", "lemma leaves apply to small-mid queries", false)};
  const CurveSpec& s = q->spec();
  Int r = s.r(), a = q->a();
  if (leaf.tag == lemma_tag::kTop) return {check_eq("a = r", "a", a, "r", r)};
  if (leaf.tag == lemma_tag::kRhoLarge) {
    return {check_ge("rho >= r+1", "rho", rho(s), "r+1", r + 1), check_ge("a <= r-1", "r-1", r - 1, "a", a),
            check_ge("2a+2 >= r", "2a+2", 2 * a + 2, "r", r)};
  }
  if (leaf.tag == lemma_tag::kDualizing) {
    return {check_eq("d = 2r-a", "d", s.d(), "2r-a", 2 * r - a), check_eq("g = r-a", "g", s.g(), "r-a", r - a),
            check_ge("2a+2 >= r", "2a+2", 2 * a + 2, "r", r)};
  }
  return {check_flag("lemma tag", "known lemma tag '" + leaf.tag + "'", false)};
}

inline std::string instance_text(const Instance& i) { return to_string(i); }

inline std::vector<Check> reduce_conditions(const Certificate& c, const Reduce& red) {
  Reduction want;
  bool hyp_parent = false;
  if (const auto* q = std::get_if<SmallMidQuery>(&c.instance)) {
    want = small_mid_reduction(*q, c.case_id);
  } else if (const auto* h = std::get_if<HyperplaneInstance>(&c.instance)) {
    want = small_hyp_reduction(*h, c.case_id);
    hyp_parent = true;
  } else {
    want.known = false;
  }
  if (!want.known) return {check_flag("reduction", "known reduction '" + c.case_id + "'", false)};
  std::vector<Check> out = std::move(want.side);
  out.push_back(check_eq("child count", "children", static_cast<Int>(red.children.size()), "expected",
                         static_cast<Int>(want.children.size())));
  std::size_t k = std::min(red.children.size(), want.children.size());
  for (std::size_t i = 0; i < k; ++i) {
    const Certificate& child = *red.children[i];
    const ExpectedChild& e = want.children[i];
    std::string prefix = "child" + std::to_string(i) + ": ";
    out.push_back(check_flag(prefix + "instance", "child is " + instance_text(e.instance), child.instance == e.instance));
    if (e.role == Role::wbn) {
      out.push_back(
          check_flag(prefix + "base leaf", "child is a base-main-sp leaf", std::holds_alternative<BaseMainSp>(child.node)));
    }
    append(out, prefix, role_conditions(child.instance, e.role));
    // Same-theorem edges must decrease; cross-theorem edges are ranked.
    if (e.role == Role::small_mid && !hyp_parent) {
      const auto& from = std::get<SmallMidQuery>(c.instance);
      const auto* to = std::get_if<SmallMidQuery>(&child.instance);
      if (to) out.push_back(check_ge(prefix + "degree decrease", "d", from.spec().d(), "child d + 1", to->spec().d() + 1));
    }
    if (e.role == Role::small_hyp) {
      const auto& from = std::get<HyperplaneInstance>(c.instance);
      const auto* to = std::get_if<HyperplaneInstance>(&child.instance);
      if (to) {
        bool dec = std::pair(to->hyper().d(), to->n()) < std::pair(from.hyper().d(), from.n());
        out.push_back(check_flag(prefix + "(d'', n) decrease", "child (d'', n) below parent", dec));
      }
    }
  }
  return out;
}

}  // namespace verify_detail

// The local conditions of one node, each with its slack. Malformed nodes are
// reported as a single failing condition.
inline std::vector<Check> verify_node(const Certificate& c) {
  using namespace verify_detail;
  try {
    if (const auto* b = std::get_if<BaseMainSp>(&c.node)) {
      const auto* x = std::get_if<GluingInstance>(&c.instance);
      if (!x) return {check_flag("malformed node", "base-main-sp on a gluing instance", false)};
      std::vector<Check> out = wbn_conditions(*x);
      out.push_back(check_ge("base node count", "r+2", add(x->r(), 2), "n", x->n()));
      out.push_back(recorded_verdict(b->verdict, wbn_conditions(*x)));
      return out;
    }
    if (const auto* b = std::get_if<BaseMainHyp>(&c.node)) {
      const auto* x = std::get_if<HyperplaneInstance>(&c.instance);
      if (!x) return {check_flag("malformed node", "base-main-hyp on a hyperplane instance", false)};
      std::vector<Check> out = main_hyp_conditions(*x);
      out.push_back(recorded_verdict(b->verdict, main_hyp_conditions(*x)));
      return out;
    }
    if (const auto* s = std::get_if<Split>(&c.node)) {
      const auto* x = std::get_if<GluingInstance>(&c.instance);
      if (!x || !s->inner || !s->outer) return {check_flag("malformed node", "split with two children", false)};
      return split_conditions(*x, *s);
    }
    if (const auto* w = std::get_if<Swap>(&c.node)) {
      const auto* x = std::get_if<GluingInstance>(&c.instance);
      bool ok = x && w->child && w->child->instance == Instance(x->swapped());
      if (!ok) return {check_flag("malformed swap", "child instance is the swapped parent", false)};
      return {};
    }
    if (const auto* l = std::get_if<LemmaLeaf>(&c.node)) return lemma_conditions(c, *l);
    const auto& red = std::get<Reduce>(c.node);
    for (const auto& ch : red.children) {
      if (!ch) return {check_flag("malformed node", "reduction children present", false)};
    }
    return reduce_conditions(c, red);
  } catch (const std::exception& e) {
    return {check_flag("malformed node", std::string("node arithmetic: ") + e.what(), false)};
  }
}

// Verifies a whole certificate. With caching on, subtrees already verified
// clean are skipped; the cache keys on node addresses, so every certificate
// passed in must outlive the Verifier.
class Verifier {
 public:
  explicit Verifier(bool cache_clean_subtrees = false) : cache_(cache_clean_subtrees) {}

  VerificationReport verify(const Certificate& root) {
    VerificationReport report;
    std::vector<Check> top;
    try {
      if (const auto* g = std::get_if<GluingInstance>(&root.instance)) {
        top = verify_detail::main_conditions(*g);
      } else if (const auto* q = std::get_if<SmallMidQuery>(&root.instance)) {
        top = verify_detail::small_mid_conditions(*q);
      } else {
        top = verify_detail::small_hyp_conditions(std::get<HyperplaneInstance>(root.instance));
      }
    } catch (const std::exception& e) {
      top = {check_flag("malformed root", e.what(), false)};
    }
    for (const Check& c : top) {
      ++report.conditions_checked;
      if (!c.holds()) report.failures.push_back({"root", "root: " + c.label, c.inequality, c.slack});
    }
    walk(root, "root", report);
    report.ok = report.failures.empty();
    return report;
  }

 private:
  void walk(const Certificate& c, const std::string& path, VerificationReport& report) {
    if (cache_ && clean_.count(&c)) return;
    std::size_t before = report.failures.size();
    ++report.nodes_checked;
    for (Check& k : verify_node(c)) {
      ++report.conditions_checked;
      if (!k.holds()) report.failures.push_back({path, std::move(k.label), std::move(k.inequality), k.slack});
    }
    if (const auto* s = std::get_if<Split>(&c.node)) {
      if (s->inner) walk(*s->inner, path + "/inner", report);
      if (s->outer) walk(*s->outer, path + "/outer", report);
    } else if (const auto* w = std::get_if<Swap>(&c.node)) {
      if (w->child) walk(*w->child, path + "/swap", report);
    } else if (const auto* r = std::get_if<Reduce>(&c.node)) {
      for (std::size_t i = 0; i < r->children.size(); ++i) {
        if (r->children[i]) walk(*r->children[i], path + "/child" + std::to_string(i), report);
      }
    }
    if (cache_ && report.failures.size() == before) clean_.insert(&c);
  }

  bool cache_;
  std::unordered_set<const Certificate*> clean_;
};

inline VerificationReport verify(const Certificate& cert) { return Verifier().verify(cert); }

}  // namespace bnglue

#endif  // BNGLUE_VERIFIER_HPP_
