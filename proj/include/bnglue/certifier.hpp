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

// Certificate construction for the three gluing theorems. The certifiers
// replay the inductive proofs step by step: certify_main for two NNS curves,
// certify_small_mid for attaching a rational curve, certify_small_hyp for a
// curve glued to a curve inside a hyperplane.

#ifndef BNGLUE_CERTIFIER_HPP_
#define BNGLUE_CERTIFIER_HPP_

#include <functional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bnglue/certificate.hpp"
#include "bnglue/hypotheses.hpp"
#include "bnglue/instances.hpp"
#include "bnglue/numerics.hpp"

namespace bnglue {

// Deliberate dispatch bugs used to show that the verifier and the audits
// catch faulty certifiers. Mutant::none is the real certifier.
enum class Mutant {
  none,
  case_a_n0_three,          // lln case A uses three internal nodes
  case_a_keep_genus,        // lln case A forgets to lower the genus of the main piece
  case_a_skip_strictness,   // lln case A ignores strictness at the exceptional genera
  case_a_threshold_loose,   // lln case A accepts (r-1)n one above its bound
  case_b_n0_r,              // lln case B uses r internal nodes
  case_b_nprime_two,        // lln case B keeps two nodes on the rational normal curve
  line1_n0_two,             // line split off a non-lln side uses two internal nodes
  line1_skip_strictness,    // line split ignores strictness at (6,2,3) and (8,2,5)
  line1_outer_n_wrong,      // line split recurses with n instead of n - 1
  line1_piece_degree,       // line split removes two from the degree
  case4_keep_genus,         // genus-drop line split forgets the genus drop
  skip_swap_normalization,  // lln branch never reorders by genus
  base_threshold_r_plus_3,  // base case accepts n = r + 3
};

inline constexpr Mutant kAllMutants[] = {
    Mutant::case_a_n0_three,         Mutant::case_a_keep_genus,     Mutant::case_a_skip_strictness,
    Mutant::case_a_threshold_loose,  Mutant::case_b_n0_r,           Mutant::case_b_nprime_two,
    Mutant::line1_n0_two,            Mutant::line1_skip_strictness, Mutant::line1_outer_n_wrong,
    Mutant::line1_piece_degree,      Mutant::case4_keep_genus,      Mutant::skip_swap_normalization,
    Mutant::base_threshold_r_plus_3,
};

inline const char* to_string(Mutant m) {
  switch (m) {
    case Mutant::none: return "none";
    case Mutant::case_a_n0_three: return "case-a-n0-three";
    case Mutant::case_a_keep_genus: return "case-a-keep-genus";
    case Mutant::case_a_skip_strictness: return "case-a-skip-strictness";
    case Mutant::case_a_threshold_loose: return "case-a-threshold-loose";
    case Mutant::case_b_n0_r: return "case-b-n0-r";
    case Mutant::case_b_nprime_two: return "case-b-nprime-two";
    case Mutant::line1_n0_two: return "line1-n0-two";
    case Mutant::line1_skip_strictness: return "line1-skip-strictness";
    case Mutant::line1_outer_n_wrong: return "line1-outer-n-wrong";
    case Mutant::line1_piece_degree: return "line1-piece-degree";
    case Mutant::case4_keep_genus: return "case4-keep-genus";
    case Mutant::skip_swap_normalization: return "skip-swap-normalization";
    case Mutant::base_threshold_r_plus_3: return "base-threshold-r-plus-3";
  }
  return "none";
}

struct CertifyOptions {
  Mutant mutant = Mutant::none;
  // Recursion guard; a refusal is returned when exceeded.
  Int max_depth = 4096;
};

namespace detail {

inline bool is_line_split_strict_class(const CurveSpec& s) {
  return (s.d() == 6 && s.g() == 2 && s.r() == 3) || (s.d() == 8 && s.g() == 2 && s.r() == 5);
}
inline bool is_genus_drop_strict_class(const CurveSpec& s) {
  return (s.d() == 6 && s.g() == 3 && s.r() == 3) || (s.d() == 8 && s.g() == 3 && s.r() == 5);
}

inline void require_consistent(bool by_margin, bool by_capacity, const char* what) {
  if (by_margin != by_capacity) throw std::logic_error(std::string("strictness encodings disagree in ") + what);
}

struct GluingKey {
  Int d1, g1, d2, g2, r, n;
  friend bool operator==(const GluingKey&, const GluingKey&) = default;
};

struct GluingKeyHash {
  std::size_t operator()(const GluingKey& k) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Int v : {k.d1, k.g1, k.d2, k.g2, k.r, k.n}) {
      h ^= std::hash<Int>{}(v);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace detail

// Builds main-theorem certificates. Results are memoized per object; reuse
// one instance across calls to share subtrees, but do not share it between
// threads.
class MainCertifier {
 public:
  explicit MainCertifier(CertifyOptions options = {}) : opt_(options) {}

  CertifyResult certify(const GluingInstance& x) {
    try {
      return run(x, 0);
    } catch (const DomainError& e) {
      return Refusal{x, std::string("internal domain error: ") + e.what(), std::nullopt};
    }
  }

  void clear() { memo_.clear(); }

 private:
  static detail::GluingKey key(const GluingInstance& x) {
    return {x.left().d(), x.left().g(), x.right().d(), x.right().g(), x.r(), x.n()};
  }

  bool mutant(Mutant m) const { return opt_.mutant == m; }

  CertifyResult run(const GluingInstance& x, Int depth) {
    if (depth > opt_.max_depth) return Refusal{x, "recursion depth guard exceeded", std::nullopt};
    auto k = key(x);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    Verdict v = check_main(x);
    CertifyResult out = v.passed() ? dispatch(x, depth)
                                   : CertifyResult(Refusal{x, "main theorem hypotheses fail", std::move(v)});
    // Refusals are cheap to recompute and carry verdict text; keep only successes.
    if (out.ok()) memo_.emplace(k, out);
    return out;
  }

  static CertPtr base_leaf(const GluingInstance& x) {
    return make_cert(x, BaseMainSp{check_main_sp(x)}, case_id::kBase);
  }

  CertifyResult recurse(const GluingInstance& child, Int depth) {
    CertifyResult r = run(child, depth + 1);
    if (r.ok()) return r;
    return Refusal{child, "sub-certificate refused: " + r.refusal().reason, r.refusal().verdict};
  }

  // Wraps the certificate of x.swapped() in a Swap node for x.
  static CertifyResult swap_of(const GluingInstance& x, CertifyResult child, const char* label) {
    if (!child.ok()) return child;
    return make_cert(x, Swap{child.certificate()}, label);
  }

  CertifyResult with_refusal_context(const GluingInstance& root, CertifyResult child) {
    if (child.ok()) return child;
    Refusal r = child.refusal();
    r.instance = root;
    return r;
  }

  // Line split on side 1 with two internal nodes (lln case A and the
  // genus-drop split): main piece (d-1, g-1), a line meeting C2 twice.
  CertifyResult split_line_genus_drop(const GluingInstance& x, Int depth, const char* label, bool keep_genus,
                                      Int n0) {
    const CurveSpec& c1 = x.left();
    Int r = x.r();
    CurveSpec main(c1.d() - 1, keep_genus ? c1.g() : c1.g() - 1, r);
    CurveSpec off = line(r);
    SplitPlan plan{c1, main, off, n0, x.n() - 2, 2};
    GluingInstance inner_inst(off, x.right(), plan.n_dprime);
    GluingInstance outer_inst(main, inner_inst.glued(), plan.n0 + plan.n_prime);
    CertifyResult outer = recurse(outer_inst, depth);
    if (!outer.ok()) return with_refusal_context(x, outer);
    return make_cert(x, Split{SplitKind::line2, plan, base_leaf(inner_inst), outer.certificate()}, label);
  }

  CertifyResult split_line1(const GluingInstance& x, Int depth) {
    const CurveSpec& c1 = x.left();
    Int r = x.r();
    Int degree_drop = mutant(Mutant::line1_piece_degree) ? 2 : 1;
    CurveSpec main(c1.d() - degree_drop, c1.g(), r);
    CurveSpec off = line(r);
    SplitPlan plan{c1, main, off, mutant(Mutant::line1_n0_two) ? 2 : 1, x.n() - 2, 2};
    GluingInstance inner_inst(off, x.right(), plan.n_dprime);
    Int outer_n = mutant(Mutant::line1_outer_n_wrong) ? x.n() : plan.n0 + plan.n_prime;
    GluingInstance outer_inst(main, inner_inst.glued(), outer_n);
    CertifyResult outer = recurse(outer_inst, depth);
    if (!outer.ok()) return with_refusal_context(x, outer);
    return make_cert(x, Split{SplitKind::line1, plan, base_leaf(inner_inst), outer.certificate()},
                     case_id::kLine1);
  }

  // Rational normal curve split on side 1 (lln case B).
  CertifyResult split_rnc(const GluingInstance& x, Int depth) {
    const CurveSpec& c1 = x.left();
    Int r = x.r();
    CurveSpec main = rational_normal_curve(r);
    CurveSpec off(c1.d() - r, c1.g() - r, r);
    Int n0 = mutant(Mutant::case_b_n0_r) ? r : r + 1;
    Int n_prime = mutant(Mutant::case_b_nprime_two) ? 2 : 1;
    SplitPlan plan{c1, main, off, n0, n_prime, x.n() - 1};
    GluingInstance inner_inst(off, x.right(), plan.n_dprime);
    CertifyResult inner = recurse(inner_inst, depth);
    if (!inner.ok()) return with_refusal_context(x, inner);
    GluingInstance outer_inst(main, inner_inst.glued(), plan.n0 + plan.n_prime);
    return make_cert(x, Split{SplitKind::rnc, plan, inner.certificate(), base_leaf(outer_inst)}, case_id::kCaseB);
  }

  bool case_a_applies(const CurveSpec& lo, Int n) const {
    Int r = lo.r();
    if (lo.g() < 1) return false;
    Int lhs = detail::mul(r - 1, n);
    Int bound = detail::add(detail::mul(4, lo.g()), r * r + 2 * r - 7);
    if (mutant(Mutant::case_a_threshold_loose)) bound += 1;
    bool strict = (lo.g() == 3 && (r == 3 || r == 5)) && !mutant(Mutant::case_a_skip_strictness);
    bool by_margin = strict ? lhs < bound : lhs <= bound;
    if (opt_.mutant == Mutant::none) {
      detail::require_consistent(by_margin, passes_through(CurveSpec(lo.d() - 1, lo.g() - 1, r), n), "case A");
    }
    return by_margin;
  }

  bool case_b_applies(const CurveSpec& hi, Int n) const {
    Int r = hi.r();
    if (hi.g() < r) return false;
    Int lhs = detail::mul(r - 1, n);
    Int bound = detail::add(detail::mul(4, hi.g()), r * r - r - 4);
    bool strict = (hi.g() == 5 && r == 3) || (hi.g() == 7 && r == 5);
    bool by_margin = strict ? lhs < bound : lhs <= bound;
    if (opt_.mutant == Mutant::none) {
      detail::require_consistent(by_margin, passes_through(CurveSpec(hi.d() - r, hi.g() - r, r), n - 1), "case B");
    }
    return by_margin;
  }

  bool line1_applies(const CurveSpec& s, Int n) const {
    if (!s.is_nns_range() || s.is_limit_linearly_normal()) return false;
    bool strict = detail::is_line_split_strict_class(s) && !mutant(Mutant::line1_skip_strictness);
    bool by_margin = margin(s, n) >= (strict ? 3 : 2);
    if (opt_.mutant == Mutant::none) {
      detail::require_consistent(by_margin, passes_through(CurveSpec(s.d() - 1, s.g(), s.r()), n - 1), "line split");
    }
    return by_margin;
  }

  bool line2_applies(const CurveSpec& s, const CurveSpec& other, Int n) const {
    if (!s.is_limit_linearly_normal() || other.is_limit_linearly_normal() || s.g() < 1) return false;
    bool strict = detail::is_genus_drop_strict_class(s);
    bool by_margin = margin(s, n) >= (strict ? 5 : 4);
    if (opt_.mutant == Mutant::none) {
      detail::require_consistent(by_margin, passes_through(CurveSpec(s.d() - 1, s.g() - 1, s.r()), n),
                                 "genus-drop split");
    }
    return by_margin;
  }

  // Label for a swap that moves the degeneration to side 2 in the non-lln
  // branch. Equality at the exceptional classes is what forces the move.
  static const char* exchange_label(const GluingInstance& x) {
    const CurveSpec& s = x.left();
    if (detail::is_genus_drop_strict_class(s) && margin(s, x.n()) == 4) return case_id::kSwapEqualityN10;
    if (detail::is_line_split_strict_class(s) && margin(s, x.n()) == 2) return case_id::kSwapEqualityN11;
    return case_id::kSwapExchange;
  }

  CertifyResult dispatch(const GluingInstance& x, Int depth) {
    Int r = x.r();
    Int base_bound = mutant(Mutant::base_threshold_r_plus_3) ? r + 3 : r + 2;
    if (x.n() <= base_bound) return base_leaf(x);

    const CurveSpec& c1 = x.left();
    const CurveSpec& c2 = x.right();
    if (c1.is_limit_linearly_normal() && c2.is_limit_linearly_normal()) {
      bool lo_is_left = mutant(Mutant::skip_swap_normalization) || c1.g() <= c2.g();
      const CurveSpec& lo = lo_is_left ? c1 : c2;
      const CurveSpec& hi = lo_is_left ? c2 : c1;
      if (case_a_applies(lo, x.n())) {
        bool keep = mutant(Mutant::case_a_keep_genus);
        Int n0 = mutant(Mutant::case_a_n0_three) ? 3 : 2;
        if (lo_is_left) return split_line_genus_drop(x, depth, case_id::kCaseA, keep, n0);
        return swap_of(x, split_line_genus_drop(x.swapped(), depth, case_id::kCaseA, keep, n0),
                       case_id::kSwapNormalize);
      }
      if (case_b_applies(hi, x.n())) {
        if (!lo_is_left) return split_rnc(x, depth);
        return swap_of(x, split_rnc(x.swapped(), depth), case_id::kSwapCaseB);
      }
      return Refusal{x, "no dispatch arm applies (both sides limit linearly normal)", std::nullopt};
    }

    if (line1_applies(c1, x.n())) return split_line1(x, depth);
    if (line1_applies(c2, x.n())) return swap_of(x, split_line1(x.swapped(), depth), exchange_label(x));
    bool keep = mutant(Mutant::case4_keep_genus);
    if (line2_applies(c1, c2, x.n())) return split_line_genus_drop(x, depth, case_id::kLine2, keep, 2);
    if (line2_applies(c2, c1, x.n())) {
      return swap_of(x, split_line_genus_drop(x.swapped(), depth, case_id::kLine2, keep, 2), exchange_label(x));
    }
    return Refusal{x, "no dispatch arm applies", std::nullopt};
  }

  CertifyOptions opt_;
  std::unordered_map<detail::GluingKey, CertifyResult, detail::GluingKeyHash> memo_;
};

inline CertifyResult certify_main(const GluingInstance& x, CertifyOptions options = {}) {
  MainCertifier c(options);
  return c.certify(x);
}

// Attaching a rational curve of degree a at a+2 points. The recursion lowers
// the degree at every step.
inline CertifyResult certify_small_mid(const SmallMidQuery& q) {
  Verdict v = check_small_mid(q);
  if (!v.passed()) return Refusal{q, "small-mid hypotheses fail", std::move(v)};
  const CurveSpec& s = q.spec();
  Int r = s.r(), d = s.d(), g = s.g(), a = q.a();
  Int p = rho(s);
  using detail::add;
  using detail::mul;
  using detail::sub;
  if (a == r) {
    return make_cert(q, LemmaLeaf{lemma_tag::kTop, {check_eq("degree of attached curve", "a", a, "r", r)}},
                     case_id::kMidTop);
  }
  if (p >= r + 1) {
    std::vector<Check> side{
        check_ge("rho above r", "rho", p, "r+1", add(r, 1)),
        check_ge("attached degree below r", "r-1", sub(r, 1), "a", a),
        check_ge("half-dimension bound", "2a+2", add(mul(2, a), 2), "r", r),
    };
    return make_cert(q, LemmaLeaf{lemma_tag::kRhoLarge, std::move(side)}, case_id::kMidRhoLarge);
  }
  auto reduce_to = [&](CurveSpec child, const char* label, std::vector<Check> side) -> CertifyResult {
    CertifyResult sub_result = certify_small_mid(SmallMidQuery(child, a));
    if (!sub_result.ok()) return Refusal{q, "sub-certificate refused: " + sub_result.refusal().reason, std::nullopt};
    return make_cert(q, Reduce{{sub_result.certificate()}, std::move(side)}, label);
  };
  if (g >= r + 1) {
    CurveSpec child(d - r, g - r - 1, r);
    return reduce_to(child, case_id::kMidGenusLarge,
                     {check_eq("rho preserved", "rho(d-r,g-r-1,r)", rho(child), "rho(d,g,r)", p)});
  }
  if (p >= 1 && g >= 1 && a >= r + 1 - p) {
    CurveSpec child(d - 1, g - 1, r);
    return reduce_to(child, case_id::kMidStep,
                     {check_eq("rho drops by one", "rho(d-1,g-1,r)", rho(child), "rho(d,g,r)-1", p - 1)});
  }
  if (d == 2 * r - a && g == r - a) {
    std::vector<Check> side{check_ge("half-dimension bound", "2a+2", add(mul(2, a), 2), "r", r)};
    return make_cert(q, LemmaLeaf{lemma_tag::kDualizing, std::move(side)}, case_id::kMidCompletion);
  }
  return Refusal{q, "no small-mid arm applies", std::nullopt};
}

namespace detail {

inline CertPtr wbn_leaf(const GluingInstance& x) { return make_cert(x, BaseMainSp{check_main_sp(x)}, case_id::kBase); }

inline CertifyResult certify_small_hyp_impl(const HyperplaneInstance& inst, Int depth, Int max_depth);

inline CertifyResult hyp_child(const HyperplaneInstance& child, Int depth, Int max_depth) {
  return certify_small_hyp_impl(child, depth + 1, max_depth);
}

inline CertifyResult certify_small_hyp_impl(const HyperplaneInstance& inst, Int depth, Int max_depth) {
  if (depth > max_depth) return Refusal{inst, "recursion depth guard exceeded", std::nullopt};
  Verdict v = check_small_hyp(inst);
  if (!v.passed()) return Refusal{inst, "small-hyp hypotheses fail", std::move(v)};
  const CurveSpec& c = inst.inner();
  const CurveSpec& h = inst.hyper();
  Int r = inst.r(), n = inst.n();
  Int d1 = c.d(), g1 = c.g(), d2 = h.d(), g2 = h.g();
  bool hyper_wide = d2 >= g2 + r - 1;

  auto reduce = [&](std::vector<CertifyResult> kids, std::vector<Check> side, const char* label) -> CertifyResult {
    std::vector<CertPtr> children;
    for (auto& k : kids) {
      if (!k.ok()) return Refusal{inst, "sub-certificate refused: " + k.refusal().reason, std::nullopt};
      children.push_back(k.certificate());
    }
    return make_cert(inst, Reduce{std::move(children), std::move(side)}, label);
  };

  if (hyper_wide && n <= r - 1) {
    return reduce({wbn_leaf(inst.as_gluing())}, {}, case_id::kHypDegenerate);
  }
  if (d1 >= g1 + r && hyper_wide) {
    if (g1 == 0) return make_cert(inst, BaseMainHyp{check_main_hyp(inst)}, case_id::kHypMainHyp);
    CurveSpec main_piece(d1 - 1, g1 - 1, r);
    GluingInstance child(main_piece, CurveSpec(d2 + 1, g2, r), n + 1);
    std::vector<Check> side{
        check_ge("brill-noether number of lowered curve", "rho(d'-1,g'-1,r)", rho(main_piece), "0", 0),
        check_ge("lemma divisor degree", "r+3-(n-1)", r + 3 - (n - 1), "m", 2),
    };
    return reduce({certify_main(child)}, std::move(side), case_id::kHypMain);
  }
  if (hyper_wide) {
    if (n <= r) return reduce({wbn_leaf(inst.as_gluing())}, {}, case_id::kHypSmallN);
    if (n == r + 1 && d2 == r - 1) {
      return reduce({certify_small_mid(SmallMidQuery(c, r - 1))}, {}, case_id::kHypMid);
    }
    if (rho(c) < 0) return Refusal{inst, "inner curve class has negative rho", std::nullopt};
    CurveSpec rnc_h(r - 1, 0, r - 1);
    if (n == r + 2 && d2 == r - 1) {
      if (g1 - r < 0 || d1 - r < 1 || rho(d1 - r, g1 - r, r) < 1) {
        return Refusal{inst, "exceptional split piece unavailable", std::nullopt};
      }
      CurveSpec c0(d1 - r, g1 - r, r);
      GluingInstance first(c0, rational_normal_curve(r), r + 1);
      HyperplaneInstance middle(c0, h, n - 1);
      GluingInstance last(middle.glued(), rational_normal_curve(r), r + 2);
      std::vector<Check> side{check_ge("brill-noether number of split piece", "rho(d'-r,g'-r,r)", rho(c0), "1", 1)};
      return reduce({wbn_leaf(first), hyp_child(middle, depth, max_depth), wbn_leaf(last)}, std::move(side),
                    case_id::kHypExceptional);
    }
    if (g1 - r < 0 || d1 - r + 1 < 1) return Refusal{inst, "rational curve split piece unavailable", std::nullopt};
    CurveSpec c0(d1 - r + 1, g1 - r, r);
    HyperplaneInstance first(c0, rnc_h, r + 1);
    HyperplaneInstance middle(c0, h, n - 1);
    HyperplaneInstance last(middle.glued(), rnc_h, r + 2);
    return reduce({hyp_child(first, depth, max_depth), hyp_child(middle, depth, max_depth),
                   hyp_child(last, depth, max_depth)},
                  {}, case_id::kHypGeneral);
  }
  if (rho(h) < 0 || g2 < r) return Refusal{inst, "hyperplane curve cannot be split", std::nullopt};
  CurveSpec d0(d2 - r + 1, g2 - r, r - 1);
  CurveSpec rnc_h(r - 1, 0, r - 1);
  GluingInstance in_h(d0, rnc_h, r + 1);
  HyperplaneInstance middle(c, d0, n);
  HyperplaneInstance last(middle.glued(), rnc_h, r + 1);
  std::vector<Check> side{
      check_ge("hyperplane curve admits deformation", "d''-g''+1+n", d2 - g2 + 1 + n, "r+1", r + 1)};
  return reduce({wbn_leaf(in_h), hyp_child(middle, depth, max_depth), hyp_child(last, depth, max_depth)},
                std::move(side), case_id::kHypHyperSplit);
}

}  // namespace detail

// A curve in P^r glued to a curve in a hyperplane. Recursion lowers d'' and
// then n; the main and small-mid certifiers are called as sub-steps.
inline CertifyResult certify_small_hyp(const HyperplaneInstance& inst, CertifyOptions options = {}) {
  try {
    return detail::certify_small_hyp_impl(inst, 0, options.max_depth);
  } catch (const DomainError& e) {
    return Refusal{inst, std::string("internal domain error: ") + e.what(), std::nullopt};
  }
}

}  // namespace bnglue

#endif  // BNGLUE_CERTIFIER_HPP_
