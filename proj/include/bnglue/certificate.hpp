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

// Immutable proof trees. Internal nodes are degeneration steps (line split,
// rational-normal-curve split, index swap, reduction); leaves are base
// theorem applications or named lemma applications.

#ifndef BNGLUE_CERTIFICATE_HPP_
#define BNGLUE_CERTIFICATE_HPP_

#include <algorithm>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "bnglue/instances.hpp"
#include "bnglue/numerics.hpp"

namespace bnglue {

// Side 1 (parent) of a gluing instance degenerates to piece_main and
// piece_off meeting at n0 points; n_prime of the original nodes stay on
// piece_main and n_dprime move to piece_off.
struct SplitPlan {
  CurveSpec parent;
  CurveSpec piece_main;
  CurveSpec piece_off;
  Int n0 = 0;
  Int n_prime = 0;
  Int n_dprime = 0;

  friend bool operator==(const SplitPlan&, const SplitPlan&) = default;
};

enum class SplitKind { line1, line2, rnc };

inline const char* to_string(SplitKind k) {
  switch (k) {
    case SplitKind::line1: return "split-line1";
    case SplitKind::line2: return "split-line2";
    case SplitKind::rnc: return "split-rnc";
  }
  return "split-line1";
}

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

struct BaseMainSp {
  Verdict verdict;
};
struct BaseMainHyp {
  Verdict verdict;
};
struct Split {
  SplitKind kind = SplitKind::line1;
  SplitPlan plan;
  CertPtr inner;
  CertPtr outer;
};
struct Swap {
  CertPtr child;
};
struct LemmaLeaf {
  std::string tag;
  std::vector<Check> side_conditions;
};
struct Reduce {
  std::vector<CertPtr> children;
  std::vector<Check> side_conditions;
};

using Node = std::variant<BaseMainSp, BaseMainHyp, Split, Swap, LemmaLeaf, Reduce>;

struct Certificate {
  Instance instance;
  Node node;
  std::string case_id;
};

// Deep structural equality (children compared by value, not by pointer).
bool operator==(const Certificate& a, const Certificate& b);

inline bool deep_equal(const CertPtr& a, const CertPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

inline bool operator==(const BaseMainSp& a, const BaseMainSp& b) { return a.verdict == b.verdict; }
inline bool operator==(const BaseMainHyp& a, const BaseMainHyp& b) { return a.verdict == b.verdict; }
inline bool operator==(const Split& a, const Split& b) {
  return a.kind == b.kind && a.plan == b.plan && deep_equal(a.inner, b.inner) && deep_equal(a.outer, b.outer);
}
inline bool operator==(const Swap& a, const Swap& b) { return deep_equal(a.child, b.child); }
inline bool operator==(const LemmaLeaf& a, const LemmaLeaf& b) {
  return a.tag == b.tag && a.side_conditions == b.side_conditions;
}
inline bool operator==(const Reduce& a, const Reduce& b) {
  return a.side_conditions == b.side_conditions &&
         std::equal(a.children.begin(), a.children.end(), b.children.begin(), b.children.end(), deep_equal);
}

inline bool operator==(const Certificate& a, const Certificate& b) {
  return a.case_id == b.case_id && a.instance == b.instance && a.node == b.node;
}

inline const char* node_name(const Node& n) {
  struct V {
    const char* operator()(const BaseMainSp&) const { return "base-main-sp"; }
    const char* operator()(const BaseMainHyp&) const { return "base-main-hyp"; }
    const char* operator()(const Split& s) const { return to_string(s.kind); }
    const char* operator()(const Swap&) const { return "swap"; }
    const char* operator()(const LemmaLeaf&) const { return "lemma"; }
    const char* operator()(const Reduce&) const { return "reduce"; }
  };
  return std::visit(V{}, n);
}

// Recursion depth. Swap nodes are transparent: they relabel an instance
// without a proof step.
inline Int depth(const Certificate& c) {
  if (const auto* s = std::get_if<Split>(&c.node)) return 1 + std::max(depth(*s->inner), depth(*s->outer));
  if (const auto* w = std::get_if<Swap>(&c.node)) return depth(*w->child);
  if (const auto* r = std::get_if<Reduce>(&c.node)) {
    Int best = 0;
    for (const auto& ch : r->children) best = std::max(best, depth(*ch));
    return 1 + best;
  }
  return 1;
}

inline Int node_count(const Certificate& c) {
  if (const auto* s = std::get_if<Split>(&c.node)) return 1 + node_count(*s->inner) + node_count(*s->outer);
  if (const auto* w = std::get_if<Swap>(&c.node)) return 1 + node_count(*w->child);
  if (const auto* r = std::get_if<Reduce>(&c.node)) {
    Int total = 1;
    for (const auto& ch : r->children) total += node_count(*ch);
    return total;
  }
  return 1;
}

// Well-founded measure for the gluing recursion: total degree, then node
// count, then the least genus over limit-linearly-normal sides (a sentinel
// when neither side is limit linearly normal).
struct Metric {
  static constexpr Int kNoLlnSide = std::numeric_limits<Int>::max();

  Int total_degree = 0;
  Int n = 0;
  Int lln_genus = kNoLlnSide;

  friend auto operator<=>(const Metric&, const Metric&) = default;
};

inline Metric gluing_metric(const GluingInstance& x) {
  Metric m{x.total_degree(), x.n(), Metric::kNoLlnSide};
  for (int i = 1; i <= 2; ++i) {
    if (x.side(i).is_limit_linearly_normal()) m.lln_genus = std::min(m.lln_genus, x.side(i).g());
  }
  return m;
}

inline std::string to_string(const Metric& m) {
  return "(" + std::to_string(m.total_degree) + "," + std::to_string(m.n) + "," +
         (m.lln_genus == Metric::kNoLlnSide ? std::string("inf") : std::to_string(m.lln_genus)) + ")";
}

// Case labels recorded on certificate nodes.
namespace case_id {
inline constexpr const char* kBase = "base: n <= r+2";
inline constexpr const char* kCaseA = "lln case A: line split lowering genus";
inline constexpr const char* kCaseB = "lln case B: rational normal curve split";
inline constexpr const char* kLine1 = "line split off non-lln side";
inline constexpr const char* kLine2 = "line split with genus drop on lln side";
inline constexpr const char* kSwapNormalize = "swap: order by genus";
inline constexpr const char* kSwapCaseB = "swap: larger genus first";
inline constexpr const char* kSwapExchange = "swap: exchange indices";
inline constexpr const char* kSwapEqualityN10 = "swap: exceptional equality n = 10";
inline constexpr const char* kSwapEqualityN11 = "swap: exceptional equality n = 11";

inline constexpr const char* kMidTop = "small-mid: a = r";
inline constexpr const char* kMidRhoLarge = "small-mid: rho >= r+1";
inline constexpr const char* kMidGenusLarge = "small-mid: g >= r+1";
inline constexpr const char* kMidStep = "small-mid: lower degree and genus";
inline constexpr const char* kMidCompletion = "small-mid: completion (d,g) = (2r-a, r-a)";

inline constexpr const char* kHypDegenerate = "small-hyp: degenerate, n <= r-1";
inline constexpr const char* kHypMainHyp = "small-hyp: nns inner curve of genus 0";
inline constexpr const char* kHypMain = "small-hyp: nns inner curve, line split";
inline constexpr const char* kHypSmallN = "small-hyp: special inner curve, n <= r";
inline constexpr const char* kHypMid = "small-hyp: special inner curve, n = r+1, rational normal hyperplane curve";
inline constexpr const char* kHypExceptional = "small-hyp: special inner curve, n = r+2, rational normal hyperplane curve";
inline constexpr const char* kHypGeneral = "small-hyp: special inner curve, rational curve split";
inline constexpr const char* kHypHyperSplit = "small-hyp: special hyperplane curve split";
}  // namespace case_id

namespace lemma_tag {
inline constexpr const char* kTop = "attach rational normal curve through r+2 points";
inline constexpr const char* kRhoLarge = "construction from (d-1, g) with rho >= r+1";
inline constexpr const char* kDualizing = "dualizing-sheaf construction";
}  // namespace lemma_tag

// Why a certifier declined to produce a certificate.
struct Refusal {
  Instance instance;
  std::string reason;
  std::optional<Verdict> verdict;

  friend bool operator==(const Refusal&, const Refusal&) = default;
};

// Either a certificate or a refusal.
class CertifyResult {
 public:
  CertifyResult(CertPtr cert) : value_(std::move(cert)) {}  // NOLINT(runtime/explicit)
  CertifyResult(Refusal refusal) : value_(std::move(refusal)) {}  // NOLINT(runtime/explicit)

  bool ok() const { return std::holds_alternative<CertPtr>(value_); }
  const CertPtr& certificate() const { return std::get<CertPtr>(value_); }
  const Refusal& refusal() const { return std::get<Refusal>(value_); }

 private:
  std::variant<CertPtr, Refusal> value_;
};

inline CertPtr make_cert(Instance instance, Node node, std::string case_id) {
  return std::make_shared<const Certificate>(Certificate{std::move(instance), std::move(node), std::move(case_id)});
}

}  // namespace bnglue

#endif  // BNGLUE_CERTIFICATE_HPP_
