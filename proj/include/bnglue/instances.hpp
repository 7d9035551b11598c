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

// Instance types for the gluing theorems and the Check/Verdict records that
// the hypothesis checkers and the verifier produce.

#ifndef BNGLUE_INSTANCES_HPP_
#define BNGLUE_INSTANCES_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bnglue/numerics.hpp"

namespace bnglue {

// Two curves in the same P^r glued at n general points.
class GluingInstance {
 public:
  GluingInstance(CurveSpec left, CurveSpec right, Int n) : left_(left), right_(right), n_(n) {
    if (left.r() != right.r()) throw DomainError("gluing instance requires left.r == right.r");
    if (n < 1) throw DomainError("gluing instance requires n >= 1");
  }

  const CurveSpec& left() const { return left_; }
  const CurveSpec& right() const { return right_; }
  Int n() const { return n_; }
  Int r() const { return left_.r(); }
  const CurveSpec& side(int i) const { return i == 1 ? left_ : right_; }

  GluingInstance swapped() const { return GluingInstance(right_, left_, n_); }
  CurveSpec glued() const { return glue(left_, right_, n_); }
  Int total_degree() const { return detail::add(left_.d(), right_.d()); }

  friend bool operator==(const GluingInstance&, const GluingInstance&) = default;

 private:
  CurveSpec left_;
  CurveSpec right_;
  Int n_;
};

// A curve C in P^r and a curve D inside a hyperplane H = P^{r-1}, glued at n
// general points of H.
class HyperplaneInstance {
 public:
  HyperplaneInstance(CurveSpec inner, CurveSpec hyper, Int n) : inner_(inner), hyper_(hyper), n_(n) {
    if (inner.r() != detail::add(hyper.r(), 1)) throw DomainError("hyperplane instance requires inner.r == hyper.r + 1");
    if (n < 1) throw DomainError("hyperplane instance requires n >= 1");
  }

  const CurveSpec& inner() const { return inner_; }
  const CurveSpec& hyper() const { return hyper_; }
  Int n() const { return n_; }
  Int r() const { return inner_.r(); }

  // D regarded as a curve in P^r.
  CurveSpec hyper_in_ambient() const { return with_ambient(hyper_, inner_.r()); }
  CurveSpec glued() const { return glue(inner_, hyper_in_ambient(), n_); }
  GluingInstance as_gluing() const { return GluingInstance(inner_, hyper_in_ambient(), n_); }

  friend bool operator==(const HyperplaneInstance&, const HyperplaneInstance&) = default;

 private:
  CurveSpec inner_;
  CurveSpec hyper_;
  Int n_;
};

// A curve C together with the degree a of a rational curve to be attached at
// a + 2 points.
class SmallMidQuery {
 public:
  SmallMidQuery(CurveSpec spec, Int a) : spec_(spec), a_(a) {
    if (a < 0 || a > spec.r()) throw DomainError("small-mid query requires 0 <= a <= r");
  }

  const CurveSpec& spec() const { return spec_; }
  Int a() const { return a_; }

  friend bool operator==(const SmallMidQuery&, const SmallMidQuery&) = default;

 private:
  CurveSpec spec_;
  Int a_;
};

using Instance = std::variant<GluingInstance, SmallMidQuery, HyperplaneInstance>;

inline std::string to_string(const GluingInstance& x) {
  return "(" + to_string(x.left()) + ", " + to_string(x.right()) + ", n=" + std::to_string(x.n()) + ")";
}
inline std::string to_string(const HyperplaneInstance& x) {
  return "(" + to_string(x.inner()) + ", H:" + to_string(x.hyper()) + ", n=" + std::to_string(x.n()) + ")";
}
inline std::string to_string(const SmallMidQuery& x) {
  return "(" + to_string(x.spec()) + ", a=" + std::to_string(x.a()) + ")";
}
inline std::string to_string(const Instance& x) {
  return std::visit([](const auto& v) { return to_string(v); }, x);
}

// One inequality with its concrete values. slack >= 0 means it holds; strict
// inequalities are shifted by one so that the same rule applies.
struct Check {
  std::string label;
  std::string inequality;
  Int slack = 0;

  bool holds() const { return slack >= 0; }
  friend bool operator==(const Check&, const Check&) = default;
};

inline Check check_ge(std::string label, const std::string& lhs_text, Int lhs, const std::string& rhs_text, Int rhs) {
  return Check{std::move(label),
               lhs_text + " = " + std::to_string(lhs) + " >= " + rhs_text + " = " + std::to_string(rhs),
               detail::sub(lhs, rhs)};
}

inline Check check_gt(std::string label, const std::string& lhs_text, Int lhs, const std::string& rhs_text, Int rhs) {
  return Check{std::move(label),
               lhs_text + " = " + std::to_string(lhs) + " > " + rhs_text + " = " + std::to_string(rhs),
               detail::sub(detail::sub(lhs, rhs), 1)};
}

inline Check check_eq(std::string label, const std::string& lhs_text, Int lhs, const std::string& rhs_text, Int rhs) {
  Int gap = lhs > rhs ? detail::sub(lhs, rhs) : detail::sub(rhs, lhs);
  return Check{std::move(label),
               lhs_text + " = " + std::to_string(lhs) + " == " + rhs_text + " = " + std::to_string(rhs),
               detail::sub(0, gap)};
}

inline Check check_flag(std::string label, std::string description, bool ok) {
  return Check{std::move(label), std::move(description) + (ok ? " holds" : " fails"), ok ? 0 : -1};
}

enum class Outcome { pass, fail };
enum class Conclusion { bn, wbn, none };

inline const char* to_string(Outcome o) { return o == Outcome::pass ? "pass" : "fail"; }
inline const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::bn: return "BN";
    case Conclusion::wbn: return "WBN";
    case Conclusion::none: return "none";
  }
  return "none";
}

struct Verdict {
  Outcome outcome = Outcome::fail;
  std::vector<Check> checks;
  Conclusion conclusion = Conclusion::none;
  // For one-sided theorems, the side (1 or 2) that carries the inequality.
  std::optional<int> witness_side;

  bool passed() const { return outcome == Outcome::pass; }

  // outcome is a pure function of the slacks.
  static Verdict from_checks(std::vector<Check> checks, Conclusion on_pass, std::optional<int> witness = std::nullopt) {
    Verdict v;
    bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds(); });
    v.outcome = ok ? Outcome::pass : Outcome::fail;
    v.conclusion = ok ? on_pass : Conclusion::none;
    v.witness_side = ok ? witness : std::nullopt;
    v.checks = std::move(checks);
    return v;
  }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace bnglue

#endif  // BNGLUE_INSTANCES_HPP_
