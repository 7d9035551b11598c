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

// Exact integer arithmetic for curve classes (d, g, r) in projective space:
// Brill-Noether number, interpolation capacity, margins, and gluing.

#ifndef BNGLUE_NUMERICS_HPP_
#define BNGLUE_NUMERICS_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace bnglue {

using Int = std::int64_t;

// Raised when an operation is called outside its arithmetic domain. The
// message names the violated precondition.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

inline Int add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

inline Int sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in subtraction");
  return out;
}

inline Int mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

// Floor division toward negative infinity.
inline Int floor_div(Int num, Int den) {
  if (den == 0) throw DomainError("division by zero");
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace detail

// A class of curves of degree d and genus g in P^r. Role flags (NNS range,
// degenerate nonspecial range, limit linearly normal) are derived on demand.
class CurveSpec {
 public:
  CurveSpec(Int d, Int g, Int r) : d_(d), g_(g), r_(r) {
    if (d < 1) throw DomainError("curve degree must satisfy d >= 1");
    if (g < 0) throw DomainError("curve genus must satisfy g >= 0");
    if (r < 1) throw DomainError("ambient dimension must satisfy r >= 1");
  }

  Int d() const { return d_; }
  Int g() const { return g_; }
  Int r() const { return r_; }

  // Nondegenerate nonspecial range: d >= g + r.
  bool is_nns_range() const { return d_ >= detail::add(g_, r_); }
  // Nonspecial but forced into a proper linear span: g <= d < g + r.
  bool is_degenerate_nonspecial_range() const { return g_ <= d_ && d_ < detail::add(g_, r_); }
  // Within the NNS range, limit linear normality means d = g + r exactly.
  bool is_limit_linearly_normal() const { return d_ == detail::add(g_, r_); }

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
  friend auto operator<=>(const CurveSpec&, const CurveSpec&) = default;

 private:
  Int d_;
  Int g_;
  Int r_;
};

inline std::string to_string(const CurveSpec& s) {
  return "(" + std::to_string(s.d()) + "," + std::to_string(s.g()) + "," + std::to_string(s.r()) + ")";
}

// Maximum number of general points a curve class passes through; unbounded
// only in P^1.
class Capacity {
 public:
  static Capacity unbounded() { return Capacity(std::nullopt); }
  static Capacity bounded(Int n_max) {
    if (n_max < 0) throw DomainError("capacity must be nonnegative");
    return Capacity(n_max);
  }

  bool is_unbounded() const { return !value_.has_value(); }
  Int value() const {
    if (!value_) throw std::logic_error("capacity is unbounded");
    return *value_;
  }
  bool admits(Int n) const { return !value_ || n <= *value_; }

  friend bool operator==(const Capacity&, const Capacity&) = default;

 private:
  explicit Capacity(std::optional<Int> v) : value_(v) {}
  std::optional<Int> value_;
};

inline std::string to_string(const Capacity& c) {
  return c.is_unbounded() ? std::string("unbounded") : std::to_string(c.value());
}

// rho(d, g, r) = (r+1)d - r g - r(r+1). May be negative.
inline Int rho(Int d, Int g, Int r) {
  using namespace detail;
  return sub(sub(mul(add(r, 1), d), mul(r, g)), mul(r, add(r, 1)));
}

inline Int rho(const CurveSpec& s) { return rho(s.d(), s.g(), s.r()); }

// The two classes whose interpolation capacity is one below the formula.
inline bool is_exceptional(Int d, Int g, Int r) {
  return (d == 5 && g == 2 && r == 3) || (d == 7 && g == 2 && r == 5);
}

inline bool is_exceptional(const CurveSpec& s) { return is_exceptional(s.d(), s.g(), s.r()); }

// (r+1)d - (r-3)(g-1), the right-hand side of the interpolation inequality.
inline Int interpolation_numerator(const CurveSpec& s) {
  using namespace detail;
  return sub(mul(add(s.r(), 1), s.d()), mul(sub(s.r(), 3), sub(s.g(), 1)));
}

// margin(s, n) = (r+1)d - (r-3)(g-1) - (r-1)n.
inline Int margin(const CurveSpec& s, Int n) {
  if (n < 0) throw DomainError("node count must satisfy n >= 0");
  using namespace detail;
  return sub(interpolation_numerator(s), mul(sub(s.r(), 1), n));
}

// The unadjusted capacity floor(((r+1)d - (r-3)(g-1)) / (r-1)); ignores the
// exceptional override and the degenerate range. Requires r >= 2.
inline Int formula_capacity(const CurveSpec& s) {
  if (s.r() < 2) throw DomainError("formula capacity requires r >= 2");
  return detail::floor_div(interpolation_numerator(s), detail::sub(s.r(), 1));
}

inline Capacity interpolation_capacity(const CurveSpec& s) {
  if (s.d() < s.g()) throw DomainError("interpolation capacity requires d >= g (nonspecial class)");
  if (s.r() == 1) return Capacity::unbounded();
  if (detail::sub(s.d(), s.g()) < s.r()) {
    // The curve spans only P^{d-g}; it meets n general points iff its span does.
    return Capacity::bounded(detail::add(detail::sub(s.d(), s.g()), 1));
  }
  if (is_exceptional(s)) return Capacity::bounded(9);
  return Capacity::bounded(formula_capacity(s));
}

inline bool passes_through(const CurveSpec& s, Int n) {
  if (n < 0) throw DomainError("node count must satisfy n >= 0");
  return interpolation_capacity(s).admits(n);
}

// The class of the union of two curves glued at n general points.
inline CurveSpec glue(const CurveSpec& left, const CurveSpec& right, Int n) {
  if (left.r() != right.r()) throw DomainError("glued curves must share the ambient dimension r");
  if (n < 1) throw DomainError("gluing requires n >= 1 nodes");
  using namespace detail;
  return CurveSpec(add(left.d(), right.d()), sub(add(add(left.g(), right.g()), n), 1), left.r());
}

// The same curve viewed in a space of different dimension (e.g. a curve in a
// hyperplane H = P^{r-1} regarded inside P^r).
inline CurveSpec with_ambient(const CurveSpec& s, Int r) { return CurveSpec(s.d(), s.g(), r); }

inline CurveSpec line(Int r) { return CurveSpec(1, 0, r); }
inline CurveSpec rational_normal_curve(Int r) { return CurveSpec(r, 0, r); }

}  // namespace bnglue

#endif  // BNGLUE_NUMERICS_HPP_
