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

// Exhaustive grid audits of the main-theorem dispatch: case coverage for
// limit-linearly-normal pairs, certify/check agreement with verification of
// every certificate, and termination of the recursion.
//
// Work is split into cells (r, d1) and spread over BNGLUE_THREADS threads
// (default: hardware concurrency). Cells are merged in canonical order, so
// reports do not depend on the thread count.

#ifndef BNGLUE_AUDIT_HPP_
#define BNGLUE_AUDIT_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bnglue/certificate.hpp"
#include "bnglue/certifier.hpp"
#include "bnglue/hypotheses.hpp"
#include "bnglue/numerics.hpp"
#include "bnglue/verifier.hpp"

namespace bnglue {

// Bounds for enumeration. g_cap bounds each side's genus and d_cap the total
// degree; a nonpositive cap means "no cap" (coverage only; agreement needs
// d_cap). fixed_n restricts to a single node count.
struct AuditGrid {
  Int r_min = 3;
  Int r_max = 8;
  Int g_cap = 0;
  Int d_cap = 40;
  Int fixed_n = 0;

  bool empty() const { return r_min > r_max; }
};

struct AuditFinding {
  GluingInstance instance;
  std::string detail;

  friend bool operator==(const AuditFinding&, const AuditFinding&) = default;
};

struct AuditReport {
  std::string kind;
  Int instances_checked = 0;
  Int certified = 0;
  Int contrapositive_checked = 0;
  Int edges_checked = 0;
  Int max_depth = 0;
  std::vector<AuditFinding> gaps;
  std::vector<AuditFinding> disagreements;
  double wall_time_seconds = 0.0;

  bool passed() const { return gaps.empty() && disagreements.empty(); }

  void merge(AuditReport&& other) {
    instances_checked += other.instances_checked;
    certified += other.certified;
    contrapositive_checked += other.contrapositive_checked;
    edges_checked += other.edges_checked;
    max_depth = std::max(max_depth, other.max_depth);
    for (auto& g : other.gaps) gaps.push_back(std::move(g));
    for (auto& d : other.disagreements) disagreements.push_back(std::move(d));
  }
};

// Thread count from BNGLUE_THREADS, clamped to [1, 256].
inline unsigned audit_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BNGLUE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) n = static_cast<unsigned>(std::min(v, 256L));
  }
  return n;
}

namespace detail {

// Runs fn(cell_index, worker_state) for every cell and returns the per-cell
// reports in cell order. Each worker owns one State.
template <typename State, typename Fn>
std::vector<AuditReport> run_cells(std::size_t cells, Fn fn) {
  std::vector<AuditReport> out(cells);
  unsigned threads = std::min<unsigned>(audit_threads(), static_cast<unsigned>(std::max<std::size_t>(cells, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    State state;
    for (std::size_t i = next++; i < cells; i = next++) out[i] = fn(i, state);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

inline AuditReport merge_cells(std::string kind, std::vector<AuditReport> cells,
                               std::chrono::steady_clock::time_point start) {
  AuditReport total;
  total.kind = std::move(kind);
  for (auto& c : cells) total.merge(std::move(c));
  total.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

// Which of base / case A / case B applies to a pair of limit-linearly-normal
// curves after ordering by genus. Computed from the displayed inequalities
// directly, independent of the certifier.
enum class LlnArm { base, case_a, case_b, none };

inline LlnArm classify_lln(Int g1, Int g2, Int r, Int n) {
  if (n <= r + 2) return LlnArm::base;
  Int lo = std::min(g1, g2), hi = std::max(g1, g2);
  Int lhs = mul(r - 1, n);
  Int bound_a = 4 * lo + r * r + 2 * r - 7;
  bool strict_a = lo == 3 && (r == 3 || r == 5);
  if (lo >= 1 && (strict_a ? lhs < bound_a : lhs <= bound_a)) return LlnArm::case_a;
  Int bound_b = 4 * hi + r * r - r - 4;
  bool strict_b = (hi == 5 && r == 3) || (hi == 7 && r == 5);
  if (hi >= r && (strict_b ? lhs < bound_b : lhs <= bound_b)) return LlnArm::case_b;
  return LlnArm::none;
}

struct CertState {
  MainCertifier certifier;
  Verifier verifier{true};
  std::unordered_set<const Certificate*> edges_done;
  Int current_r = -1;
  bool configured = false;

  void reset_for(Int r) {
    if (r == current_r) return;
    // Caches key on node addresses, so they are dropped with the memo.
    verifier = Verifier(true);
    edges_done.clear();
    certifier.clear();
    current_r = r;
  }
};

// Checks the metric on every edge below c not yet visited by this worker.
inline void check_edges(const Certificate& c, CertState& st, AuditReport& rep, const GluingInstance& root) {
  if (!st.edges_done.insert(&c).second) return;
  const auto* x = std::get_if<GluingInstance>(&c.instance);
  if (const auto* s = std::get_if<Split>(&c.node)) {
    const auto* in = std::get_if<GluingInstance>(&s->inner->instance);
    const auto* out = std::get_if<GluingInstance>(&s->outer->instance);
    if (x && in && !std::holds_alternative<BaseMainSp>(s->inner->node)) {
      ++rep.edges_checked;
      if (in->total_degree() >= x->total_degree()) {
        rep.disagreements.push_back({root, "inner edge does not lower total degree at " + to_string(*x)});
      }
    }
    if (x && out && !std::holds_alternative<BaseMainSp>(s->outer->node)) {
      ++rep.edges_checked;
      if (!(gluing_metric(*out) < gluing_metric(*x))) {
        rep.disagreements.push_back({root, "outer edge metric " + to_string(gluing_metric(*x)) + " -> " +
                                               to_string(gluing_metric(*out))});
      }
    }
    check_edges(*s->inner, st, rep, root);
    check_edges(*s->outer, st, rep, root);
  } else if (const auto* w = std::get_if<Swap>(&c.node)) {
    check_edges(*w->child, st, rep, root);
  }
}

// The agreement grid: every (d1, g1, d2, g2, n) with d_i >= r, g_i up to one
// past the NNS range, d1 + d2 <= d_cap, and n from 1 to one past the union
// rho bound. One cell per (r, d1).
template <typename Fn>
void for_each_grid_instance(const AuditGrid& grid, Int r, Int d1, Fn fn) {
  for (Int g1 = 0; g1 <= d1 - r + 1 && g1 <= d1; ++g1) {
    if (grid.g_cap > 0 && g1 > grid.g_cap) break;
    for (Int d2 = r; d1 + d2 <= grid.d_cap; ++d2) {
      for (Int g2 = 0; g2 <= d2 - r + 1 && g2 <= d2; ++g2) {
        if (grid.g_cap > 0 && g2 > grid.g_cap) break;
        Int top = r * (r + 2) + rho(d1, g1, r) + rho(d2, g2, r);
        Int n_max = std::max<Int>(1, floor_div(top, r) + 1);
        Int lo = grid.fixed_n > 0 ? grid.fixed_n : 1;
        Int hi = grid.fixed_n > 0 ? grid.fixed_n : n_max;
        for (Int n = lo; n <= hi; ++n) fn(GluingInstance(CurveSpec(d1, g1, r), CurveSpec(d2, g2, r), n));
      }
    }
  }
}

inline std::vector<std::pair<Int, Int>> grid_cells(const AuditGrid& grid) {
  std::vector<std::pair<Int, Int>> cells;
  if (grid.empty() || grid.d_cap <= 0) return cells;
  for (Int r = std::max<Int>(grid.r_min, 1); r <= grid.r_max; ++r) {
    for (Int d1 = r; d1 + r <= grid.d_cap; ++d1) cells.emplace_back(r, d1);
  }
  return cells;
}

struct GridOptions {
  bool agreement = true;
  bool verify = true;
  bool termination = true;
  CertifyOptions certify;
};

inline AuditReport audit_grid(const AuditGrid& grid, const std::string& kind, const GridOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  auto cells = grid_cells(grid);
  auto reports = run_cells<CertState>(cells.size(), [&](std::size_t i, CertState& st) {
    auto [r, d1] = cells[i];
    if (!st.configured) {
      st.certifier = MainCertifier(opt.certify);
      st.configured = true;
    }
    st.reset_for(r);
    AuditReport rep;
    for_each_grid_instance(grid, r, d1, [&](const GluingInstance& x) {
      ++rep.instances_checked;
      bool pass = check_main(x).passed();
      CertifyResult res = [&]() -> CertifyResult {
        try {
          return st.certifier.certify(x);
        } catch (const std::exception& e) {
          return Refusal{x, std::string("certifier threw: ") + e.what(), std::nullopt};
        }
      }();
      if (opt.agreement && pass != res.ok()) {
        rep.disagreements.push_back(
            {x, pass ? "check passes but certifier refused: " + res.refusal().reason : "certified but check fails"});
      }
      if (!res.ok()) return;
      ++rep.certified;
      const Certificate& cert = *res.certificate();
      if (opt.verify) {
        VerificationReport v = st.verifier.verify(cert);
        if (!v.ok) {
          const auto& f = v.failures.front();
          rep.disagreements.push_back({x, "verification failed at " + f.path + ": " + f.label + " (" + f.inequality +
                                              ")"});
        }
      }
      if (opt.termination) {
        Int dep = depth(cert);
        rep.max_depth = std::max(rep.max_depth, dep);
        if (dep > x.total_degree() + x.n()) {
          rep.disagreements.push_back({x, "depth " + std::to_string(dep) + " exceeds d1+d2+n"});
        }
        check_edges(cert, st, rep, x);
      }
    });
    return rep;
  });
  return merge_cells(kind, std::move(reports), start);
}

}  // namespace detail

// Case coverage over limit-linearly-normal pairs ((g1+r, g1), (g2+r, g2), n)
// with both capacity gates. Where rn <= r(r+2) + g1 + g2 one of base, case A,
// case B must apply (else a gap); where it fails the certifier must refuse.
inline AuditReport audit_case_coverage(const AuditGrid& grid) {
  auto start = std::chrono::steady_clock::now();
  std::vector<Int> rs;
  if (!grid.empty()) {
    for (Int r = std::max<Int>(grid.r_min, 2); r <= grid.r_max; ++r) rs.push_back(r);
  }
  struct State {
    MainCertifier certifier;
  };
  auto reports = detail::run_cells<State>(rs.size(), [&](std::size_t i, State& st) {
    Int r = rs[i];
    Int g_cap = grid.g_cap > 0 ? grid.g_cap : 3 * r;
    AuditReport rep;
    st.certifier.clear();
    for (Int g1 = 0; g1 <= g_cap; ++g1) {
      for (Int g2 = 0; g2 <= g_cap; ++g2) {
        CurveSpec c1(g1 + r, g1, r), c2(g2 + r, g2, r);
        if (grid.d_cap > 0 && c1.d() + c2.d() > grid.d_cap) continue;
        Int cap = std::min(interpolation_capacity(c1).value(), interpolation_capacity(c2).value());
        Int lo = grid.fixed_n > 0 ? grid.fixed_n : 1;
        Int hi = grid.fixed_n > 0 ? std::min(grid.fixed_n, cap) : cap;
        for (Int n = lo; n <= hi; ++n) {
          GluingInstance x(c1, c2, n);
          ++rep.instances_checked;
          bool in_bound = r * n <= r * (r + 2) + g1 + g2;
          if (in_bound) {
            if (detail::classify_lln(g1, g2, r, n) == detail::LlnArm::none) {
              rep.gaps.push_back({x, "no base, case A or case B arm"});
            }
          } else {
            ++rep.contrapositive_checked;
            if (check_main(x).passed() || st.certifier.certify(x).ok()) {
              rep.disagreements.push_back({x, "outside the n bound but not refused"});
            }
          }
        }
      }
    }
    return rep;
  });
  return detail::merge_cells("coverage", std::move(reports), start);
}

// certify_main succeeds iff check_main passes, and every certificate verifies.
inline AuditReport audit_oracle_agreement(const AuditGrid& grid, CertifyOptions options = {}) {
  detail::GridOptions opt;
  opt.termination = false;
  opt.certify = options;
  return detail::audit_grid(grid, "agreement", opt);
}

// Metric decrease on every edge of every certificate and depth <= d1+d2+n.
inline AuditReport audit_termination(const AuditGrid& grid) {
  detail::GridOptions opt;
  opt.agreement = false;
  opt.verify = false;
  return detail::audit_grid(grid, "termination", opt);
}

// Agreement, verification and termination in one pass over the grid.
inline AuditReport audit_full(const AuditGrid& grid, CertifyOptions options = {}) {
  detail::GridOptions opt;
  opt.certify = options;
  return detail::audit_grid(grid, "full", opt);
}

}  // namespace bnglue

#endif  // BNGLUE_AUDIT_HPP_
