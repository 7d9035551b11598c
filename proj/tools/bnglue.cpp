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

// Command-line front end. Exit codes: 0 pass, 1 domain failure (hypotheses
// fail, refusal, failed verification or audit), 2 usage error or violated
// precondition.

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "bnglue/bnglue.hpp"

namespace {

using bnglue::CurveSpec;
using bnglue::Int;
using bnglue::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Args {
  Int d = 0, g = 0, r = 0, a = 0, n = 0;
  Int d1 = 0, g1 = 0, d2 = 0, g2 = 0;
  Int r_min = 3, r_max = 8, g_cap = 0, d_cap = 40, limit = 1;
  Int d_max = 0, g_max = 0;
  std::string format = "csv";
  std::string in;
};

int emit(const Json& doc, bool ok) {
  std::cout << bnglue::dump(doc);
  return ok ? kPass : kFail;
}

void add_curve(CLI::App* cmd, Args& a) {
  cmd->add_option("--d", a.d, "degree")->required();
  cmd->add_option("--g", a.g, "genus")->required();
  cmd->add_option("--r", a.r, "ambient dimension")->required();
}

void add_pair(CLI::App* cmd, Args& a) {
  cmd->add_option("--d1", a.d1, "degree of side 1 (inner curve for hyperplane theorems)")->required();
  cmd->add_option("--g1", a.g1, "genus of side 1")->required();
  cmd->add_option("--d2", a.d2, "degree of side 2 (hyperplane curve for hyperplane theorems)")->required();
  cmd->add_option("--g2", a.g2, "genus of side 2")->required();
  cmd->add_option("--r", a.r, "ambient dimension")->required();
  cmd->add_option("--n", a.n, "number of nodes")->required();
}

void add_small_mid(CLI::App* cmd, Args& a) {
  add_curve(cmd, a);
  cmd->add_option("--a", a.a, "degree of the attached rational curve")->required();
}

bnglue::GluingInstance gluing(const Args& a) {
  return bnglue::GluingInstance(CurveSpec(a.d1, a.g1, a.r), CurveSpec(a.d2, a.g2, a.r), a.n);
}

// The hyperplane curve lives in P^{r-1}.
bnglue::HyperplaneInstance hyperplane(const Args& a) {
  return bnglue::HyperplaneInstance(CurveSpec(a.d1, a.g1, a.r), CurveSpec(a.d2, a.g2, a.r - 1), a.n);
}

bnglue::SmallMidQuery small_mid(const Args& a) { return bnglue::SmallMidQuery(CurveSpec(a.d, a.g, a.r), a.a); }

bnglue::AuditGrid grid(const Args& a) {
  bnglue::AuditGrid g;
  g.r_min = a.r_min;
  g.r_max = a.r_max;
  g.g_cap = a.g_cap;
  g.d_cap = a.d_cap;
  g.fixed_n = a.n;
  return g;
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Exact decision and certification engine for gluing curves in projective space", "bnglue"};
  app.require_subcommand(1);
  Args a;
  std::function<int()> action;

  auto* rho_cmd = app.add_subcommand("rho", "Brill-Noether number (r+1)d - rg - r(r+1)");
  add_curve(rho_cmd, a);
  rho_cmd->callback([&] {
    action = [&] {
      std::cout << bnglue::rho(CurveSpec(a.d, a.g, a.r)) << "\n";
      return kPass;
    };
  });

  auto* interp_cmd = app.add_subcommand("interp", "interpolation capacity (integer or 'unbounded')");
  add_curve(interp_cmd, a);
  interp_cmd->callback([&] {
    action = [&] {
      std::cout << bnglue::to_string(bnglue::interpolation_capacity(CurveSpec(a.d, a.g, a.r))) << "\n";
      return kPass;
    };
  });

  auto* check_cmd = app.add_subcommand("check", "check the hypotheses of one theorem");
  check_cmd->require_subcommand(1);
  auto verdict_action = [&](const char* name, auto make, auto checker) {
    auto* cmd = check_cmd->add_subcommand(name, std::string("hypotheses of ") + name);
    return cmd->callback([&, name, make, checker] {
      action = [&, name, make, checker] {
        auto inst = make(a);
        bnglue::Verdict v = checker(inst);
        return emit(bnglue::verdict_document(name, inst, v), v.passed());
      };
    });
  };
  add_pair(verdict_action("main", gluing, [](const auto& x) { return bnglue::check_main(x); }), a);
  add_pair(verdict_action("main-sp", gluing, [](const auto& x) { return bnglue::check_main_sp(x); }), a);
  add_pair(verdict_action("main-hyp", hyperplane, [](const auto& x) { return bnglue::check_main_hyp(x); }), a);
  add_small_mid(verdict_action("small-mid", small_mid, [](const auto& x) { return bnglue::check_small_mid(x); }), a);
  add_pair(verdict_action("small-hyp", hyperplane, [](const auto& x) { return bnglue::check_small_hyp(x); }), a);

  auto* certify_cmd = app.add_subcommand("certify", "build a proof certificate or a refusal");
  certify_cmd->require_subcommand(1);
  auto* cm = certify_cmd->add_subcommand("main", "two NNS curves glued at n points");
  add_pair(cm, a);
  cm->callback([&] {
    action = [&] {
      auto res = bnglue::certify_main(gluing(a));
      return emit(bnglue::result_document(res), res.ok());
    };
  });
  auto* cmid = certify_cmd->add_subcommand("small-mid", "attach a rational curve of degree a at a+2 points");
  add_small_mid(cmid, a);
  cmid->callback([&] {
    action = [&] {
      auto res = bnglue::certify_small_mid(small_mid(a));
      return emit(bnglue::result_document(res), res.ok());
    };
  });
  auto* chyp = certify_cmd->add_subcommand("small-hyp", "curve glued to a curve in a hyperplane");
  add_pair(chyp, a);
  chyp->callback([&] {
    action = [&] {
      auto res = bnglue::certify_small_hyp(hyperplane(a));
      return emit(bnglue::result_document(res), res.ok());
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "verify a certificate document");
  verify_cmd->add_option("--in", a.in, "certificate file, '-' for stdin")->required();
  verify_cmd->callback([&] {
    action = [&] {
      bnglue::CertPtr cert = bnglue::parse_certificate_document(read_input(a.in));
      bnglue::VerificationReport rep = bnglue::verify(*cert);
      return emit(bnglue::verification_document(rep), rep.ok);
    };
  });

  auto* audit_cmd = app.add_subcommand("audit", "exhaustive grid audits");
  audit_cmd->require_subcommand(1);
  auto audit_sub = [&](const char* name, const char* help, std::function<bnglue::AuditReport(const bnglue::AuditGrid&)> fn) {
    auto* cmd = audit_cmd->add_subcommand(name, help);
    cmd->add_option("--r-min", a.r_min, "smallest r")->capture_default_str();
    cmd->add_option("--r-max", a.r_max, "largest r")->capture_default_str();
    cmd->add_option("--g-cap", a.g_cap, "genus cap per side (0: none, coverage uses 3r)")->capture_default_str();
    cmd->add_option("--d-cap", a.d_cap, "total degree cap (0: none, coverage only)")->capture_default_str();
    cmd->add_option("--n", a.n, "restrict to one node count");
    cmd->callback([&, fn] {
      action = [&, fn] {
        bnglue::AuditGrid g = grid(a);
        bnglue::AuditReport rep = fn(g);
        return emit(bnglue::audit_document(rep, g), rep.passed());
      };
    });
  };
  audit_sub("coverage", "base, case A or case B covers every limit-linearly-normal pair",
            [](const bnglue::AuditGrid& g) { return bnglue::audit_case_coverage(g); });
  audit_sub("agreement", "certify succeeds iff check passes; every certificate verifies",
            [](const bnglue::AuditGrid& g) { return bnglue::audit_oracle_agreement(g); });
  audit_sub("termination", "metric decrease on every edge; depth <= d1+d2+n",
            [](const bnglue::AuditGrid& g) { return bnglue::audit_termination(g); });

  auto* plan_cmd = app.add_subcommand("plan", "decompose (d,g,r) as two glued NNS curves");
  add_curve(plan_cmd, a);
  plan_cmd->add_option("--limit", a.limit, "number of plans")->capture_default_str();
  plan_cmd->callback([&] {
    action = [&] {
      auto res = bnglue::enumerate_decompositions(CurveSpec(a.d, a.g, a.r), a.limit);
      return emit(bnglue::plan_document(res), res.feasible());
    };
  });

  auto* table_cmd = app.add_subcommand("table", "tables");
  table_cmd->require_subcommand(1);
  auto* tinterp = table_cmd->add_subcommand("interp", "interpolation capacity table");
  tinterp->add_option("--r", a.r, "ambient dimension")->required();
  tinterp->add_option("--d-max", a.d_max, "largest degree")->required();
  tinterp->add_option("--g-max", a.g_max, "largest genus")->required();
  tinterp->add_option("--format", a.format, "csv or md")->check(CLI::IsMember({"csv", "md"}))->capture_default_str();
  tinterp->callback([&] {
    action = [&] {
      auto fmt = a.format == "md" ? bnglue::TableFormat::markdown : bnglue::TableFormat::csv;
      std::cout << bnglue::interp_table(a.r, a.d_max, a.g_max, fmt);
      return kPass;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (!action) return kUsage;
  try {
    return action();
  } catch (const bnglue::DomainError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
  } catch (const std::overflow_error& e) {
    std::cerr << "precondition violated: inputs too large (" << e.what() << ")\n";
  } catch (const bnglue::FormatError& e) {
    std::cerr << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
