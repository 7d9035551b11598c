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

// JSON documents (format_version 1) for verdicts, certificates, refusals,
// verification and audit reports, and decomposition plans, plus CSV and
// Markdown capacity tables. Object keys are sorted and there are no
// floating-point values, so output is byte-stable. docs/schema.json
// describes the format.

#ifndef BNGLUE_SERIALIZE_HPP_
#define BNGLUE_SERIALIZE_HPP_

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bnglue/audit.hpp"
#include "bnglue/certificate.hpp"
#include "bnglue/instances.hpp"
#include "bnglue/numerics.hpp"
#include "bnglue/planner.hpp"
#include "bnglue/verifier.hpp"

namespace bnglue {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error("malformed document: " + what) {}
};

// ---- encoding ----

inline Json to_json(const CurveSpec& s) { return Json{{"d", s.d()}, {"g", s.g()}, {"r", s.r()}}; }

inline Json to_json(const Instance& inst) {
  if (const auto* x = std::get_if<GluingInstance>(&inst)) {
    return Json{{"kind", "gluing"}, {"left", to_json(x->left())}, {"right", to_json(x->right())}, {"n", x->n()}};
  }
  if (const auto* q = std::get_if<SmallMidQuery>(&inst)) {
    return Json{{"kind", "small-mid"}, {"spec", to_json(q->spec())}, {"a", q->a()}};
  }
  const auto& h = std::get<HyperplaneInstance>(inst);
  return Json{{"kind", "hyperplane"}, {"inner", to_json(h.inner())}, {"hyper", to_json(h.hyper())}, {"n", h.n()}};
}

inline Json to_json(const Check& c) {
  return Json{{"label", c.label}, {"inequality", c.inequality}, {"slack", c.slack}};
}

inline Json to_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(to_json(c));
  return arr;
}

inline Json to_json(const Verdict& v) {
  Json j{{"outcome", to_string(v.outcome)}, {"conclusion", to_string(v.conclusion)}, {"checks", to_json(v.checks)}};
  j["witness_side"] = v.witness_side ? Json(*v.witness_side) : Json(nullptr);
  return j;
}

inline Json to_json(const SplitPlan& p) {
  return Json{{"parent", to_json(p.parent)}, {"piece_main", to_json(p.piece_main)}, {"piece_off", to_json(p.piece_off)},
              {"n0", p.n0},          {"n_prime", p.n_prime},            {"n_dprime", p.n_dprime}};
}

inline Json to_json(const Certificate& c) {
  Json j{{"case_id", c.case_id}, {"instance", to_json(c.instance)}, {"node", node_name(c.node)}};
  if (const auto* b = std::get_if<BaseMainSp>(&c.node)) {
    j["verdict"] = to_json(b->verdict);
  } else if (const auto* b = std::get_if<BaseMainHyp>(&c.node)) {
    j["verdict"] = to_json(b->verdict);
  } else if (const auto* s = std::get_if<Split>(&c.node)) {
    j["plan"] = to_json(s->plan);
    j["inner"] = to_json(*s->inner);
    j["outer"] = to_json(*s->outer);
  } else if (const auto* w = std::get_if<Swap>(&c.node)) {
    j["child"] = to_json(*w->child);
  } else if (const auto* l = std::get_if<LemmaLeaf>(&c.node)) {
    j["tag"] = l->tag;
    j["side_conditions"] = to_json(l->side_conditions);
  } else {
    const auto& r = std::get<Reduce>(c.node);
    Json kids = Json::array();
    for (const auto& k : r.children) kids.push_back(to_json(*k));
    j["children"] = std::move(kids);
    j["side_conditions"] = to_json(r.side_conditions);
  }
  return j;
}

inline Json certificate_document(const Certificate& c) {
  return Json{{"format_version", kFormatVersion}, {"kind", "certificate"}, {"certificate", to_json(c)}};
}

inline Json refusal_document(const Refusal& r) {
  Json j{{"format_version", kFormatVersion}, {"kind", "refusal"}, {"instance", to_json(r.instance)},
         {"reason", r.reason}};
  j["verdict"] = r.verdict ? to_json(*r.verdict) : Json(nullptr);
  return j;
}

inline Json result_document(const CertifyResult& r) {
  return r.ok() ? certificate_document(*r.certificate()) : refusal_document(r.refusal());
}

inline Json verdict_document(const std::string& theorem, const Instance& inst, const Verdict& v) {
  return Json{{"format_version", kFormatVersion},
              {"kind", "verdict"},
              {"theorem", theorem},
              {"instance", to_json(inst)},
              {"verdict", to_json(v)}};
}

inline Json verification_document(const VerificationReport& rep) {
  Json fails = Json::array();
  for (const auto& f : rep.failures) {
    fails.push_back(Json{{"path", f.path}, {"label", f.label}, {"inequality", f.inequality}, {"slack", f.slack}});
  }
  return Json{{"format_version", kFormatVersion},
              {"kind", "verification-report"},
              {"ok", rep.ok},
              {"failures", std::move(fails)},
              {"nodes_checked", rep.nodes_checked},
              {"conditions_checked", rep.conditions_checked}};
}

inline Json to_json(const std::vector<AuditFinding>& fs) {
  Json arr = Json::array();
  for (const auto& f : fs) arr.push_back(Json{{"instance", to_json(Instance(f.instance))}, {"detail", f.detail}});
  return arr;
}

// Wall time is reported in whole milliseconds to keep the document integral.
inline Json audit_document(const AuditReport& rep, const AuditGrid& grid) {
  Json g{{"r_min", grid.r_min}, {"r_max", grid.r_max}, {"g_cap", grid.g_cap}, {"d_cap", grid.d_cap}};
  g["fixed_n"] = grid.fixed_n > 0 ? Json(grid.fixed_n) : Json(nullptr);
  return Json{{"format_version", kFormatVersion},
              {"kind", "audit-report"},
              {"audit", rep.kind},
              {"grid", std::move(g)},
              {"passed", rep.passed()},
              {"instances_checked", rep.instances_checked},
              {"certified", rep.certified},
              {"contrapositive_checked", rep.contrapositive_checked},
              {"edges_checked", rep.edges_checked},
              {"max_depth", rep.max_depth},
              {"gaps", to_json(rep.gaps)},
              {"disagreements", to_json(rep.disagreements)},
              {"wall_time_ms", static_cast<Int>(rep.wall_time_seconds * 1000.0)}};
}

inline Json plan_document(const PlanResult& res) {
  Json plans = Json::array();
  for (const auto& p : res.plans) {
    plans.push_back(Json{{"left", to_json(p.left)},
                         {"right", to_json(p.right)},
                         {"n", p.n},
                         {"certificate", to_json(*p.certificate)}});
  }
  Json findings = Json::array();
  for (const auto& f : res.findings) {
    findings.push_back(Json{{"instance", to_json(Instance(f.instance))}, {"reason", f.reason}});
  }
  return Json{{"format_version", kFormatVersion},
              {"kind", "decomposition-plans"},
              {"target", to_json(res.target)},
              {"feasible", res.feasible()},
              {"plans", std::move(plans)},
              {"findings", std::move(findings)},
              {"search_bounds",
               Json{{"d1_min", res.bounds.d1_min},
                    {"d1_max", res.bounds.d1_max},
                    {"pairs_examined", res.bounds.pairs_examined},
                    {"candidates", res.bounds.candidates}}}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- decoding ----

namespace serialize_detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline Int integer(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "' is not an integer");
  return v.get<Int>();
}

inline std::string text(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw FormatError(std::string("field '") + key + "' is not a string");
  return v.get<std::string>();
}

}  // namespace serialize_detail

inline CurveSpec curve_from_json(const Json& j) {
  using namespace serialize_detail;
  return CurveSpec(integer(j, "d"), integer(j, "g"), integer(j, "r"));
}

inline Instance instance_from_json(const Json& j) {
  using namespace serialize_detail;
  std::string kind = text(j, "kind");
  if (kind == "gluing") {
    return GluingInstance(curve_from_json(field(j, "left")), curve_from_json(field(j, "right")), integer(j, "n"));
  }
  if (kind == "small-mid") return SmallMidQuery(curve_from_json(field(j, "spec")), integer(j, "a"));
  if (kind == "hyperplane") {
    return HyperplaneInstance(curve_from_json(field(j, "inner")), curve_from_json(field(j, "hyper")), integer(j, "n"));
  }
  throw FormatError("unknown instance kind '" + kind + "'");
}

inline std::vector<Check> checks_from_json(const Json& j) {
  using namespace serialize_detail;
  if (!j.is_array()) throw FormatError("checks must be an array");
  std::vector<Check> out;
  for (const auto& c : j) out.push_back(Check{text(c, "label"), text(c, "inequality"), integer(c, "slack")});
  return out;
}

inline Verdict verdict_from_json(const Json& j) {
  using namespace serialize_detail;
  Verdict v;
  std::string outcome = text(j, "outcome");
  if (outcome != "pass" && outcome != "fail") throw FormatError("unknown outcome '" + outcome + "'");
  v.outcome = outcome == "pass" ? Outcome::pass : Outcome::fail;
  std::string concl = text(j, "conclusion");
  if (concl == "BN") {
    v.conclusion = Conclusion::bn;
  } else if (concl == "WBN") {
    v.conclusion = Conclusion::wbn;
  } else if (concl == "none") {
    v.conclusion = Conclusion::none;
  } else {
    throw FormatError("unknown conclusion '" + concl + "'");
  }
  v.checks = checks_from_json(field(j, "checks"));
  const Json& w = field(j, "witness_side");
  if (!w.is_null()) v.witness_side = w.get<int>();
  return v;
}

inline SplitPlan plan_from_json(const Json& j) {
  using namespace serialize_detail;
  return SplitPlan{curve_from_json(field(j, "parent")), curve_from_json(field(j, "piece_main")),
                   curve_from_json(field(j, "piece_off")), integer(j, "n0"), integer(j, "n_prime"),
                   integer(j, "n_dprime")};
}

inline CertPtr certificate_from_json(const Json& j) {
  using namespace serialize_detail;
  Instance inst = instance_from_json(field(j, "instance"));
  std::string case_id = text(j, "case_id");
  std::string node = text(j, "node");
  if (node == "base-main-sp") return make_cert(inst, BaseMainSp{verdict_from_json(field(j, "verdict"))}, case_id);
  if (node == "base-main-hyp") return make_cert(inst, BaseMainHyp{verdict_from_json(field(j, "verdict"))}, case_id);
  if (node == "split-line1" || node == "split-line2" || node == "split-rnc") {
    SplitKind kind = node == "split-line1" ? SplitKind::line1 : node == "split-line2" ? SplitKind::line2 : SplitKind::rnc;
    return make_cert(inst,
                     Split{kind, plan_from_json(field(j, "plan")), certificate_from_json(field(j, "inner")),
                           certificate_from_json(field(j, "outer"))},
                     case_id);
  }
  if (node == "swap") return make_cert(inst, Swap{certificate_from_json(field(j, "child"))}, case_id);
  if (node == "lemma") {
    return make_cert(inst, LemmaLeaf{text(j, "tag"), checks_from_json(field(j, "side_conditions"))}, case_id);
  }
  if (node == "reduce") {
    const Json& kids = field(j, "children");
    if (!kids.is_array()) throw FormatError("children must be an array");
    std::vector<CertPtr> children;
    for (const auto& k : kids) children.push_back(certificate_from_json(k));
    return make_cert(inst, Reduce{std::move(children), checks_from_json(field(j, "side_conditions"))}, case_id);
  }
  throw FormatError("unknown node '" + node + "'");
}

// Parses a certificate document. Domain violations inside (e.g. a negative
// genus) surface as FormatError.
inline CertPtr parse_certificate_document(const std::string& text) {
  using namespace serialize_detail;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  }
  if (integer(j, "format_version") != kFormatVersion) throw FormatError("unsupported format_version");
  if (serialize_detail::text(j, "kind") != "certificate") throw FormatError("document is not a certificate");
  try {
    return certificate_from_json(field(j, "certificate"));
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  }
}

// ---- tables ----

enum class TableFormat { csv, markdown };

// Interpolation capacity for d in [1, d_max] (rows) and g in [0, g_max]
// (columns); "-" where d < g.
inline std::string interp_table(Int r, Int d_max, Int g_max, TableFormat fmt) {
  if (r < 1) throw DomainError("ambient dimension must satisfy r >= 1");
  if (d_max < 1 || g_max < 0) throw DomainError("table bounds require d_max >= 1 and g_max >= 0");
  std::ostringstream os;
  auto cell = [&](Int d, Int g) {
    if (d < g) return std::string("-");
    return to_string(interpolation_capacity(CurveSpec(d, g, r)));
  };
  if (fmt == TableFormat::csv) {
    os << "d";
    for (Int g = 0; g <= g_max; ++g) os << ",g=" << g;
    os << "\n";
    for (Int d = 1; d <= d_max; ++d) {
      os << d;
      for (Int g = 0; g <= g_max; ++g) os << "," << cell(d, g);
      os << "\n";
    }
  } else {
    os << "| d |";
    for (Int g = 0; g <= g_max; ++g) os << " g=" << g << " |";
    os << "\n|---|";
    for (Int g = 0; g <= g_max; ++g) os << "---|";
    os << "\n";
    for (Int d = 1; d <= d_max; ++d) {
      os << "| " << d << " |";
      for (Int g = 0; g <= g_max; ++g) os << " " << cell(d, g) << " |";
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace bnglue

#endif  // BNGLUE_SERIALIZE_HPP_
