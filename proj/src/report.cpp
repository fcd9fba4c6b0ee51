#include "ratcurve/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ratcurve/numeric.hpp"
#include "ratcurve/oracle.hpp"
#include "ratcurve/parse.hpp"
#include "ratcurve/strata.hpp"

namespace ratcurve {

using nlohmann::json;

namespace {

const std::vector<std::string> kModes{"count", "branches", "ideals", "coords", "classify", "real"};
constexpr int kDigits = 15;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

json gens_json(const Ideal& I) {
  json a = json::array();
  for (const auto& g : I.canonical_generators()) a.push_back(g.to_string());
  return a;
}

json point_coords(const PointPk& p) {
  json a = json::array();
  for (int i = 0; i < p.size(); ++i) a.push_back(p.exact ? to_string(p.q[i]) : p.z[i].to_string(kDigits));
  return a;
}

std::string point_string(const PointPk& p) {
  std::string s = "(";
  for (int i = 0; i < p.size(); ++i) s += (i ? ":" : "") + (p.exact ? to_string(p.q[i]) : p.z[i].to_string(kDigits));
  return s + ")";
}

json point_json(const PointPk& p) {
  json j;
  j["coordinates"] = point_coords(p);
  j["exact"] = p.exact;
  if (!p.exact && !p.coord_polys.empty()) {
    json cp = json::array();
    for (const auto& c : p.coord_polys) cp.push_back(c.to_string("theta"));
    j["algebraic"] = {{"theta_polynomial", p.theta_poly.to_string("theta")}, {"coordinate_polynomials", cp}};
  }
  return j;
}

json preimages_json(const std::vector<DivisorEntry>& pre) {
  json a = json::array();
  for (const auto& e : pre) a.push_back({{"point", e.point.to_string(kDigits)}, {"multiplicity", e.multiplicity}});
  return a;
}

json strata_json(const StratumTable& t) {
  json j = json::object();
  for (const auto& [k, m] : t) {
    json row = json::object();
    for (const auto& [lam, v] : m)
      if (v) row[lam.to_string()] = v;
    if (!row.empty()) j[std::to_string(k)] = row;
  }
  return j;
}

json counts_json(const std::map<int, int>& N_k) {
  json j = json::object();
  for (const auto& [k, v] : N_k)
    if (v) j[std::to_string(k)] = v;
  return j;
}

void warn(json& doc, const std::string& code, const std::string& msg) {
  doc["warnings"].push_back({{"code", code}, {"message", msg}});
}

void render_text(const json& j, int indent, std::ostringstream& out);

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool all_scalars(const json& a) {
  return std::all_of(a.begin(), a.end(), [](const json& x) { return !x.is_structured(); });
}

void render_entry(const std::string& key, const json& v, int indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  if (!v.is_structured()) {
    out << pad << key << ": " << scalar_text(v) << "\n";
  } else if (v.is_array() && all_scalars(v)) {
    out << pad << key << ": [";
    for (size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
    out << "]\n";
  } else if (v.empty()) {
    out << pad << key << ": " << (v.is_array() ? "[]" : "{}") << "\n";
  } else {
    out << pad << key << ":\n";
    render_text(v, indent + 2, out);
  }
}

void render_text(const json& j, int indent, std::ostringstream& out) {
  if (j.is_object())
    for (const auto& [k, v] : j.items()) render_entry(k, v, indent, out);
  else
    for (size_t i = 0; i < j.size(); ++i) render_entry("[" + std::to_string(i) + "]", j[i], indent, out);
}

}  // namespace

std::vector<std::string> parse_modes(const std::vector<std::string>& modes) {
  std::vector<std::string> items;
  for (const auto& entry : modes) {
    std::stringstream ss(entry);
    std::string item;
    while (std::getline(ss, item, ',')) items.push_back(item);
  }
  std::set<std::string> want;
  for (const auto& raw : items) {
    const std::string m = trim(raw);
    if (m.empty()) continue;
    if (m == "all") {
      want.insert(kModes.begin(), kModes.end());
    } else if (std::find(kModes.begin(), kModes.end(), m) != kModes.end()) {
      want.insert(m);
    } else {
      throw MathError("Usage", "unknown mode '" + m + "'");
    }
  }
  if (want.empty()) throw MathError("Usage", "no analysis mode requested");
  std::vector<std::string> out;
  for (const auto& m : kModes)
    if (want.count(m)) out.push_back(m);
  return out;
}

std::vector<std::string> parse_modes(const std::string& csv) { return parse_modes(std::vector<std::string>{csv}); }

AnalyzeRequest request_from_json(const json& j) {
  AnalyzeRequest r;
  if (!j.is_object() || !j.contains("f") || !j["f"].is_array() || j["f"].size() != 3)
    throw MathError("Usage", "input must be an object with \"f\": [three polynomial strings]");
  for (int u = 0; u < 3; ++u) {
    if (!j["f"][u].is_string()) throw MathError("Usage", "component f[" + std::to_string(u) + "] is not a string");
    r.f[u] = j["f"][u].get<std::string>();
  }
  if (j.contains("label")) r.label = j["label"].is_string() ? j["label"].get<std::string>() : j["label"].dump();
  if (j.contains("options")) {
    const json& o = j["options"];
    if (!o.is_object()) throw MathError("Usage", "\"options\" must be an object");
    try {
      if (o.contains("mode")) {
        if (o["mode"].is_array())
          r.modes = o["mode"].get<std::vector<std::string>>();
        else
          r.modes = {o["mode"].get<std::string>()};
      }
      if (o.contains("precision_bits")) r.pipeline.precision_bits = o["precision_bits"].get<int>();
      if (o.contains("cluster_tol")) r.pipeline.cluster_tol = o["cluster_tol"].get<double>();
      if (o.contains("oracle")) {
        if (o["oracle"].is_boolean())
          r.oracle = o["oracle"].get<bool>();
        else
          r.oracle = o["oracle"].get<std::string>() == "on";
      }
      if (o.contains("stratum_cache")) r.stratum_cache = o["stratum_cache"].get<std::string>();
    } catch (const json::exception& e) {
      throw MathError("Usage", std::string("bad option value: ") + e.what());
    }
  }
  return r;
}

int exit_code_for(const MathError& e) {
  static const std::set<std::string> usage{"Usage", "SyntaxError", "NotHomogeneous", "DegreeMismatch", "DegreeTooSmall"};
  static const std::set<std::string> improper{"NotProper", "CommonFactor"};
  if (usage.count(e.code())) return kExitUsage;
  if (improper.count(e.code())) return kExitImproper;
  return kExitInconsistent;
}

ReportDocument analyze(const AnalyzeRequest& req) {
  const std::vector<std::string> modes = parse_modes(req.modes);
  auto has = [&](const char* m) { return std::find(modes.begin(), modes.end(), m) != modes.end(); };
  if (req.pipeline.precision_bits < 53 || req.pipeline.precision_bits > kMaxPrecisionBits)
    throw MathError("Usage", "precision bits must lie in [53, " + std::to_string(kMaxPrecisionBits) + "]");
  if (!(req.pipeline.cluster_tol > 0)) throw MathError("Usage", "cluster tolerance must be positive");
  const CurveParam c = parse_curve(req.f[0], req.f[1], req.f[2]);
  check_proper(c);
  if (req.stratum_cache) set_stratum_cache_dir(*req.stratum_cache);
  const bool oracle = req.oracle.value_or(has("coords") || has("classify"));
  const int n = c.n();

  Pipeline p(c, req.pipeline);
  json doc;
  doc["schema"] = kReportSchema;
  doc["warnings"] = json::array();
  doc["input"] = {{"f", {c.f(0).to_string(), c.f(1).to_string(), c.f(2).to_string()}},
                  {"degree", n},
                  {"label", req.label},
                  {"options",
                   {{"modes", modes},
                    {"precision_bits", req.pipeline.precision_bits},
                    {"cluster_tol", req.pipeline.cluster_tol},
                    {"oracle", oracle}}}};
  bool inconsistent = false, inconclusive = false;

  // cross-checks run for every mode
  const CountResult& cr = p.counts();
  const IdealsResult& ir = p.ideals();
  {
    json chk;
    const bool agree = cr.N_k == ir.N_k && cr.N == ir.N;
    chk["algorithm1_vs_algorithm2"] = {
        {"agree", agree}, {"algorithm1", counts_json(cr.N_k)}, {"algorithm2", counts_json(ir.N_k)}};
    if (!agree) {
      inconsistent = true;
      warn(doc, "COUNT_MISMATCH", "singular point counts from the strata and from the singular ideals differ");
    }
    Int sum = 0;
    for (const auto& [k, v] : cr.N_k) sum += Int(v) * binomial(k, 2);
    const Int bound = binomial(n - 1, 2);
    chk["clebsch"] = {{"sum_multiplicity_terms", sum.get_si()},
                      {"genus_bound", bound.get_si()},
                      {"equality", sum == bound},
                      {"holds", sum <= bound}};
    if (sum > bound) {
      inconsistent = true;
      warn(doc, "CLEBSCH_VIOLATION", "sum of C(m,2) over singular points exceeds C(n-1,2)");
    }
    doc["checks"] = chk;
  }

  if (has("count")) {
    const CuspidalResult& cu = p.cuspidal();
    json x = json::object();
    for (int k = 2; k <= cr.top; ++k) x[std::to_string(k)] = projective_degree(p.X(k));
    doc["count"] = {{"N", cr.N},
                    {"N_by_multiplicity", counts_json(cr.N_k)},
                    {"top_multiplicity", cr.top},
                    {"X_degrees", x},
                    {"strata", strata_json(cr.strata)},
                    {"cuspidal",
                     {{"cuspidal", cu.cuspidal},
                      {"ordinary_only", cu.ordinary_only},
                      {"cusp_count", cu.cusp_count},
                      {"support_size", cu.support_size}}}};
  }
  if (has("branches")) doc["branches"] = strata_json(cr.branches);
  if (has("ideals")) {
    json geq = json::object(), jk = json::object();
    for (const auto& [k, I] : ir.J_geq) geq[std::to_string(k)] = gens_json(I);
    for (const auto& [k, I] : ir.J) jk[std::to_string(k)] = gens_json(I);
    doc["ideals"] = {{"J_N", gens_json(ir.J_N)}, {"J_geq", geq}, {"J", jk}};
  }

  std::optional<MultiPoly> F;
  if (oracle) {
    F = implicitize_oracle(c);
    const bool on = vanishes_on_curve(*F, c);
    doc["oracle"] = {{"equation", F->to_string()}, {"vanishes_on_curve", on}};
    if (!on) {
      inconsistent = true;
      warn(doc, "ORACLE_FAILURE", "implicit equation does not vanish on the parameterization");
    }
  }

  const bool want_points = has("coords") || has("classify") || has("real");
  const std::vector<SingularPoint>* pts = nullptr;
  if (want_points) {
    try {
      pts = has("classify") ? &p.classified() : &p.points();
    } catch (const MathError& e) {
      if (e.code() != "AmbiguousCluster") throw;
      inconclusive = true;
      warn(doc, "CLUSTER_AMBIGUOUS", e.what());
    }
  }

  if (has("coords")) {
    const PreimageResult& pr = p.preimages();
    json Fj = json::object(), fresh = json::object();
    for (const auto& [k, f] : pr.F) Fj[std::to_string(k)] = f.to_string();
    for (const auto& [k, f] : pr.fresh) fresh[std::to_string(k)] = f.to_string();
    json sec = {{"F", Fj}, {"fresh", fresh}};
    for (const auto& d : pr.divisibility_failures) warn(doc, "DIVISIBILITY", d);
    if (pts) {
      json arr = json::array();
      int checked = 0, passed = 0;
      std::vector<SingularVerdict> verdicts;
      if (F) {
        std::vector<PointPk> cs;
        std::vector<int> ks;
        for (const auto& sp : *pts) cs.push_back(sp.coords), ks.push_back(sp.multiplicity);
        verdicts = verify_singular(*F, cs, ks);
      }
      for (size_t i = 0; i < pts->size(); ++i) {
        const auto& sp = (*pts)[i];
        json pj = point_json(sp.coords);
        pj["multiplicity"] = sp.multiplicity;
        pj["branch_partition"] = sp.branch_partition.to_string();
        pj["preimages"] = preimages_json(sp.preimages);
        if (F) {
          const SingularVerdict& v = verdicts[i];
          ++checked;
          passed += v.pass;
          pj["oracle"] = {{"pass", v.pass}, {"order", v.order}, {"exact", v.exact}};
          if (!v.pass) {
            inconsistent = true;
            warn(doc, "ORACLE_FAILURE", point_string(sp.coords) + ": " + v.detail);
          }
        }
        arr.push_back(pj);
      }
      sec["points"] = arr;
      if (F) doc["oracle"]["points_checked"] = checked, doc["oracle"]["points_passed"] = passed;
    }
    doc["coords"] = sec;
  }

  if (has("classify") && pts) {
    json arr = json::array();
    int dsum = 0;
    bool dfull = true;
    for (const auto& sp : *pts) {
      json pj;
      pj["coordinates"] = point_coords(sp.coords);
      pj["multiplicity"] = sp.multiplicity;
      pj["branch_partition"] = sp.branch_partition.to_string();
      pj["a_type"] = sp.a_index ? json("A_" + std::to_string(*sp.a_index)) : json(nullptr);
      pj["delta"] = sp.delta ? json(*sp.delta) : json(nullptr);
      pj["delta_heuristic"] = sp.delta_heuristic;
      if (sp.multiplicity == 2) pj["verification"] = sp.a_verification;
      if (sp.delta)
        dsum += *sp.delta;
      else
        dfull = false;
      if (!sp.delta) warn(doc, "DELTA_UNMATCHED", point_string(sp.coords) + ": no point of X_2 maps to this point");
      if (sp.a_inconclusive) {
        inconclusive = true;
        warn(doc, "INCONCLUSIVE_A_TYPE", point_string(sp.coords) + ": " + sp.a_verification);
      }
      if (sp.delta_heuristic)
        warn(doc, "HEURISTIC_DELTA", point_string(sp.coords) + ": delta of a point of multiplicity " +
                                         std::to_string(sp.multiplicity) + " is the X_2 length sum");
      arr.push_back(pj);
    }
    json x2 = json::array();
    for (const auto& xp : p.x2_points())
      x2.push_back({{"point", point_coords(xp.point)}, {"length", xp.length}, {"on_conic", xp.on_conic}});
    const Algorithm4Result& a4 = p.algorithm4();
    json a4j = {{"ran", a4.ran}};
    if (a4.ran) {
      a4j["F"] = a4.F.to_string();
      a4j["degree_ok"] = a4.degree_ok;
      a4j["S"] = gens_json(a4.S);
    } else {
      a4j["skipped_reason"] = a4.skipped_reason;
    }
    const int bound = static_cast<int>(binomial(n - 1, 2).get_si());
    doc["classify"] = {{"points", arr},
                       {"X2_points", x2},
                       {"delta_sum", dsum},
                       {"delta_sum_expected", bound},
                       {"algorithm4", a4j},
                       {"conjecture_stats", {{"tested", a4.tested}, {"passed", a4.passed}}}};
    if (!dfull || dsum != bound) inconsistent = true;
    if (dfull && dsum != bound)
      warn(doc, "DELTA_SUM_MISMATCH",
           "delta sum " + std::to_string(dsum) + " differs from C(n-1,2) = " + std::to_string(bound));
  }

  if (has("real") && pts) {
    json arr = json::array();
    for (const auto& sp : *pts) {
      const RealPoint r = classify_real(sp);
      arr.push_back({{"coordinates", point_coords(sp.coords)},
                     {"multiplicity", sp.multiplicity},
                     {"class", to_string(r.cls)},
                     {"real_preimages", r.real_preimages},
                     {"nonreal_preimages", r.nonreal_preimages},
                     {"conjugation_ok", r.conjugation_ok}});
    }
    doc["real"] = {{"points", arr}};
  }

  ReportDocument out;
  out.data = std::move(doc);
  out.exit_code = inconsistent ? kExitInconsistent : inconclusive ? kExitInconclusive : kExitOk;
  return out;
}

std::string emit_report(const ReportDocument& doc, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) return doc.data.dump(2) + "\n";
  std::ostringstream out;
  render_text(doc.data, 0, out);
  return out.str();
}

}  // namespace ratcurve
