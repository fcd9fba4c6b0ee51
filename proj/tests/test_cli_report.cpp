#include <functional>
#include <set>

#include "curves.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "ratcurve/oracle.hpp"
#include "ratcurve/report.hpp"

using namespace ratcurve;
using namespace th;
using nlohmann::json;

namespace {

AnalyzeRequest request(const CurveParam& c, std::vector<std::string> modes) {
  AnalyzeRequest r;
  r.f = {c.f(0).to_string(), c.f(1).to_string(), c.f(2).to_string()};
  r.modes = std::move(modes);
  return r;
}

PointPk pt(std::vector<Rat> q) { return PointPk::from_rational(std::move(q)); }

void leaves(const json& j, std::vector<std::string>& out) {
  if (j.is_structured()) {
    for (const auto& v : j) leaves(v, out);
  } else {
    out.push_back(j.is_string() ? j.get<std::string>() : j.dump());
  }
}

}  // namespace

TEST_CASE("parse curve input") {
  CurveParam c = parse_curve("4*s^6 - 16*s^5*t + 3*s^4*t^2 + 28*s^3*t^3 - s^2*t^4 - 6*s*t^5", "s^6", "t^6");
  CHECK(c.f(0) == sextic().f(0));
  CurveParam q = parse_curve("s^4 + s*t^3", "s^2*t^2", "t^4");
  CHECK(q.f(0) == e6_quartic().f(0));
  CHECK_THROWS_WITH_AS(parse_binary_form("s^2 + t^3"), doctest::Contains("NotHomogeneous"), MathError);
  CHECK_THROWS_WITH_AS(parse_curve("s^3", "t^3", "s^2*t^2"), doctest::Contains("DegreeMismatch"), MathError);
  CHECK_THROWS_WITH_AS(parse_curve("s^2", "t^2", "s*t"), doctest::Contains("DegreeTooSmall"), MathError);
  CHECK_THROWS_WITH_AS(parse_curve("s^3 +", "t^3", "s*t^2"), doctest::Contains("SyntaxError"), MathError);
  CHECK(parse_binary_form("0.5*s^3 + 1.25*t^3") == B("1/2*s^3 + 5/4*t^3"));
}

TEST_CASE("implicitization oracle") {
  MultiPoly F = implicitize_oracle(acnode_cubic());
  CHECK(F == P("w0^3 + w0^2*w2 + w1^2*w2", F.ring()));
  MultiPoly G = implicitize_oracle(hidden_quartic());
  CHECK(G == P("w0^4 + w1^4 + w0^3*w2 + w0*w1^2*w2", G.ring()));
  MultiPoly S = implicitize_oracle(sextic());
  CHECK(S.total_degree() == 6);
  CHECK(vanishes_on_curve(S, sextic()));
  CHECK_FALSE(vanishes_on_curve(F, sextic()));
  for (auto c : {nodal_quartic(), a6_septic(), near_quartic(), two_branch_quintic()}) {
    MultiPoly H = implicitize_oracle(c);
    CHECK(H.total_degree() == c.n());
    CHECK(vanishes_on_curve(H, c));
  }
}

TEST_CASE("verify singular points against the oracle") {
  MultiPoly G = implicitize_oracle(hidden_quartic());
  SingularVerdict v = verify_singular(G, pt({0, 0, 1}), 3);
  CHECK(v.pass);
  CHECK(v.order == 3);
  CHECK(v.exact);
  MultiPoly N = implicitize_oracle(nodal_quartic());
  SingularVerdict n = verify_singular(N, pt({1, 0, 1}), 2);
  CHECK(n.pass);
  CHECK(n.order == 2);  // some second partial is nonzero
  CHECK_FALSE(verify_singular(N, pt({1, 0, 1}), 3).pass);
  // f(1:1) is a smooth point of the cubic
  PointPk smooth = evaluate(acnode_cubic(), Rat(1), Rat(1));
  MultiPoly F = implicitize_oracle(acnode_cubic());
  SingularVerdict s = verify_singular(F, smooth, 2);
  CHECK_FALSE(s.pass);
  CHECK(s.order == 1);
  auto all = verify_singular(F, {pt({0, 0, 1}), smooth}, {2, 2});
  CHECK(all[0].pass);
  CHECK_FALSE(all[1].pass);
}

TEST_CASE("modes") {
  CHECK(parse_modes("count,real") == std::vector<std::string>{"count", "real"});
  CHECK(parse_modes("all").size() == 6);
  CHECK_THROWS_WITH_AS(parse_modes(""), doctest::Contains("Usage"), MathError);
  CHECK_THROWS_WITH_AS(parse_modes("count,bogus"), doctest::Contains("Usage"), MathError);
  try {
    parse_modes(" , ");
    CHECK(false);
  } catch (const MathError& e) {
    CHECK(exit_code_for(e) == kExitUsage);
  }
}

TEST_CASE("count report of the sextic") {
  ReportDocument d = analyze(request(sextic(), {"count"}));
  CHECK(d.exit_code == kExitOk);
  CHECK(d.data["schema"] == kReportSchema);
  CHECK(d.data["count"]["N"] == 4);
  CHECK(d.data["count"]["N_by_multiplicity"] == json{{"2", 1}, {"3", 3}});
  CHECK(d.data["checks"]["algorithm1_vs_algorithm2"]["agree"] == true);
  CHECK(d.data["checks"]["clebsch"]["equality"] == true);
  const std::string js = emit_report(d, ReportFormat::Json);
  CHECK(js.find("\"N\": 4") != std::string::npos);
  CHECK_FALSE(d.data.contains("coords"));
  CHECK_FALSE(d.data.contains("oracle"));
}

TEST_CASE("full report: determinism and renderings") {
  ReportDocument a = analyze(request(sextic(), {"all"}));
  ReportDocument b = analyze(request(sextic(), {"all"}));
  const std::string ja = emit_report(a, ReportFormat::Json);
  CHECK(ja == emit_report(b, ReportFormat::Json));
  CHECK(emit_report(a, ReportFormat::Text) == emit_report(b, ReportFormat::Text));
  // render -> parse -> render
  ReportDocument c;
  c.data = json::parse(ja);
  CHECK(emit_report(c, ReportFormat::Json) == ja);
  // every scalar of the JSON document appears in the text rendering
  const std::string text = emit_report(a, ReportFormat::Text);
  std::vector<std::string> ls;
  leaves(a.data, ls);
  for (const auto& l : ls) CHECK_MESSAGE(text.find(l) != std::string::npos, l);
  CHECK(a.data["oracle"]["points_passed"] == 4);
  CHECK(a.data["classify"]["delta_sum"] == 10);
  int heuristic = 0;
  for (const auto& w : a.data["warnings"]) heuristic += w["code"] == "HEURISTIC_DELTA";
  CHECK(heuristic == 3);
  CHECK(a.exit_code == kExitOk);
}

TEST_CASE("classify and real reports") {
  ReportDocument t = analyze(request(tacnode_quartic(), {"classify"}));
  std::multiset<std::string> types;
  for (const auto& p : t.data["classify"]["points"]) types.insert(p["a_type"].get<std::string>());
  CHECK(types == std::multiset<std::string>{"A_1", "A_3"});
  CHECK(t.data["classify"]["conjecture_stats"]["passed"] == 2);
  CHECK(t.data["oracle"]["vanishes_on_curve"] == true);
  ReportDocument r = analyze(request(acnode_cubic(), {"real"}));
  REQUIRE(r.data["real"]["points"].size() == 1);
  CHECK(r.data["real"]["points"][0]["class"] == "acnode");
  CHECK(r.data["real"]["points"][0]["coordinates"] == json{"0", "0", "1"});
  CHECK_FALSE(r.data.contains("oracle"));
}

TEST_CASE("ambiguous clustering is reported as inconclusive") {
  AnalyzeRequest r = request(nodal_quartic(), {"coords"});
  r.pipeline.precision_bits = 53;
  r.pipeline.cluster_tol = 1e-26;
  ReportDocument d = analyze(r);
  CHECK(d.exit_code == kExitInconclusive);
  REQUIRE(d.data["warnings"].size() >= 1);
  CHECK(d.data["warnings"][0]["code"] == "CLUSTER_AMBIGUOUS");
}

TEST_CASE("error mapping") {
  try {
    analyze(request(parse_curve("s^4", "s^2*t^2", "t^4"), {"count"}));
    CHECK(false);
  } catch (const MathError& e) {
    CHECK(exit_code_for(e) == kExitImproper);
  }
  AnalyzeRequest bad;
  bad.f = {"s^3 + t^2", "t^3", "s^3"};
  try {
    analyze(bad);
    CHECK(false);
  } catch (const MathError& e) {
    CHECK(exit_code_for(e) == kExitUsage);
  }
  CHECK(exit_code_for(MathError("NegativeCount", "x")) == kExitInconsistent);
}

TEST_CASE("input documents") {
  json j = json::parse(R"({"f":["s^4","-s^3*t+s*t^3","t^4"],"label":"nodal",
    "options":{"mode":"count,branches","precision_bits":300,"cluster_tol":1e-9,"oracle":"off"}})");
  AnalyzeRequest r = request_from_json(j);
  CHECK(r.label == "nodal");
  CHECK(r.pipeline.precision_bits == 300);
  CHECK(r.pipeline.cluster_tol == doctest::Approx(1e-9));
  CHECK(r.oracle == false);
  ReportDocument d = analyze(r);
  CHECK(d.data["input"]["label"] == "nodal");
  CHECK(d.data["count"]["N"] == 3);
  CHECK(d.data["branches"]["2"]["(1,1)"] == 3);
  CHECK_THROWS_WITH_AS(request_from_json(json::parse(R"({"f":["s^3"]})")), doctest::Contains("Usage"), MathError);
  json dec = json::parse(R"({"f":["0.5*s^3+t^3","s^2*t","s*t^2"]})");
  ReportDocument e = analyze(request_from_json(dec));
  CHECK(e.data["input"]["f"][0] == "1/2*s^3 + t^3");
}
