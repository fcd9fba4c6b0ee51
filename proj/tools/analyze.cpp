#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ratcurve/report.hpp"

using namespace ratcurve;

int main(int argc, char** argv) {
  CLI::App app{"Singularities of a rational plane curve from its parameterization"};
  std::string fx, fy, fz, input, mode = "all", format = "json", oracle, cache;
  int bits = kDefaultPrecisionBits;
  double tol = 1e-8;
  auto* ox = app.add_option("--fx", fx, "first component, a form in s,t");
  auto* oy = app.add_option("--fy", fy, "second component");
  auto* oz = app.add_option("--fz", fz, "third component");
  auto* oin = app.add_option("--input", input, "JSON file {\"f\":[...],\"label\":...,\"options\":{...}}");
  auto* omode = app.add_option("--mode", mode, "count,branches,ideals,coords,classify,real,all");
  auto* obits = app.add_option("--precision-bits", bits, "working precision of numeric roots");
  auto* otol = app.add_option("--cluster-tol", tol, "projective distance below which images coincide");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  auto* oor = app.add_option("--oracle", oracle, "on or off")->check(CLI::IsMember({"on", "off"}));
  auto* ocache = app.add_option("--stratum-cache", cache, "directory for cached stratum ideals");
  oin->excludes(ox)->excludes(oy)->excludes(oz);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    AnalyzeRequest req;
    if (!input.empty()) {
      std::ifstream in(input);
      if (!in) throw MathError("Usage", "cannot read " + input);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw MathError("Usage", std::string("invalid JSON input: ") + e.what());
      }
      req = request_from_json(j);
    } else if (ox->count() && oy->count() && oz->count()) {
      req.f = {fx, fy, fz};
    } else {
      throw MathError("Usage", "give --fx, --fy and --fz, or --input");
    }
    // command-line flags override the file
    if (omode->count()) req.modes = parse_modes(mode);
    if (obits->count()) req.pipeline.precision_bits = bits;
    if (otol->count()) req.pipeline.cluster_tol = tol;
    if (oor->count()) req.oracle = oracle == "on";
    if (ocache->count()) req.stratum_cache = cache;
    const ReportDocument doc = analyze(req);
    std::cout << emit_report(doc, format == "text" ? ReportFormat::Text : ReportFormat::Json);
    return doc.exit_code;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return kExitInconsistent;
  }
}
