#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ratcurve/pipeline.hpp"

namespace ratcurve {

inline constexpr const char* kReportSchema = "ratcurve-sing/1";

struct AnalyzeRequest {
  std::array<std::string, 3> f;
  std::string label;
  std::vector<std::string> modes{"all"};
  PipelineOptions pipeline;
  std::optional<bool> oracle;  // default: on for coords and classify
  std::optional<std::string> stratum_cache;
};

enum class ReportFormat { Json, Text };

struct ReportDocument {
  nlohmann::json data;
  int exit_code = 0;
};

// Exit codes of the analyze tool.
enum ExitCode { kExitOk = 0, kExitUsage = 2, kExitImproper = 3, kExitInconclusive = 4, kExitInconsistent = 5 };

// "count,real" -> {"count","real"}; "all" expands. Throws Usage on empty or unknown modes.
std::vector<std::string> parse_modes(const std::string& csv);
std::vector<std::string> parse_modes(const std::vector<std::string>& modes);

// {"f":[...], "label":..., "options":{"mode", "precision_bits", "cluster_tol", "oracle", "stratum_cache"}}
AnalyzeRequest request_from_json(const nlohmann::json& j);

// Parses, checks properness and runs the requested modes. Parse and
// properness failures propagate as MathError.
ReportDocument analyze(const AnalyzeRequest& req);

std::string emit_report(const ReportDocument& doc, ReportFormat fmt);

// Exit code for an error raised before or during analysis.
int exit_code_for(const MathError& e);

}  // namespace ratcurve
