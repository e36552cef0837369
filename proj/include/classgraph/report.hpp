#pragma once

#include <string>

#include "classgraph/analysis.hpp"
#include "json.hpp"

namespace classgraph {

std::string to_string(Verdict v);
std::string to_string(TheoremOutcome o);

nlohmann::ordered_json graph_json(const Graph& graph, const GraphMetrics& m);
nlohmann::ordered_json report_json(const AnalysisReport& report);
std::string report_human(const AnalysisReport& report);

}  // namespace classgraph
