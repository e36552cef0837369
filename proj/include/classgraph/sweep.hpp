#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "classgraph/analysis.hpp"
#include "classgraph/catalog.hpp"
#include "json.hpp"

namespace classgraph {

struct SweepConfig {
  CatalogFilter filter;
  GroupOptions group_options;
  SamplingPolicy sampling;
  std::size_t jobs = 1;
};

struct SweepSkip {
  std::string group;
  std::string reason;
};

struct SweepResult {
  CatalogFilter filter;
  std::uint64_t seed = kDefaultSeed;
  std::vector<AnalysisReport> reports;  // catalog order
  std::vector<SweepSkip> skipped;       // catalog order
};

// Analyses every catalog group, one group per worker. Groups exceeding a
// resource limit are recorded as skipped. Output order is independent of jobs.
SweepResult run_sweep(const SweepConfig& config);

std::size_t failure_count(const SweepResult& result);
bool sweep_passed(const SweepResult& result, bool strict);

nlohmann::ordered_json summary_json(const SweepResult& result);
std::string summary_human(const SweepResult& result);

}  // namespace classgraph
