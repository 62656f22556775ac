#pragma once

#include <string>
#include <vector>

#include "docalc/app/config.hpp"
#include "docalc/app/manifest.hpp"
#include "json.hpp"

namespace docalc::app {

struct JobResult {
  std::vector<Artifact> artifacts;  // CSV/JSON, plus SVG when plot is set
  nlohmann::json summary;
  RunConfig resolved;  // every parameter the job read, defaults included
  bool ok = true;      // the job's built-in check held
};

const std::vector<std::string>& simulate_jobs();

/// Deterministic for a given configuration. Throws UsageError for unknown
/// jobs or bad parameters.
JobResult run_simulate(const std::string& job, const RunConfig& c);

/// Human-readable Planck numbers and residuals.
std::string planck_report(const RunConfig& c, bool& ok);

}  // namespace docalc::app
