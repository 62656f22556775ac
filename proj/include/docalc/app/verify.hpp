#pragma once

#include <string>
#include <vector>

#include "docalc/app/config.hpp"
#include "json.hpp"

namespace docalc::app {

struct CheckLine {
  bool pass = false;
  std::string label;
  std::string detail;  // reduced expression or measured numbers
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckLine> lines;

  bool pass() const;
  /// One "PASS label: detail" line per check, then the suite verdict.
  std::string text() const;
  nlohmann::json json() const;
};

const std::vector<std::string>& verify_suites();

/// Keys used: dim, seed, count. Throws UsageError for unknown suites.
SuiteResult run_verify(const std::string& suite, const RunConfig& c);

}  // namespace docalc::app
