#pragma once

#include <string>
#include <vector>

namespace docalc::app {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Line chart with linear axes, or log-log when `log_axes` is set.
std::string svg_line_plot(const std::string& title, const std::vector<Series>& series, bool log_axes = false);

/// Heat map of `cells[row][col]` scaled to [0, max].
std::string svg_heat_map(const std::string& title, const std::vector<std::vector<double>>& cells);

}  // namespace docalc::app
