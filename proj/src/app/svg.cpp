#include "docalc/app/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace docalc::app {

namespace {

constexpr double kWidth = 640, kHeight = 420, kMargin = 50;
const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string svg_line_plot(const std::string& title, const std::vector<Series>& series, bool log_axes) {
  auto tx = [&](double v) { return log_axes ? std::log10(v) : v; };
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) throw std::invalid_argument("series x and y differ in length");
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (log_axes && (s.x[k] <= 0 || s.y[k] <= 0)) continue;
      x0 = std::min(x0, tx(s.x[k]));
      x1 = std::max(x1, tx(s.x[k]));
      y0 = std::min(y0, tx(s.y[k]));
      y1 = std::max(y1, tx(s.y[k]));
    }
  }
  if (!(x1 > x0)) x1 = x0 + 1;
  if (!(y1 > y0)) y1 = y0 + 1;
  auto px = [&](double v) { return kMargin + (tx(v) - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
  auto py = [&](double v) { return kHeight - kMargin - (tx(v) - y0) / (y1 - y0) * (kHeight - 2 * kMargin); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << escape(title)
    << "</text>\n";
  o << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin << "\" height=\""
    << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kColors[s % 5];
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (std::size_t k = 0; k < series[s].x.size(); ++k) {
      if (log_axes && (series[s].x[k] <= 0 || series[s].y[k] <= 0)) continue;
      o << px(series[s].x[k]) << ',' << py(series[s].y[k]) << ' ';
    }
    o << "\"/>\n";
    o << "<text x=\"" << kWidth - kMargin - 4 << "\" y=\"" << kMargin + 16 * (s + 1) << "\" text-anchor=\"end\" fill=\""
      << color << "\" font-size=\"12\">" << escape(series[s].label) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string svg_heat_map(const std::string& title, const std::vector<std::vector<double>>& cells) {
  if (cells.empty() || cells[0].empty()) throw std::invalid_argument("empty heat map");
  double top = 0;
  for (const auto& row : cells) {
    for (double v : row) top = std::max(top, v);
  }
  if (top <= 0) top = 1;
  const double cw = (kWidth - 2 * kMargin) / static_cast<double>(cells[0].size());
  const double ch = (kHeight - 2 * kMargin) / static_cast<double>(cells.size());
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << escape(title)
    << "</text>\n";
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      const int shade = 255 - static_cast<int>(std::lround(255 * std::clamp(cells[r][c] / top, 0.0, 1.0)));
      o << "<rect x=\"" << kMargin + cw * static_cast<double>(c) << "\" y=\"" << kMargin + ch * static_cast<double>(r)
        << "\" width=\"" << cw << "\" height=\"" << ch << "\" fill=\"rgb(255," << shade << ',' << shade << ")\"/>\n";
    }
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace docalc::app
