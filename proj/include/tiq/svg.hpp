// Copyright 2026 The tiq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TIQ_SVG_HPP
#define TIQ_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace tiq {

// Hand-emitted SVG plotting, deliberately tiny: axes, polylines, markers and
// heatmap cells are all this toolkit needs, and emitting them directly keeps
// outputs byte-reproducible (no library metadata, no timestamps).

struct SvgSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
  bool draw_line = true;
  bool draw_markers = false;
  std::string color = "#1f77b4";
  bool dashed = false;
};

namespace detail {

constexpr double kSvgW = 640.0, kSvgH = 480.0;
constexpr double kMarginL = 70.0, kMarginR = 24.0;
constexpr double kMarginT = 42.0, kMarginB = 54.0;

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct AxisRange {
  double lo = 0.0, hi = 1.0;
  double to_frac(double v) const { return (v - lo) / (hi - lo); }
};

inline AxisRange pad_range(double lo, double hi) {
  if (!(hi > lo)) {
    const double c = lo;
    return {c - 1.0, c + 1.0};
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

inline void emit_frame_and_axes(std::string& out, const std::string& title,
                                const std::string& x_label,
                                const std::string& y_label,
                                const AxisRange& xr, const AxisRange& yr) {
  char buf[512];
  const double x0 = kMarginL, x1 = kSvgW - kMarginR;
  const double y0 = kSvgH - kMarginB, y1 = kMarginT;
  std::snprintf(buf, sizeof buf,
                "<rect x=\"%s\" y=\"%s\" width=\"%s\" height=\"%s\" "
                "fill=\"none\" stroke=\"black\"/>\n",
                fmt(x0).c_str(), fmt(y1).c_str(), fmt(x1 - x0).c_str(),
                fmt(y0 - y1).c_str());
  out += buf;
  out += "<text x=\"" + fmt((x0 + x1) / 2) + "\" y=\"24\" " +
         "text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
         title + "</text>\n";
  out += "<text x=\"" + fmt((x0 + x1) / 2) + "\" y=\"" + fmt(kSvgH - 12) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">" +
         x_label + "</text>\n";
  out += "<text x=\"16\" y=\"" + fmt((y0 + y1) / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\" transform=\"rotate(-90 16 " +
         fmt((y0 + y1) / 2) + ")\">" + y_label + "</text>\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = t / 4.0;
    const double px = x0 + fx * (x1 - x0);
    const double vx = xr.lo + fx * (xr.hi - xr.lo);
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%s\" y1=\"%s\" x2=\"%s\" y2=\"%s\" "
                  "stroke=\"black\"/>\n"
                  "<text x=\"%s\" y=\"%s\" text-anchor=\"middle\" "
                  "font-family=\"sans-serif\" font-size=\"11\">%s</text>\n",
                  fmt(px).c_str(), fmt(y0).c_str(), fmt(px).c_str(),
                  fmt(y0 + 5).c_str(), fmt(px).c_str(), fmt(y0 + 20).c_str(),
                  fmt(vx).c_str());
    out += buf;
    const double py = y0 + fx * (y1 - y0);
    const double vy = yr.lo + fx * (yr.hi - yr.lo);
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%s\" y1=\"%s\" x2=\"%s\" y2=\"%s\" "
                  "stroke=\"black\"/>\n"
                  "<text x=\"%s\" y=\"%s\" text-anchor=\"end\" "
                  "font-family=\"sans-serif\" font-size=\"11\">%s</text>\n",
                  fmt(x0 - 5).c_str(), fmt(py).c_str(), fmt(x0).c_str(),
                  fmt(py).c_str(), fmt(x0 - 8).c_str(), fmt(py + 4).c_str(),
                  fmt(vy).c_str());
    out += buf;
  }
}

}  // namespace detail

// Line/scatter plot of one or more series with shared axes.
inline std::string svg_line_plot(const std::string& title,
                                 const std::string& x_label,
                                 const std::string& y_label,
                                 const std::vector<SvgSeries>& series) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const SvgSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (!std::isfinite(xmin)) xmin = xmax = 0.0;
  if (!std::isfinite(ymin)) ymin = ymax = 0.0;
  const detail::AxisRange xr = detail::pad_range(xmin, xmax);
  const detail::AxisRange yr = detail::pad_range(ymin, ymax);

  const double x0 = detail::kMarginL, x1 = detail::kSvgW - detail::kMarginR;
  const double y0 = detail::kSvgH - detail::kMarginB, y1 = detail::kMarginT;
  auto px = [&](double v) { return x0 + xr.to_frac(v) * (x1 - x0); };
  auto py = [&](double v) { return y0 + yr.to_frac(v) * (y1 - y0); };

  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
      "height=\"480\" viewBox=\"0 0 640 480\">\n"
      "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  detail::emit_frame_and_axes(out, title, x_label, y_label, xr, yr);

  char buf[256];
  for (const SvgSeries& s : series) {
    if (s.draw_line && s.points.size() >= 2) {
      out += "<polyline fill=\"none\" stroke=\"" + s.color +
             "\" stroke-width=\"1.5\"";
      if (s.dashed) out += " stroke-dasharray=\"6 4\"";
      out += " points=\"";
      for (const auto& [x, y] : s.points) {
        out += detail::fmt(px(x)) + "," + detail::fmt(py(y)) + " ";
      }
      out += "\"/>\n";
    }
    if (s.draw_markers) {
      for (const auto& [x, y] : s.points) {
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%s\" cy=\"%s\" r=\"3\" fill=\"%s\"/>\n",
                      detail::fmt(px(x)).c_str(), detail::fmt(py(y)).c_str(),
                      s.color.c_str());
        out += buf;
      }
    }
  }
  double ly = detail::kMarginT + 14.0;
  for (const SvgSeries& s : series) {
    if (s.label.empty()) continue;
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%s\" y=\"%s\" width=\"12\" height=\"12\" "
                  "fill=\"%s\"/>\n"
                  "<text x=\"%s\" y=\"%s\" font-family=\"sans-serif\" "
                  "font-size=\"11\">%s</text>\n",
                  detail::fmt(x1 - 150).c_str(), detail::fmt(ly - 10).c_str(),
                  s.color.c_str(), detail::fmt(x1 - 133).c_str(),
                  detail::fmt(ly).c_str(), s.label.c_str());
    out += buf;
    ly += 16.0;
  }
  out += "</svg>\n";
  return out;
}

// Heatmap of row-major values on a uniform grid. Rows map to the y axis
// (first row at y_min), columns to the x axis.
inline std::string svg_heatmap(const std::vector<double>& values, int n_rows,
                               int n_cols, double x_min, double x_max,
                               double y_min, double y_max,
                               const std::string& title,
                               const std::string& x_label,
                               const std::string& y_label) {
  if (n_rows < 1 || n_cols < 1 ||
      values.size() != static_cast<std::size_t>(n_rows) * n_cols) {
    throw std::invalid_argument("svg_heatmap: shape mismatch");
  }
  double vmin = values[0], vmax = values[0];
  for (const double v : values) {
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  const double span = vmax > vmin ? vmax - vmin : 1.0;

  auto color_of = [&](double v) {
    const double t = std::clamp((v - vmin) / span, 0.0, 1.0);
    // Three-stop dark-violet -> teal -> yellow map.
    const double stops[3][3] = {
        {68, 1, 84}, {33, 145, 140}, {253, 231, 37}};
    const double u = t * 2.0;
    const int s = u < 1.0 ? 0 : 1;
    const double f = u - s;
    char buf[32];
    std::snprintf(buf, sizeof buf, "rgb(%d,%d,%d)",
                  static_cast<int>(std::lround(stops[s][0] +
                                               f * (stops[s + 1][0] - stops[s][0]))),
                  static_cast<int>(std::lround(stops[s][1] +
                                               f * (stops[s + 1][1] - stops[s][1]))),
                  static_cast<int>(std::lround(stops[s][2] +
                                               f * (stops[s + 1][2] - stops[s][2]))));
    return std::string(buf);
  };

  const detail::AxisRange xr{x_min, x_max};
  const detail::AxisRange yr{y_min, y_max};
  const double x0 = detail::kMarginL, x1 = detail::kSvgW - detail::kMarginR;
  const double y0 = detail::kSvgH - detail::kMarginB, y1 = detail::kMarginT;

  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
      "height=\"480\" viewBox=\"0 0 640 480\">\n"
      "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  const double cw = (x1 - x0) / n_cols;
  const double ch = (y0 - y1) / n_rows;
  char buf[256];
  for (int r = 0; r < n_rows; ++r) {
    for (int c = 0; c < n_cols; ++c) {
      const double v = values[static_cast<std::size_t>(r) * n_cols + c];
      std::snprintf(buf, sizeof buf,
                    "<rect x=\"%s\" y=\"%s\" width=\"%s\" height=\"%s\" "
                    "fill=\"%s\"/>\n",
                    detail::fmt(x0 + c * cw).c_str(),
                    detail::fmt(y0 - (r + 1) * ch).c_str(),
                    detail::fmt(cw + 0.5).c_str(),
                    detail::fmt(ch + 0.5).c_str(), color_of(v).c_str());
      out += buf;
    }
  }
  detail::emit_frame_and_axes(out, title, x_label, y_label, xr, yr);
  std::snprintf(buf, sizeof buf,
                "<text x=\"%s\" y=\"%s\" font-family=\"sans-serif\" "
                "font-size=\"11\">min %s, max %s</text>\n",
                detail::fmt(x0).c_str(), detail::fmt(detail::kMarginT - 6).c_str(),
                detail::fmt(vmin).c_str(), detail::fmt(vmax).c_str());
  out += buf;
  out += "</svg>\n";
  return out;
}

}  // namespace tiq

#endif  // TIQ_SVG_HPP
