// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <limits>
#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "bspower/report.hpp"

namespace bspower {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 170.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;
constexpr int kTicks = 5;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

struct AxisDisplay {
  const char* label;
  double scale;
};

AxisDisplay display_of(AxisKind kind) {
  switch (kind) {
    case AxisKind::Bandwidth: return {"Bandwidth W [MHz]", 1e-6};
    case AxisKind::Chains: return {"Radio chains D [-]", 1.0};
    case AxisKind::Load: return {"Load share chi [-]", 1.0};
    case AxisKind::PMaxOp: return {"Max transmit power P_max [W]", 1.0};
  }
  return {"", 1.0};
}

struct Range {
  double lo;
  double hi;

  double span() const { return hi - lo; }
};

Range padded(double lo, double hi) {
  if (hi - lo <= 0.0) {
    const double pad = lo == 0.0 ? 1.0 : std::abs(lo) * 0.05;
    return {lo - pad, hi + pad};
  }
  const double pad = (hi - lo) * 0.05;
  return {lo - pad, hi + pad};
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string tick_label(double value) { return fmt::format("{:.4g}", value); }

}  // namespace

std::string render_sweep_svg(const SweepResult& result) {
  const auto& spec = result.spec;
  const AxisDisplay x_axis = display_of(spec.axis.kind);

  // Series keyed by second-axis index; a 1-D sweep is a single series.
  const std::size_t series_count = spec.second_axis ? spec.second_axis->values.size() : 1;
  std::vector<std::vector<std::pair<double, double>>> series(series_count);
  double y_lo = std::numeric_limits<double>::infinity();
  double y_hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < result.cells.size(); ++i) {
    const auto& cell = result.cells[i];
    if (!cell.ok()) continue;
    const double y = cell.breakdown->p_supply_total;
    series[i % series_count].emplace_back(cell.axis_value * x_axis.scale, y);
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  }
  if (y_lo > y_hi) {
    y_lo = 0.0;
    y_hi = 1.0;
  }

  const Range xr = padded(spec.axis.values.front() * x_axis.scale,
                          spec.axis.values.back() * x_axis.scale);
  const Range yr = padded(y_lo, y_hi);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / xr.span() * plot_w; };
  auto py = [&](double y) { return kTop + plot_h - (y - yr.lo) / yr.span() * plot_h; };

  std::string out;
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n",
      kWidth, kHeight);
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
                     kWidth, kHeight);
  out += fmt::format(
      "<text x=\"{:.2f}\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">{} supply power "
      "vs {}</text>\n",
      kLeft + plot_w / 2, escape(spec.station.name), to_string(spec.axis.kind));

  // Frame and grid.
  out += fmt::format(
      "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" "
      "stroke=\"#000000\"/>\n",
      kLeft, kTop, plot_w, plot_h);
  for (int t = 0; t <= kTicks; ++t) {
    const double fx = xr.lo + xr.span() * t / kTicks;
    const double fy = yr.lo + yr.span() * t / kTicks;
    out += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"#dddddd\"/>\n",
        px(fx), kTop, kTop + plot_h);
    out += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", px(fx),
        kTop + plot_h + 18, tick_label(fx));
    out += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"#dddddd\"/>\n",
        kLeft, py(fy), kLeft + plot_w);
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n",
                       kLeft - 6, py(fy) + 4, tick_label(fy));
  }
  out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n",
                     kLeft + plot_w / 2, kHeight - 24, x_axis.label);
  out += fmt::format(
      "<text x=\"20\" y=\"{0:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      "{0:.2f})\">Supply power P_supply [W]</text>\n",
      kTop + plot_h / 2);

  for (std::size_t s = 0; s < series_count; ++s) {
    const char* colour = kPalette[s % std::size(kPalette)];
    std::string label = spec.station.name;
    if (spec.second_axis) {
      const double v = spec.second_axis->values[s] * display_of(spec.second_axis->kind).scale;
      label = fmt::format("{} = {}", to_string(spec.second_axis->kind), tick_label(v));
    }
    out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"2\" points=\"",
                       colour);
    for (std::size_t k = 0; k < series[s].size(); ++k) {
      if (k > 0) out += ' ';
      out += fmt::format("{:.2f},{:.2f}", px(series[s][k].first), py(series[s][k].second));
    }
    out += "\"/>\n";

    const double ly = kTop + 10 + 20.0 * s;
    const double lx = kLeft + plot_w + 15;
    out += fmt::format(
        "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" "
        "stroke-width=\"2\"/>\n",
        lx, ly, lx + 25, ly, colour);
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", lx + 32, ly + 4,
                       escape(label));
  }
  out += "</svg>\n";
  return out;
}

}  // namespace bspower
