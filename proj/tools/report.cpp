// Copyright 2026 The fqhe Authors
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

#include "report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fqhe::cli {

namespace {

PointResult evaluate(const Point& point, int max_n) {
  PointResult result{point, FQHE_OK, {}, {}};
  result.status = fqhe_compute(point.family, point.n, point.m, max_n, &result.report);
  if (result.status != FQHE_OK) result.error = fqhe_last_error();
  return result;
}

nlohmann::json to_json(const fqhe_report& r) {
  nlohmann::json j;
  if (r.has_family) {
    j["family"] = fqhe_family_name(r.family);
    j["m"] = r.m;
    j["t"] = r.t;
  }
  j["N"] = r.n;
  j["S_nats"] = r.entropy_nats;
  j["measure_nats"] = r.measure_nats;
  j["measure_bits"] = r.measure_bits;
  return j;
}

}  // namespace

std::vector<PointResult> run_sweep(std::vector<Point> points, int jobs, int max_n) {
  std::sort(points.begin(), points.end());
  std::vector<PointResult> results(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      results[i] = evaluate(points[i], max_n);
    }
  };
  const int threads = std::clamp(jobs, 1, std::max<int>(1, static_cast<int>(points.size())));
  std::vector<std::jthread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  return results;
}

std::vector<int> odd_range(int m_max) {
  std::vector<int> out;
  for (int m = 1; m <= m_max; m += 2) out.push_back(m);
  return out;
}

FigureSpec figure_spec(int id, int m_max) {
  FigureSpec spec{id, "", {}, odd_range(m_max)};
  switch (id) {
    case 1:
      spec.title = "N=2: Laughlin psi_m and hierarchical phi_m";
      spec.series = {{FQHE_FAMILY_LAUGHLIN, 2}, {FQHE_FAMILY_HIERARCHICAL_PHI, 2}};
      break;
    case 2:
      spec.title = "N=3: Laughlin psi'_m and hierarchical phi'_m";
      spec.series = {{FQHE_FAMILY_LAUGHLIN, 3}, {FQHE_FAMILY_HIERARCHICAL_PHI, 3}};
      break;
    case 3:
      spec.title = "Laughlin states, N=2 and N=3";
      spec.series = {{FQHE_FAMILY_LAUGHLIN, 2}, {FQHE_FAMILY_LAUGHLIN, 3}};
      break;
    case 4:
      spec.title = "Hierarchical phi states, N=2 and N=3";
      spec.series = {{FQHE_FAMILY_HIERARCHICAL_PHI, 2}, {FQHE_FAMILY_HIERARCHICAL_PHI, 3}};
      break;
    case 5:
      spec.title = "N=4: chi_m states, K=(1 1; 1 -(m-1))";
      spec.series = {{FQHE_FAMILY_CHI, 4}};
      break;
    default:
      throw std::invalid_argument("figure id must be in 1..5");
  }
  return spec;
}

std::vector<Point> figure_points(const FigureSpec& spec) {
  std::vector<Point> points;
  for (const auto& s : spec.series) {
    for (int m : spec.m_values) points.push_back({s.family, s.n, m});
  }
  return points;
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double value_in(const fqhe_report& report, Units units) {
  return units == Units::kBits ? report.measure_bits : report.measure_nats;
}

std::string render_csv(const std::vector<PointResult>& results, Units units) {
  std::string out = units == Units::kBits ? "t,m,family,N,S_f_bits\n" : "t,m,family,N,S_f_nats\n";
  for (const auto& r : results) {
    if (r.status != FQHE_OK) continue;
    out += format_number((r.point.m - 1) / 2.0) + "," + std::to_string(r.point.m) + "," +
           fqhe_family_name(r.point.family) + "," + std::to_string(r.point.n) + "," +
           format_number(value_in(r.report, units)) + "\n";
  }
  return out;
}

std::string render_json(const std::vector<PointResult>& results) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& r : results) {
    if (r.status == FQHE_OK) {
      points.push_back(to_json(r.report));
    } else {
      points.push_back({{"family", fqhe_family_name(r.point.family)},
                        {"N", r.point.n},
                        {"m", r.point.m},
                        {"t", (r.point.m - 1) / 2.0},
                        {"error", r.error},
                        {"zero_wavefunction", r.status == FQHE_ERR_ZERO_WAVEFUNCTION}});
    }
  }
  return points.dump(2) + "\n";
}

std::string render_json(const fqhe_report& report) { return to_json(report).dump(2) + "\n"; }

std::string render_svg(const FigureSpec& spec, const std::vector<PointResult>& results) {
  constexpr double kWidth = 640, kHeight = 440;
  constexpr double kLeft = 70, kRight = 170, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  const double t_max = spec.m_values.empty() ? 1.0 : std::max(1.0, (spec.m_values.back() - 1) / 2.0);
  double y_max = 0.0;
  for (const auto& r : results) {
    if (r.status == FQHE_OK) y_max = std::max(y_max, r.report.measure_bits);
  }
  y_max = y_max <= 0.0 ? 1.0 : std::ceil(y_max * 2.0) / 2.0;

  auto px = [&](double t) { return kLeft + plot_w * t / t_max; };
  auto py = [&](double s) { return kTop + plot_h * (1.0 - s / y_max); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" style=\"fill:#ffffff\"/>\n"
      << "<text x=\"" << kLeft << "\" y=\"24\" style=\"font-family:sans-serif;font-size:14px\">"
      << "Fig. " << spec.id << ": " << spec.title << "</text>\n";

  // Axes and ticks.
  svg << "<g style=\"stroke:#000000;stroke-width:1;fill:none\">\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << py(0) << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << py(0) << "\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << py(0) << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop << "\"/>\n";
  for (int t = 0; t <= static_cast<int>(t_max); ++t) {
    svg << "<line x1=\"" << px(t) << "\" y1=\"" << py(0) << "\" x2=\"" << px(t) << "\" y2=\""
        << py(0) + 5 << "\"/>\n";
  }
  const int y_ticks = static_cast<int>(std::round(y_max * 2.0));
  for (int k = 0; k <= y_ticks; ++k) {
    svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << py(k * 0.5) << "\" x2=\"" << kLeft
        << "\" y2=\"" << py(k * 0.5) << "\"/>\n";
  }
  svg << "</g>\n<g style=\"font-family:sans-serif;font-size:11px;fill:#000000\">\n";
  for (int t = 0; t <= static_cast<int>(t_max); ++t) {
    svg << "<text x=\"" << px(t) - 3 << "\" y=\"" << py(0) + 18 << "\">" << t << "</text>\n";
  }
  for (int k = 0; k <= y_ticks; ++k) {
    svg << "<text x=\"" << kLeft - 30 << "\" y=\"" << py(k * 0.5) + 4 << "\">"
        << format_number(k * 0.5) << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 - 40 << "\" y=\"" << kHeight - 20
      << "\" style=\"font-size:13px\">t = (m-1)/2</text>\n"
      << "<text x=\"18\" y=\"" << kTop + plot_h / 2 + 50
      << "\" style=\"font-size:13px\" transform=\"rotate(-90 18 " << kTop + plot_h / 2 + 50
      << ")\">S_f (ln2 bits)</text>\n</g>\n";

  // Boxes for the first series, crosses for the second.
  static const char* kColors[] = {"#1f4e9c", "#c0392b"};
  std::vector<int> omitted;
  for (std::size_t s = 0; s < spec.series.size(); ++s) {
    const auto& series = spec.series[s];
    const char* color = kColors[s % 2];
    svg << "<g style=\"stroke:" << color << ";stroke-width:1.5;fill:none\">\n";
    for (const auto& r : results) {
      if (r.point.family != series.family || r.point.n != series.n) continue;
      if (r.status != FQHE_OK) {
        omitted.push_back(r.point.m);
        continue;
      }
      const double x = px((r.point.m - 1) / 2.0);
      const double y = py(r.report.measure_bits);
      if (s % 2 == 0) {
        svg << "<rect x=\"" << x - 4 << "\" y=\"" << y - 4 << "\" width=\"8\" height=\"8\"/>\n";
      } else {
        svg << "<path d=\"M" << x - 4 << " " << y - 4 << " L" << x + 4 << " " << y + 4 << " M"
            << x - 4 << " " << y + 4 << " L" << x + 4 << " " << y - 4 << "\"/>\n";
      }
    }
    svg << "</g>\n";
    const double ly = kTop + 20 + 20 * static_cast<double>(s);
    svg << "<text x=\"" << kLeft + plot_w + 20 << "\" y=\"" << ly
        << "\" style=\"font-family:sans-serif;font-size:11px;fill:" << color << "\">"
        << (s % 2 == 0 ? "[box] " : "[cross] ") << fqhe_family_name(series.family)
        << " N=" << series.n << "</text>\n";
  }
  if (!omitted.empty()) {
    std::sort(omitted.begin(), omitted.end());
    omitted.erase(std::unique(omitted.begin(), omitted.end()), omitted.end());
    std::ostringstream ms;
    for (std::size_t i = 0; i < omitted.size(); ++i) ms << (i ? "," : "") << omitted[i];
    svg << "<text x=\"" << kLeft + plot_w + 20 << "\" y=\"" << kTop + 80
        << "\" style=\"font-family:sans-serif;font-size:10px;fill:#555555\">"
        << "omitted m=" << ms.str() << "</text>\n"
        << "<text x=\"" << kLeft + plot_w + 20 << "\" y=\"" << kTop + 94
        << "\" style=\"font-family:sans-serif;font-size:10px;fill:#555555\">"
        << "(m &gt; 2N+1: state vanishes)</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace fqhe::cli
