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

// Sweeps over (family, N, m) points and their CSV / JSON / SVG renderings.
// Everything here goes through the C API.

#pragma once

#include "fqhe/fqhe.h"

#include <string>
#include <vector>

namespace fqhe::cli {

enum class Units { kBits, kNats };

struct Point {
  fqhe_family family = FQHE_FAMILY_LAUGHLIN;
  int n = 2;
  int m = 1;

  auto operator<=>(const Point&) const = default;
};

struct PointResult {
  Point point;
  fqhe_status status = FQHE_OK;
  fqhe_report report{};
  std::string error;
};

/// Evaluates every point on up to `jobs` threads. Results come back sorted
/// in canonical (family, N, m) order regardless of scheduling.
std::vector<PointResult> run_sweep(std::vector<Point> points, int jobs, int max_n);

/// Odd m from 1 to m_max inclusive.
std::vector<int> odd_range(int m_max);

struct Series {
  fqhe_family family;
  int n;
};

struct FigureSpec {
  int id = 1;
  std::string title;
  std::vector<Series> series;
  std::vector<int> m_values;
};

/// Throws std::invalid_argument for ids outside 1..5.
FigureSpec figure_spec(int id, int m_max);

std::vector<Point> figure_points(const FigureSpec& spec);

/// printf("%.12g").
std::string format_number(double x);

double value_in(const fqhe_report& report, Units units);

/// Header `t,m,family,N,S_f_bits` (or S_f_nats); zero-wavefunction points are
/// omitted. LF line endings.
std::string render_csv(const std::vector<PointResult>& results, Units units);

std::string render_json(const std::vector<PointResult>& results);
std::string render_json(const fqhe_report& report);

/// Self-contained scatter plot of the figure's series in ln2-bit units.
std::string render_svg(const FigureSpec& spec, const std::vector<PointResult>& results);

}  // namespace fqhe::cli
