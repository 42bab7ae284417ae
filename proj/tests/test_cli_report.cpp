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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

namespace fqhe::cli {
namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST_CASE("odd_range", "[cli]") {
  CHECK(odd_range(13) == std::vector<int>{1, 3, 5, 7, 9, 11, 13});
  CHECK(odd_range(4) == std::vector<int>{1, 3});
  CHECK(odd_range(0).empty());
}

TEST_CASE("format_number", "[cli]") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(2 * std::log(2.0) - 0.75 * std::log(3.0)) == "0.562335144619");
  CHECK(format_number(2.5) == "2.5");
}

TEST_CASE("figure specs", "[cli]") {
  const FigureSpec one = figure_spec(1, 13);
  REQUIRE(one.series.size() == 2);
  CHECK(one.series[0].family == FQHE_FAMILY_LAUGHLIN);
  CHECK(one.series[0].n == 2);
  CHECK(one.series[1].family == FQHE_FAMILY_HIERARCHICAL_PHI);
  CHECK(one.series[1].n == 2);
  CHECK(one.m_values.size() == 7);
  CHECK(figure_spec(2, 13).series[0].n == 3);
  const FigureSpec three = figure_spec(3, 13);
  CHECK((three.series[0].family == FQHE_FAMILY_LAUGHLIN && three.series[1].family == FQHE_FAMILY_LAUGHLIN));
  CHECK((three.series[0].n == 2 && three.series[1].n == 3));
  const FigureSpec four = figure_spec(4, 13);
  CHECK(four.series[1].family == FQHE_FAMILY_HIERARCHICAL_PHI);
  const FigureSpec five = figure_spec(5, 13);
  REQUIRE(five.series.size() == 1);
  CHECK(five.series[0].family == FQHE_FAMILY_CHI);
  CHECK(five.series[0].n == 4);
  CHECK(figure_points(one).size() == 14);
  CHECK_THROWS_AS(figure_spec(0, 13), std::invalid_argument);
  CHECK_THROWS_AS(figure_spec(6, 13), std::invalid_argument);
}

TEST_CASE("sweep results are canonical and independent of parallelism", "[cli]") {
  std::vector<Point> points = figure_points(figure_spec(1, 9));
  std::reverse(points.begin(), points.end());
  const auto serial = run_sweep(points, 1, FQHE_DEFAULT_MAX_N);
  const auto parallel = run_sweep(points, 4, FQHE_DEFAULT_MAX_N);
  REQUIRE(serial.size() == points.size());
  for (std::size_t i = 1; i < serial.size(); ++i) CHECK(serial[i - 1].point < serial[i].point);
  CHECK(render_csv(serial, Units::kBits) == render_csv(parallel, Units::kBits));
  CHECK(render_csv(serial, Units::kBits) == render_csv(run_sweep(points, 1, FQHE_DEFAULT_MAX_N), Units::kBits));
}

TEST_CASE("csv layout", "[cli]") {
  const auto results = run_sweep({{FQHE_FAMILY_LAUGHLIN, 2, 1}, {FQHE_FAMILY_LAUGHLIN, 2, 3}}, 2,
                                 FQHE_DEFAULT_MAX_N);
  const std::string csv = render_csv(results, Units::kBits);
  CHECK(csv.find('\r') == std::string::npos);
  const auto rows = lines(csv);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "t,m,family,N,S_f_bits");
  CHECK(rows[1] == "0,1,laughlin,2,0");
  CHECK(rows[2] == "1,3,laughlin,2,0.811278124459");
  CHECK(lines(render_csv(results, Units::kNats))[2] == "1,3,laughlin,2,0.562335144619");
}

TEST_CASE("bits equal nats over ln 2", "[cli][property]") {
  const auto results = run_sweep(figure_points(figure_spec(3, 13)), 4, FQHE_DEFAULT_MAX_N);
  for (const PointResult& r : results) {
    REQUIRE(r.status == FQHE_OK);
    CHECK(format_number(value_in(r.report, Units::kBits)) ==
          format_number(r.report.measure_nats / std::log(2.0)));
  }
}

TEST_CASE("figure 5 drops vanishing points", "[cli]") {
  const FigureSpec spec = figure_spec(5, 13);
  const auto results = run_sweep(figure_points(spec), 3, FQHE_DEFAULT_MAX_N);
  REQUIRE(results.size() == 7);
  CHECK(results[5].status == FQHE_ERR_ZERO_WAVEFUNCTION);
  CHECK(results[6].status == FQHE_ERR_ZERO_WAVEFUNCTION);
  CHECK(lines(render_csv(results, Units::kBits)).size() == 6);
  const std::string svg = render_svg(spec, results);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("omitted m=11,13") != std::string::npos);
  CHECK(svg.find("href") == std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("svg has one marker per point and series", "[cli]") {
  const FigureSpec spec = figure_spec(1, 5);
  const std::string svg = render_svg(spec, run_sweep(figure_points(spec), 2, FQHE_DEFAULT_MAX_N));
  CHECK(svg.find("laughlin") != std::string::npos);
  CHECK(svg.find("hierarchical_phi") != std::string::npos);
}

TEST_CASE("json output", "[cli]") {
  fqhe_report r{};
  REQUIRE(fqhe_compute(FQHE_FAMILY_LAUGHLIN, 2, 3, FQHE_DEFAULT_MAX_N, &r) == FQHE_OK);
  const std::string one = render_json(r);
  CHECK(one.find("\"measure_nats\"") != std::string::npos);
  CHECK(one.find("\"family\"") != std::string::npos);
  const std::string many = render_json(run_sweep({{FQHE_FAMILY_CHI, 2, 7}}, 1, FQHE_DEFAULT_MAX_N));
  CHECK(many.front() == '[');
}

}  // namespace
}  // namespace fqhe::cli
