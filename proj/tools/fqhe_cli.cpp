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

// fqhe: command-line front end to libfqhe.
//
//   fqhe compute --family laughlin --n 2 --m 3 --units bits
//   fqhe table   --family hierarchical_phi --n 3 --m-max 13 --format csv
//   fqhe figure 1 --out figures/
//   fqhe verify --level full

#include "fqhe/fqhe.h"
#include "report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitZeroWavefunction = 2;
constexpr int kExitUsage = 64;

struct Options {
  std::string family = "laughlin";
  int n = 2;
  int m = 1;
  int m_max = 13;
  std::string units = "bits";
  std::string format;
  std::string out;
  int jobs = 1;
  int max_n = 5;
  int figure_id = 0;
  std::string level = "fast";
};

int usage_error(const CLI::App& app, const std::string& message) {
  std::cerr << "error: " << message << "\n\n" << app.help();
  return kExitUsage;
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << content;
  if (!file) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

fqhe::cli::Units parse_units(const std::string& units) {
  return units == "nats" ? fqhe::cli::Units::kNats : fqhe::cli::Units::kBits;
}

int run_compute(const CLI::App& app, const Options& o) {
  fqhe_family family;
  if (fqhe_family_parse(o.family.c_str(), &family) != FQHE_OK) {
    return usage_error(app, fqhe_last_error());
  }
  fqhe_report report;
  const fqhe_status status = fqhe_compute(family, o.n, o.m, o.max_n, &report);
  if (status == FQHE_ERR_ZERO_WAVEFUNCTION) {
    std::cerr << "zero wavefunction: m > 2N+1 (N=" << o.n << ", m=" << o.m << ")\n";
    return kExitZeroWavefunction;
  }
  if (status == FQHE_ERR_INVALID_ARGUMENT) return usage_error(app, fqhe_last_error());
  if (status != FQHE_OK) {
    std::cerr << "error: " << fqhe_last_error() << "\n";
    return kExitFailure;
  }
  const auto units = parse_units(o.units);
  std::string text;
  if (o.format == "json") {
    text = fqhe::cli::render_json(report);
  } else if (o.format == "csv") {
    fqhe::cli::PointResult point{{family, o.n, o.m}, FQHE_OK, report, {}};
    text = fqhe::cli::render_csv({point}, units);
  } else {
    const std::string unit_name = units == fqhe::cli::Units::kBits ? "bits" : "nats";
    text = "family " + std::string(fqhe_family_name(family)) + "\nN " + std::to_string(o.n) +
           "\nm " + std::to_string(o.m) + "\nt " + fqhe::cli::format_number(report.t) +
           "\nS_nats " + fqhe::cli::format_number(report.entropy_nats) + "\nS_f_" + unit_name +
           " " + fqhe::cli::format_number(fqhe::cli::value_in(report, units)) + "\n";
  }
  return write_output(o.out, text) ? kExitOk : kExitFailure;
}

int run_table(const CLI::App& app, const Options& o) {
  fqhe_family family;
  if (fqhe_family_parse(o.family.c_str(), &family) != FQHE_OK) {
    return usage_error(app, fqhe_last_error());
  }
  std::vector<fqhe::cli::Point> points;
  for (int m : fqhe::cli::odd_range(o.m_max)) points.push_back({family, o.n, m});
  const auto results = fqhe::cli::run_sweep(points, o.jobs, o.max_n);
  for (const auto& r : results) {
    if (r.status == FQHE_ERR_ZERO_WAVEFUNCTION) {
      std::cerr << "note: m=" << r.point.m << " omitted (zero wavefunction: m > 2N+1)\n";
    } else if (r.status == FQHE_ERR_INVALID_ARGUMENT) {
      return usage_error(app, r.error);
    } else if (r.status != FQHE_OK) {
      std::cerr << "error: " << r.error << "\n";
      return kExitFailure;
    }
  }
  const std::string text = o.format == "json" ? fqhe::cli::render_json(results)
                                              : fqhe::cli::render_csv(results, parse_units(o.units));
  return write_output(o.out, text) ? kExitOk : kExitFailure;
}

int run_figure(const CLI::App& app, const Options& o) {
  if (o.figure_id < 1 || o.figure_id > 5) return usage_error(app, "figure id must be in 1..5");
  if (!o.format.empty() && o.format != "csv" && o.format != "svg") {
    return usage_error(app, "figure writes csv and/or svg, not " + o.format);
  }
  const auto spec = fqhe::cli::figure_spec(o.figure_id, o.m_max);
  const auto results = fqhe::cli::run_sweep(fqhe::cli::figure_points(spec), o.jobs, o.max_n);
  for (const auto& r : results) {
    if (r.status != FQHE_OK && r.status != FQHE_ERR_ZERO_WAVEFUNCTION) {
      std::cerr << "error: " << r.error << "\n";
      return r.status == FQHE_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
    }
  }
  const std::filesystem::path dir = o.out.empty() ? "." : o.out;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::string stem = "figure" + std::to_string(o.figure_id);
  const bool csv = o.format.empty() || o.format == "csv";
  const bool svg = o.format.empty() || o.format == "svg";
  if (csv) {
    const auto path = dir / (stem + ".csv");
    if (!write_output(path.string(), fqhe::cli::render_csv(results, fqhe::cli::Units::kBits))) {
      return kExitFailure;
    }
    std::cout << "wrote " << path.string() << "\n";
  }
  if (svg) {
    const auto path = dir / (stem + ".svg");
    if (!write_output(path.string(), fqhe::cli::render_svg(spec, results))) return kExitFailure;
    std::cout << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

void print_check(const char* name, int passed, int informational, const char* detail, void*) {
  const char* tag = informational ? "INFO" : (passed ? "PASS" : "FAIL");
  std::cout << "[" << tag << "] " << name << ": " << detail << "\n";
}

int run_verify(const Options& o) {
  int failures = 0;
  const fqhe_status status = fqhe_verify(o.level == "full", print_check, nullptr, &failures);
  if (status != FQHE_OK) {
    std::cerr << "error: " << fqhe_last_error() << "\n";
    return kExitFailure;
  }
  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
            << "\n";
  return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement of Laughlin and K-matrix hierarchical quantum Hall states", "fqhe"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read flat `key = value` settings (flags take precedence)");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Options o;
  app.add_option("--family", o.family, "laughlin | hierarchical_phi | chi")
      ->check(CLI::IsMember({"laughlin", "hierarchical_phi", "phi", "psi", "chi"}));
  app.add_option("--n", o.n, "Electron number N")->check(CLI::PositiveNumber);
  app.add_option("--m", o.m, "Odd exponent m")->check(CLI::PositiveNumber);
  app.add_option("--m-max", o.m_max, "Largest m in sweeps (default 13, i.e. t = 0..6)")
      ->check(CLI::PositiveNumber);
  app.add_option("--units", o.units, "bits | nats")->check(CLI::IsMember({"bits", "nats"}));
  app.add_option("--format", o.format, "text | csv | json | svg")
      ->check(CLI::IsMember({"text", "csv", "json", "svg"}));
  app.add_option("--out", o.out, "Output file (compute/table) or directory (figure)");
  app.add_option("--jobs", o.jobs, "Parallel workers for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--max-n", o.max_n, "Largest N accepted")->check(CLI::PositiveNumber);
  app.add_option("--level", o.level, "Verification level: fast | full")
      ->check(CLI::IsMember({"fast", "full"}));

  auto* compute = app.add_subcommand("compute", "Entanglement of one (family, N, m) point");
  auto* table = app.add_subcommand("table", "Sweep odd m = 1..m-max for one family and N");
  auto* figure = app.add_subcommand("figure", "Write figure<id>.csv and figure<id>.svg");
  figure->add_option("id,--id", o.figure_id, "Figure id 1..5");
  auto* verify = app.add_subcommand("verify", "Run the built-in verification suite");
  for (auto* sub : {compute, table, figure, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage_error(app, e.what());
  }

  if (compute->parsed()) return run_compute(app, o);
  if (table->parsed()) return run_table(app, o);
  if (figure->parsed()) return run_figure(app, o);
  return run_verify(o);
}
