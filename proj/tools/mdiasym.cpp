// Copyright 2026 The mdiasym Authors
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

// Command-line front end: figure presets, custom scans, single-point
// evaluation and self-verification.
//
// Exit codes: 0 success, 1 verification or computation failure, 2 usage
// error, 3 I/O error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mdiasym/mdiasym.hpp"

namespace {

using namespace mdiasym;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct AngleFlags {
  bool degrees = false;
  [[nodiscard]] double angle(double v) const { return degrees ? v * std::numbers::pi / 180.0 : v; }
  [[nodiscard]] std::optional<double> angle(const std::optional<double>& v) const {
    return v ? std::optional<double>(angle(*v)) : std::nullopt;
  }
};

bool is_angle(Param p) { return p == Param::ThetaA || p == Param::ThetaB || p == Param::T; }

// Writes one or more grids either to stdout or to files derived from `out`.
void emit_panels(const std::vector<FigurePanel>& panels, const std::string& out, unsigned workers) {
  for (const FigurePanel& panel : panels) {
    const ScanResult result = run_scan(panel.spec, workers);
    std::cerr << panel.label << ": " << format_landmarks(result, landmark_report(result)) << '\n';
    if (out.empty() || out == "-") {
      write_figure_csv(std::cout, panel, result);
      std::cout.flush();
      if (!std::cout) {
        throw IoError("failed writing to standard output");
      }
      continue;
    }
    std::filesystem::path path(out);
    if (panels.size() > 1) {
      const std::string suffix = panel.label.substr(panel.label.find('-'));
      path.replace_filename(path.stem().string() + suffix + path.extension().string());
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
      throw IoError("cannot open " + path.string() + " for writing");
    }
    write_figure_csv(os, panel, result);
    os.close();
    if (!os) {
      throw IoError("failed writing " + path.string());
    }
  }
}

struct FigureArgs {
  std::string id;
  std::string out;
  std::size_t grid = kDefaultGridCount;
  unsigned workers = 0;
  std::string path = "both";
  std::optional<double> theta_b;
  std::optional<double> t;
  std::optional<double> r_b;
  std::string axis;
  AngleFlags angles;
};

int cmd_figure(const FigureArgs& a) {
  const auto id = parse_figure_id(a.id);
  if (!id) {
    throw ConfigError("unknown figure id '" + a.id + "' (expected fig1, fig2a, fig2b, fig3 ... fig7)");
  }
  FigureOptions opt;
  opt.grid = a.grid;
  opt.path = *parse_path(a.path);
  opt.theta_b = a.angles.angle(a.theta_b);
  opt.t = a.angles.angle(a.t);
  opt.r_b = a.r_b;
  if (a.axis == "x") {
    opt.axis = BlochAxis::X;
  } else if (a.axis == "z") {
    opt.axis = BlochAxis::Z;
  }
  emit_panels(figure_panels(*id, opt), a.out, a.workers);
  return kExitOk;
}

struct ScanArgs {
  std::string measure;
  std::string axis1;
  std::string axis2;
  std::vector<std::string> fixed;
  std::string out;
  unsigned workers = 0;
  std::string path = "both";
  AngleFlags angles;
};

GridAxis parse_axis(const std::string& text, const AngleFlags& angles) {
  // name:min:max:count
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = text.find(':', start)) != std::string::npos; start = pos + 1) {
    parts.push_back(text.substr(start, pos - start));
  }
  parts.push_back(text.substr(start));
  if (parts.size() != 4) {
    throw ConfigError("axis '" + text + "' must look like name:min:max:count");
  }
  const auto p = parse_param(parts[0]);
  if (!p) {
    throw ConfigError("unknown parameter '" + parts[0] + "'");
  }
  const double count = parse_number(parts[3]);
  if (count < 2 || count != std::floor(count)) {
    throw ConfigError("axis count must be an integer >= 2");
  }
  double lo = parse_number(parts[1]);
  double hi = parse_number(parts[2]);
  if (is_angle(*p)) {
    lo = angles.angle(lo);
    hi = angles.angle(hi);
  }
  return {*p, lo, hi, static_cast<std::size_t>(count)};
}

int cmd_scan(const ScanArgs& a) {
  const auto m = parse_measure(a.measure);
  if (!m) {
    throw ConfigError("unknown measure '" + a.measure + "'");
  }
  GridSpec spec;
  spec.measure = *m;
  spec.path = *parse_path(a.path);
  spec.axis1 = parse_axis(a.axis1, a.angles);
  spec.axis2 = parse_axis(a.axis2, a.angles);
  for (const std::string& f : a.fixed) {
    const auto eq = f.find('=');
    const auto p = eq == std::string::npos ? std::nullopt : parse_param(f.substr(0, eq));
    if (!p) {
      throw ConfigError("--fix expects name=value, got '" + f + "'");
    }
    double v = parse_number(f.substr(eq + 1));
    if (is_angle(*p)) {
      v = a.angles.angle(v);
    }
    spec.fixed.push_back({*p, v});
  }
  validate(spec);
  emit_panels({FigurePanel{"scan", FigureId::Fig1, spec}}, a.out, a.workers);
  return kExitOk;
}

struct EvalArgs {
  std::string measure;
  std::optional<double> theta_a;
  std::optional<double> theta_b;
  std::optional<double> r_a;
  std::optional<double> r_b;
  std::optional<double> t;
  AngleFlags angles;
};

int cmd_eval(const EvalArgs& a) {
  const auto m = parse_measure(a.measure);
  if (!m) {
    throw ConfigError("unknown measure '" + a.measure + "'");
  }
  ParamSet ps;
  const std::pair<Param, std::optional<double>> given[] = {
      {Param::ThetaA, a.angles.angle(a.theta_a)}, {Param::ThetaB, a.angles.angle(a.theta_b)},
      {Param::RA, a.r_a}, {Param::RB, a.r_b}, {Param::T, a.angles.angle(a.t)}};
  for (const auto& [p, v] : given) {
    if (v) {
      ps.set(p, *v);
    }
  }
  const PointValue pv = evaluate_point(*m, ps, EvalPath::Both);
  nlohmann::ordered_json j;
  j["measure"] = std::string(to_string(*m));
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (Param p : required_params(*m)) {
    params[std::string(to_string(p))] = ps.get(p);
  }
  j["params"] = params;
  if (has_raw_scale(*m)) {
    const AsymmetryValue v = generator_oracle(*m, ps);
    j["raw"] = v.raw;
    j["normalized"] = v.normalized;
  } else {
    j["raw"] = *pv.oracle;
  }
  j["closed_form"] = *pv.closed;
  j["deviation"] = *pv.deviation();
  std::cout << j.dump() << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::uint64_t seed = 42;
  std::size_t samples = 500;
  unsigned workers = 0;
};

int cmd_verify(const VerifyArgs& a) {
  VerifyOptions opt;
  opt.seed = a.seed;
  opt.samples = a.samples;
  opt.workers = a.workers;
  const auto outcomes = run_verification(opt);
  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    std::printf("%-4s  %-20s %-52s worst=%-12.3e tol=%.0e\n", o.passed ? "PASS" : "FAIL", o.module.c_str(),
                o.name.c_str(), o.worst, o.tolerance);
    if (!o.passed) {
      ++failed;
    }
  }
  for (const auto& o : outcomes) {
    if (!o.passed) {
      std::printf("failed: [%s] %s: worst %.6e > %.0e at %s\n", o.module.c_str(), o.name.c_str(), o.worst,
                  o.tolerance, o.worst_input.c_str());
    }
  }
  std::printf("%zu/%zu properties passed (seed %llu, samples %zu)\n", outcomes.size() - failed, outcomes.size(),
              static_cast<unsigned long long>(a.seed), a.samples);
  return failed == 0 ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner-Yanase asymmetry of two dipoles under the magnetic dipolar interaction"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  const std::vector<std::string> paths{"closed", "oracle", "both"};

  FigureArgs fig;
  auto* figure = app.add_subcommand("figure", "Write the grid of a figure preset as CSV");
  figure->add_option("id", fig.id, "fig1, fig2a, fig2b, fig3, fig4, fig5, fig6 or fig7")->required();
  figure->add_option("--out,-o", fig.out, "Output CSV path (default: standard output)");
  figure->add_option("--grid", fig.grid, "Nodes per axis")->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  figure->add_option("--workers", fig.workers, "Worker threads (default: all cores)");
  figure->add_option("--path", fig.path, "closed, oracle or both")->check(CLI::IsMember(paths));
  figure->add_option("--theta-b", fig.theta_b, "Fixed theta_b for fig3/fig6 (default pi/2)");
  figure->add_option("--t", fig.t, "Fixed time for fig4/fig7");
  figure->add_option("--axis", fig.axis, "Bloch axis for fig5")->check(CLI::IsMember({"x", "z"}));
  figure->add_option("--r-b", fig.r_b, "Fixed r_b for fig5");
  figure->add_flag("--deg", fig.angles.degrees, "Angles and times are given in degrees");

  ScanArgs sc;
  auto* scan = app.add_subcommand("scan", "Evaluate a measure over a custom grid");
  scan->add_option("--measure", sc.measure, "Measure name")->required();
  scan->add_option("--axis1", sc.axis1, "Outer axis as name:min:max:count")->required();
  scan->add_option("--axis2", sc.axis2, "Inner axis as name:min:max:count")->required();
  scan->add_option("--fix", sc.fixed, "Fixed parameter name=value (repeatable)");
  scan->add_option("--out,-o", sc.out, "Output CSV path (default: standard output)");
  scan->add_option("--workers", sc.workers, "Worker threads (default: all cores)");
  scan->add_option("--path", sc.path, "closed, oracle or both")->check(CLI::IsMember(paths));
  scan->add_flag("--deg", sc.angles.degrees, "Angles and times are given in degrees");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate one measure at one point and print JSON");
  eval->add_option("--measure", ev.measure, "Measure name")->required();
  eval->add_option("--theta-a", ev.theta_a);
  eval->add_option("--theta-b", ev.theta_b);
  eval->add_option("--r-a", ev.r_a);
  eval->add_option("--r-b", ev.r_b);
  eval->add_option("--t", ev.t);
  eval->add_flag("--deg", ev.angles.degrees, "Angles and times are given in degrees");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--seed", va.seed, "Random seed");
  verify->add_option("--samples", va.samples, "Random samples per property")->check(CLI::PositiveNumber);
  verify->add_option("--workers", va.workers, "Worker threads for scan properties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*figure) {
      return cmd_figure(fig);
    }
    if (*scan) {
      return cmd_scan(sc);
    }
    if (*eval) {
      return cmd_eval(ev);
    }
    return cmd_verify(va);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
