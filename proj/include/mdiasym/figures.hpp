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

#pragma once

// Named grid presets for the standard asymmetry surfaces, and the CSV
// layout the command-line tool writes for them.

#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mdiasym/csv.hpp"
#include "mdiasym/errors.hpp"
#include "mdiasym/scan.hpp"
#include "mdiasym/version.hpp"

namespace mdiasym {

enum class FigureId { Fig1, Fig2a, Fig2b, Fig3, Fig4, Fig5, Fig6, Fig7 };

inline constexpr std::size_t kDefaultGridCount = 201;

inline std::string_view to_string(FigureId id) {
  switch (id) {
  case FigureId::Fig1: return "fig1";
  case FigureId::Fig2a: return "fig2a";
  case FigureId::Fig2b: return "fig2b";
  case FigureId::Fig3: return "fig3";
  case FigureId::Fig4: return "fig4";
  case FigureId::Fig5: return "fig5";
  case FigureId::Fig6: return "fig6";
  case FigureId::Fig7: return "fig7";
  }
  return "?";
}

inline std::optional<FigureId> parse_figure_id(std::string_view s) {
  for (FigureId id : {FigureId::Fig1, FigureId::Fig2a, FigureId::Fig2b, FigureId::Fig3, FigureId::Fig4,
                      FigureId::Fig5, FigureId::Fig6, FigureId::Fig7}) {
    if (to_string(id) == s) {
      return id;
    }
  }
  return std::nullopt;
}

struct FigureOptions {
  std::optional<double> theta_b;
  std::optional<double> t;
  std::optional<double> r_b;
  std::optional<BlochAxis> axis;
  std::size_t grid = kDefaultGridCount;
  EvalPath path = EvalPath::Both;
};

/// One output grid of a preset; fig7 without a time yields three panels.
struct FigurePanel {
  std::string label;
  FigureId id;
  GridSpec spec;
};

/// Builds the grid(s) of a preset. Heat maps put the vertical parameter
/// (theta_b, r_b or t) on axis1 so rows read bottom-up as in a plot.
inline std::vector<FigurePanel> figure_panels(FigureId id, const FigureOptions& opt) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const std::size_t n = opt.grid;
  const GridAxis theta_a{Param::ThetaA, 0.0, two_pi, n};
  const GridAxis theta_b{Param::ThetaB, 0.0, two_pi, n};
  const GridAxis r_a{Param::RA, -1.0, 1.0, n};
  const GridAxis r_b{Param::RB, -1.0, 1.0, n};
  const GridAxis time{Param::T, 0.0, two_pi, n};
  const std::string name(to_string(id));

  auto panel = [&](Measure m, GridAxis a1, GridAxis a2, std::vector<FixedBinding> fixed) {
    return FigurePanel{name, id, GridSpec{a1, a2, std::move(fixed), m, opt.path}};
  };
  auto require = [&](const std::optional<double>& v, const char* flag) {
    if (!v) {
      throw ConfigError(name + " requires " + flag);
    }
    return *v;
  };

  std::vector<FigurePanel> out;
  switch (id) {
  case FigureId::Fig1: out.push_back(panel(Measure::GlobalPure, theta_b, theta_a, {})); break;
  case FigureId::Fig2a: out.push_back(panel(Measure::GlobalRho3, r_b, r_a, {})); break;
  case FigureId::Fig2b: out.push_back(panel(Measure::GlobalRho1, r_b, r_a, {})); break;
  case FigureId::Fig3:
    out.push_back(panel(Measure::LocalPure, time, theta_a,
                        {{Param::ThetaB, opt.theta_b.value_or(std::numbers::pi / 2.0)}}));
    break;
  case FigureId::Fig4:
    out.push_back(panel(Measure::LocalPure, theta_b, theta_a, {{Param::T, require(opt.t, "--t")}}));
    break;
  case FigureId::Fig5: {
    if (!opt.axis) {
      throw ConfigError(name + " requires --axis {x,z}");
    }
    const Measure m = *opt.axis == BlochAxis::X ? Measure::LocalRho1 : Measure::LocalRho3;
    out.push_back(panel(m, time, r_a, {{Param::RB, require(opt.r_b, "--r-b")}}));
    break;
  }
  case FigureId::Fig6:
    out.push_back(panel(Measure::UnitaryPure, time, theta_a,
                        {{Param::ThetaB, opt.theta_b.value_or(std::numbers::pi / 2.0)}}));
    break;
  case FigureId::Fig7:
    if (opt.t) {
      out.push_back(panel(Measure::UnitaryPure, theta_b, theta_a, {{Param::T, *opt.t}}));
    } else {
      const std::pair<const char*, double> times[] = {
          {"t-pi_3", std::numbers::pi / 3.0}, {"t-pi_2", std::numbers::pi / 2.0}, {"t-pi", std::numbers::pi}};
      for (const auto& [suffix, t] : times) {
        FigurePanel p = panel(Measure::UnitaryPure, theta_b, theta_a, {{Param::T, t}});
        p.label = name + "-" + suffix;
        out.push_back(std::move(p));
      }
    }
    break;
  }
  return out;
}

inline std::string describe_axis(const GridAxis& a) {
  return std::string(to_string(a.param)) + " [" + format_number(a.min) + ", " + format_number(a.max) + "] x " +
         std::to_string(a.count);
}

/// Comment lines identifying the preset, the grid, and the tool version.
inline std::vector<std::string> figure_header(const FigurePanel& panel) {
  const GridSpec& s = panel.spec;
  std::vector<std::string> lines;
  lines.push_back("preset: " + panel.label);
  lines.push_back("measure: " + std::string(to_string(s.measure)) + "  path: " + std::string(to_string(s.path)));
  lines.push_back("axis1: " + describe_axis(s.axis1));
  lines.push_back("axis2: " + describe_axis(s.axis2));
  std::string fixed = "fixed:";
  for (const auto& b : s.fixed) {
    fixed += " " + std::string(to_string(b.param)) + "=" + format_number(b.value);
  }
  if (s.fixed.empty()) {
    fixed += " none";
  }
  lines.push_back(fixed);
  lines.push_back(std::string("mdiasym ") + kVersion);
  return lines;
}

inline void write_figure_csv(std::ostream& os, const FigurePanel& panel, const ScanResult& result) {
  write_scan_csv(os, result, figure_header(panel));
}

/// One-line human summary of a landmark report.
inline std::string format_landmarks(const ScanResult& result, const LandmarkReport& rep) {
  const std::string n1(to_string(result.spec.axis1.param));
  const std::string n2(to_string(result.spec.axis2.param));
  std::string s = "max " + format_number(rep.max_value) + " at (" + n1 + "=" + format_number(rep.argmax.x1) + ", " +
                  n2 + "=" + format_number(rep.argmax.x2) + "); min " + format_number(rep.min_value) + " at (" +
                  n1 + "=" + format_number(rep.argmin.x1) + ", " + n2 + "=" + format_number(rep.argmin.x2) + ")";
  if (rep.max_deviation) {
    s += "; max |closed - oracle| " + format_number(*rep.max_deviation);
  }
  return s;
}

} // namespace mdiasym
