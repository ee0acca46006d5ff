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

// Rectangular parameter sweeps over any measure, evaluated row-parallel
// into a preallocated grid so results never depend on scheduling.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "mdiasym/asymmetry.hpp"
#include "mdiasym/entanglement.hpp"
#include "mdiasym/errors.hpp"
#include "mdiasym/model.hpp"

namespace mdiasym {

enum class Param { ThetaA, ThetaB, RA, RB, T };

enum class Measure {
  GlobalPure,
  GlobalRho1,
  GlobalRho3,
  LocalPure,
  LocalRho1,
  LocalRho3,
  UnitaryPure,
  ConcurrencePure,
};

enum class EvalPath { ClosedForm, Oracle, Both };

inline constexpr std::array<Param, 5> kAllParams{Param::ThetaA, Param::ThetaB, Param::RA, Param::RB, Param::T};
inline constexpr std::array<Measure, 8> kAllMeasures{
    Measure::GlobalPure, Measure::GlobalRho1,  Measure::GlobalRho3,  Measure::LocalPure,
    Measure::LocalRho1,  Measure::LocalRho3,   Measure::UnitaryPure, Measure::ConcurrencePure,
};

inline std::string_view to_string(Param p) {
  switch (p) {
  case Param::ThetaA: return "theta_a";
  case Param::ThetaB: return "theta_b";
  case Param::RA: return "r_a";
  case Param::RB: return "r_b";
  case Param::T: return "t";
  }
  return "?";
}

inline std::string_view to_string(Measure m) {
  switch (m) {
  case Measure::GlobalPure: return "global-pure";
  case Measure::GlobalRho1: return "global-rho1";
  case Measure::GlobalRho3: return "global-rho3";
  case Measure::LocalPure: return "local-pure";
  case Measure::LocalRho1: return "local-rho1";
  case Measure::LocalRho3: return "local-rho3";
  case Measure::UnitaryPure: return "unitary-pure";
  case Measure::ConcurrencePure: return "concurrence-pure";
  }
  return "?";
}

inline std::string_view to_string(EvalPath p) {
  switch (p) {
  case EvalPath::ClosedForm: return "closed";
  case EvalPath::Oracle: return "oracle";
  case EvalPath::Both: return "both";
  }
  return "?";
}

inline std::optional<Param> parse_param(std::string_view s) {
  for (Param p : kAllParams) {
    if (to_string(p) == s) {
      return p;
    }
  }
  return std::nullopt;
}

inline std::optional<Measure> parse_measure(std::string_view s) {
  for (Measure m : kAllMeasures) {
    if (to_string(m) == s) {
      return m;
    }
  }
  return std::nullopt;
}

inline std::optional<EvalPath> parse_path(std::string_view s) {
  for (EvalPath p : {EvalPath::ClosedForm, EvalPath::Oracle, EvalPath::Both}) {
    if (to_string(p) == s) {
      return p;
    }
  }
  return std::nullopt;
}

/// Parameters a measure consumes.
inline std::vector<Param> required_params(Measure m) {
  switch (m) {
  case Measure::GlobalPure: return {Param::ThetaA, Param::ThetaB};
  case Measure::GlobalRho1:
  case Measure::GlobalRho3: return {Param::RA, Param::RB};
  case Measure::LocalPure:
  case Measure::UnitaryPure:
  case Measure::ConcurrencePure: return {Param::ThetaA, Param::ThetaB, Param::T};
  case Measure::LocalRho1:
  case Measure::LocalRho3: return {Param::RA, Param::RB, Param::T};
  }
  return {};
}

/// Generator-based measures are reported on the normalized scale.
inline bool has_raw_scale(Measure m) {
  return m != Measure::UnitaryPure && m != Measure::ConcurrencePure;
}

/// Values for every parameter; unset entries are NaN.
class ParamSet {
public:
  ParamSet() { values_.fill(std::numeric_limits<double>::quiet_NaN()); }

  ParamSet& set(Param p, double v) {
    values_[index(p)] = v;
    return *this;
  }
  [[nodiscard]] double get(Param p) const { return values_[index(p)]; }
  [[nodiscard]] bool has(Param p) const { return !std::isnan(values_[index(p)]); }

  [[nodiscard]] PureProductParams pure() const { return {get(Param::ThetaA), get(Param::ThetaB)}; }
  [[nodiscard]] BlochProductParams bloch(BlochAxis axis) const { return {axis, get(Param::RA), get(Param::RB)}; }

private:
  static std::size_t index(Param p) { return static_cast<std::size_t>(p); }
  std::array<double, 5> values_{};
};

/// Result of evaluating one measure at one point. Either route may be absent
/// depending on the requested path.
struct PointValue {
  std::optional<double> closed;
  std::optional<double> oracle;

  /// The closed form when present, otherwise the oracle.
  [[nodiscard]] double value() const { return closed ? *closed : *oracle; }
  [[nodiscard]] std::optional<double> deviation() const {
    if (closed && oracle) {
      return std::abs(*closed - *oracle);
    }
    return std::nullopt;
  }
};

/// Shared canonical Hamiltonian (D = 1, n = z).
inline const MdiHamiltonian& canonical() {
  static const MdiHamiltonian h = canonical_hamiltonian();
  return h;
}

namespace detail {

inline double closed_value(Measure m, const ParamSet& ps) {
  const double t = ps.get(Param::T);
  switch (m) {
  case Measure::GlobalPure: return closed_form_pure(ps.pure());
  case Measure::GlobalRho1: return closed_form_rho1(ps.get(Param::RA), ps.get(Param::RB));
  case Measure::GlobalRho3: return closed_form_rho3(ps.get(Param::RA), ps.get(Param::RB));
  case Measure::LocalPure: return local_asymmetry_pure_closed(ps.pure(), t, Subsystem::A).normalized;
  case Measure::LocalRho1:
    return kCanonicalNormalization * local_closed_form_rho1(ps.get(Param::RA), ps.get(Param::RB), t);
  case Measure::LocalRho3: return local_closed_form_rho3(ps.get(Param::RA), ps.get(Param::RB), t);
  case Measure::UnitaryPure: return unitary_asymmetry_pure_closed(ps.pure(), t);
  case Measure::ConcurrencePure: return concurrence_pure(evolve_pure_closed(ps.pure(), t));
  }
  throw ConfigError("unknown measure");
}

inline double oracle_value(Measure m, const ParamSet& ps);

} // namespace detail

/// Matrix-route skew information for the generator-based measures
/// (global and local); throws ConfigError for the others.
inline AsymmetryValue generator_oracle(Measure m, const ParamSet& ps) {
  const MdiHamiltonian& h = canonical();
  const double t = ps.get(Param::T);
  switch (m) {
  case Measure::GlobalPure: return wy_asymmetry(DensityMatrix::from_pure(pure_product_state(ps.pure())), h);
  case Measure::GlobalRho1: return wy_asymmetry(bloch_product_state(ps.bloch(BlochAxis::X)), h);
  case Measure::GlobalRho3: return wy_asymmetry(bloch_product_state(ps.bloch(BlochAxis::Z)), h);
  case Measure::LocalPure:
    return local_asymmetry(DensityMatrix::from_pure(pure_product_state(ps.pure())), h, t, Subsystem::A);
  case Measure::LocalRho1: return local_asymmetry(bloch_product_state(ps.bloch(BlochAxis::X)), h, t, Subsystem::A);
  case Measure::LocalRho3: return local_asymmetry(bloch_product_state(ps.bloch(BlochAxis::Z)), h, t, Subsystem::A);
  case Measure::UnitaryPure:
  case Measure::ConcurrencePure: break;
  }
  throw ConfigError(std::string(to_string(m)) + " is not a generator asymmetry");
}

namespace detail {

inline double oracle_value(Measure m, const ParamSet& ps) {
  const MdiHamiltonian& h = canonical();
  const double t = ps.get(Param::T);
  switch (m) {
  case Measure::UnitaryPure:
    return unitary_asymmetry(DensityMatrix::from_pure(pure_product_state(ps.pure())), unitary_at(h, t));
  case Measure::ConcurrencePure:
    return concurrence(evolve_density(DensityMatrix::from_pure(pure_product_state(ps.pure())), h, t));
  default: return generator_oracle(m, ps).normalized;
  }
}

} // namespace detail

/// Evaluates `m` at `ps` along the requested route(s). Every parameter in
/// required_params(m) must be set.
inline PointValue evaluate_point(Measure m, const ParamSet& ps, EvalPath path) {
  for (Param p : required_params(m)) {
    if (!ps.has(p)) {
      throw ConfigError(std::string(to_string(m)) + ": missing parameter " + std::string(to_string(p)));
    }
  }
  PointValue out;
  if (path != EvalPath::Oracle) {
    out.closed = detail::closed_value(m, ps);
  }
  if (path != EvalPath::ClosedForm) {
    out.oracle = detail::oracle_value(m, ps);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grid description
// ---------------------------------------------------------------------------

struct GridAxis {
  Param param = Param::ThetaA;
  double min = 0.0;
  double max = 1.0;
  std::size_t count = 2;

  /// Node i; the endpoints are exactly min and max, and i/(count-1) is formed
  /// first so that dyadic fractions of the range are exact.
  [[nodiscard]] double node(std::size_t i) const {
    if (i + 1 == count) {
      return max;
    }
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    return min + (max - min) * f;
  }
};

struct FixedBinding {
  Param param;
  double value;
};

struct GridSpec {
  GridAxis axis1;
  GridAxis axis2;
  std::vector<FixedBinding> fixed;
  Measure measure = Measure::GlobalPure;
  EvalPath path = EvalPath::Both;
};

inline void validate(const GridSpec& spec) {
  for (const GridAxis* ax : {&spec.axis1, &spec.axis2}) {
    if (!(std::isfinite(ax->min) && std::isfinite(ax->max)) || !(ax->min < ax->max)) {
      throw ConfigError("grid axis " + std::string(to_string(ax->param)) + ": require min < max");
    }
    if (ax->count < 2) {
      throw ConfigError("grid axis " + std::string(to_string(ax->param)) + ": count must be >= 2");
    }
  }
  if (spec.axis1.param == spec.axis2.param) {
    throw ConfigError("grid axes must name distinct parameters");
  }
  const std::vector<Param> needed = required_params(spec.measure);
  auto needs = [&](Param p) { return std::find(needed.begin(), needed.end(), p) != needed.end(); };
  for (const GridAxis* ax : {&spec.axis1, &spec.axis2}) {
    if (!needs(ax->param)) {
      throw ConfigError("measure " + std::string(to_string(spec.measure)) + " does not use parameter " +
                        std::string(to_string(ax->param)));
    }
  }
  std::vector<Param> covered{spec.axis1.param, spec.axis2.param};
  for (const FixedBinding& b : spec.fixed) {
    if (!needs(b.param)) {
      throw ConfigError("fixed binding " + std::string(to_string(b.param)) + " is not used by measure " +
                        std::string(to_string(spec.measure)));
    }
    if (std::find(covered.begin(), covered.end(), b.param) != covered.end()) {
      throw ConfigError("parameter " + std::string(to_string(b.param)) + " bound more than once");
    }
    if (!std::isfinite(b.value)) {
      throw ConfigError("fixed binding " + std::string(to_string(b.param)) + " is not finite");
    }
    covered.push_back(b.param);
  }
  for (Param p : needed) {
    if (std::find(covered.begin(), covered.end(), p) == covered.end()) {
      throw ConfigError("measure " + std::string(to_string(spec.measure)) + " needs parameter " +
                        std::string(to_string(p)));
    }
  }
}

/// Failure at a specific grid node.
class ScanPointError : public NumericError {
public:
  ScanPointError(std::size_t row, std::size_t col, double x1, double x2, const std::string& what)
      : NumericError("scan failed at node (" + std::to_string(row) + ", " + std::to_string(col) + ") = (" +
                     std::to_string(x1) + ", " + std::to_string(x2) + "): " + what),
        row_(row), col_(col) {}

  [[nodiscard]] std::size_t row() const noexcept { return row_; }
  [[nodiscard]] std::size_t col() const noexcept { return col_; }

private:
  std::size_t row_;
  std::size_t col_;
};

/// Row-major grid (axis1 outer, axis2 inner) of measure values. When both
/// routes were evaluated, `deviations` holds |closed - oracle| per node.
struct ScanResult {
  GridSpec spec;
  std::vector<double> values;
  std::optional<std::vector<double>> deviations;
  std::optional<double> max_deviation;

  [[nodiscard]] std::size_t rows() const noexcept { return spec.axis1.count; }
  [[nodiscard]] std::size_t cols() const noexcept { return spec.axis2.count; }
  [[nodiscard]] double at(std::size_t r, std::size_t c) const { return values[r * cols() + c]; }
};

inline ParamSet params_at(const GridSpec& spec, std::size_t row, std::size_t col) {
  ParamSet ps;
  for (const FixedBinding& b : spec.fixed) {
    ps.set(b.param, b.value);
  }
  ps.set(spec.axis1.param, spec.axis1.node(row));
  ps.set(spec.axis2.param, spec.axis2.node(col));
  return ps;
}

/// Evaluates every node of the grid with up to `workers` threads
/// (0 = hardware concurrency). Output is identical for any worker count.
inline ScanResult run_scan(const GridSpec& spec, unsigned workers = 0) {
  validate(spec);
  const std::size_t rows = spec.axis1.count;
  const std::size_t cols = spec.axis2.count;
  ScanResult result{spec, std::vector<double>(rows * cols), std::nullopt, std::nullopt};
  const bool both = spec.path == EvalPath::Both;
  if (both) {
    result.deviations = std::vector<double>(rows * cols);
  }

  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, rows));

  std::atomic<std::size_t> next_row{0};
  std::mutex error_mutex;
  std::optional<ScanPointError> first_error;

  auto work = [&] {
    for (std::size_t r = next_row.fetch_add(1); r < rows; r = next_row.fetch_add(1)) {
      for (std::size_t c = 0; c < cols; ++c) {
        try {
          const PointValue pv = evaluate_point(spec.measure, params_at(spec, r, c), spec.path);
          const double v = pv.value();
          if (!std::isfinite(v)) {
            throw NumericError("non-finite value");
          }
          result.values[r * cols + c] = v;
          if (both) {
            (*result.deviations)[r * cols + c] = *pv.deviation();
          }
        } catch (const std::exception& e) {
          const std::lock_guard lock(error_mutex);
          if (!first_error || r < first_error->row() || (r == first_error->row() && c < first_error->col())) {
            first_error.emplace(r, c, spec.axis1.node(r), spec.axis2.node(c), e.what());
          }
          break;
        }
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) {
      pool.emplace_back(work);
    }
  }
  if (first_error) {
    throw *first_error;
  }
  if (both) {
    result.max_deviation = *std::max_element(result.deviations->begin(), result.deviations->end());
  }
  return result;
}

// ---------------------------------------------------------------------------
// Landmarks
// ---------------------------------------------------------------------------

/// Values within this distance of the extremum count as ties; ties resolve to
/// the lowest row-major index.
inline constexpr double kLandmarkTieTolerance = 1e-12;

struct GridPoint {
  std::size_t row = 0;
  std::size_t col = 0;
  double x1 = 0.0;
  double x2 = 0.0;
};

struct LandmarkReport {
  double max_value = 0.0;
  GridPoint argmax;
  double min_value = 0.0;
  GridPoint argmin;
  std::optional<double> max_deviation;
};

inline LandmarkReport landmark_report(const ScanResult& result) {
  const auto& v = result.values;
  const double hi = *std::max_element(v.begin(), v.end());
  const double lo = *std::min_element(v.begin(), v.end());
  std::size_t imax = 0;
  while (v[imax] < hi - kLandmarkTieTolerance) {
    ++imax;
  }
  std::size_t imin = 0;
  while (v[imin] > lo + kLandmarkTieTolerance) {
    ++imin;
  }
  auto point = [&](std::size_t idx) {
    const std::size_t r = idx / result.cols();
    const std::size_t c = idx % result.cols();
    return GridPoint{r, c, result.spec.axis1.node(r), result.spec.axis2.node(c)};
  };
  return {v[imax], point(imax), v[imin], point(imin), result.max_deviation};
}

} // namespace mdiasym
