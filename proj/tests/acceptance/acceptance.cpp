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


// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Usage: mdiasym_acceptance [path-to-mdiasym-cli]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "mdiasym/mdiasym.hpp"

namespace {

using namespace mdiasym;
constexpr double kPi = std::numbers::pi;

struct Check {
  bool ok = true;
  double worst = 0.0;
  std::string note;

  void near(double got, double want, double tol, const std::string& what) {
    const double err = std::abs(got - want);
    if (!(err <= tol)) {
      if (ok) {
        note = what + ": got " + format_number(got) + ", want " + format_number(want);
      }
      ok = false;
    }
    if (err > worst || std::isnan(err)) {
      worst = std::isnan(err) ? INFINITY : err;
    }
  }
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      note = what;
    }
    ok = ok && cond;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit; // seconds, 0 = none
  std::function<Check()> run;
};

const MdiHamiltonian& ham() { return canonical(); }

DensityMatrix pure_rho(double ta, double tb) { return DensityMatrix::from_pure(pure_product_state({ta, tb})); }

double grid(double lo, double hi, int i, int n) { return GridAxis{Param::T, lo, hi, static_cast<std::size_t>(n)}.node(i); }

Check ac1() {
  Check c;
  struct Landmark {
    double ta, tb, want;
  };
  const Landmark pts[] = {{kPi / 2, kPi / 2, 1.0}, {3 * kPi / 2, 3 * kPi / 2, 1.0}, {0.0, 0.0, 0.0},
                          {kPi, kPi, 0.0},         {0.0, kPi, 4.0 / 9.0},           {kPi, 0.0, 4.0 / 9.0},
                          {kPi / 2, 3 * kPi / 2, 1.0 / 9.0}};
  for (const auto& p : pts) {
    const std::string at = "(" + format_number(p.ta) + ", " + format_number(p.tb) + ")";
    c.near(wy_asymmetry(pure_rho(p.ta, p.tb), ham()).normalized, p.want, 1e-9, "matrix path " + at);
    c.near(closed_form_pure({p.ta, p.tb}), p.want, 1e-9, "closed form " + at);
  }
  const DensityMatrix bell_mix = DensityMatrix::from_pure(bell_superposition({0.5, 0.5, 0.5, 0.5}));
  c.near(wy_asymmetry(bell_mix, ham()).normalized, 6.0 / 9.0, 1e-9, "uniform Bell superposition");
  return c;
}

Check ac2() {
  Check c;
  const int n = 101;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double ta = grid(0, 2 * kPi, i, n), tb = grid(0, 2 * kPi, j, n);
      c.near(closed_form_pure({ta, tb}), wy_asymmetry(pure_rho(ta, tb), ham()).normalized, 1e-9, "pure closed form");
      const double ra = grid(-1, 1, i, n), rb = grid(-1, 1, j, n);
      c.near(closed_form_rho3(ra, rb), wy_asymmetry(bloch_product_state({BlochAxis::Z, ra, rb}), ham()).normalized,
             1e-9, "z-family closed form");
      c.near(closed_form_rho1(ra, rb), wy_asymmetry(bloch_product_state({BlochAxis::X, ra, rb}), ham()).normalized,
             1e-9, "x-family closed form");
    }
  }
  random::Rng rng(2026);
  for (int s = 0; s < 500; ++s) {
    const PureProductParams p = random::pure_params(rng);
    const double t = random::uniform(rng, -4 * kPi, 4 * kPi);
    const ComplexMatrix u = unitary_at(ham(), t);
    const ComplexMatrix closed = scale(evolve_pure_closed(p, t), std::exp(-kI * t));
    c.near(distance(closed, matmul(u, pure_product_state(p))), 0.0, 1e-9, "pure evolution closed form");
    c.near(unitary_asymmetry_pure_closed(p, t), unitary_asymmetry(DensityMatrix::from_pure(pure_product_state(p)), u),
           1e-9, "unitary asymmetry closed form");
    for (BlochAxis axis : {BlochAxis::Z, BlochAxis::X}) {
      const BlochProductParams b{axis, random::uniform(rng, -1, 1), random::uniform(rng, -1, 1)};
      c.near(distance(evolve_bloch_closed(b, t).matrix(), evolve_density(bloch_product_state(b), ham(), t).matrix()),
             0.0, 1e-9, "Bloch evolution closed form");
    }
  }
  return c;
}

Check ac3() {
  Check c;
  random::Rng rng(8);
  for (int s = 0; s < 500; ++s) {
    const DensityMatrix rho = random::density(rng, 4);
    const double t = random::uniform(rng, -10, 10);
    c.near(wy_asymmetry(evolve_density(rho, ham(), t), ham()).raw, wy_asymmetry(rho, ham()).raw, 1e-9,
           "time invariance");
  }
  return c;
}

Check ac4() {
  Check c;
  for (int i = 0; i <= 20; ++i) {
    const double r = grid(-1, 1, i, 21);
    const std::string at = " r=" + format_number(r);
    c.near(closed_form_rho3(r, r), 0.0, 1e-10, "z A(r,r)" + at);
    c.near(closed_form_rho3(r, -r), 4 * r * r / 9, 1e-10, "z A(r,-r)" + at);
    c.near(closed_form_rho1(r, r), r * r, 1e-10, "x A(r,r)" + at);
    c.near(closed_form_rho1(r, -r), r * r / 9, 1e-10, "x A(r,-r)" + at);
    auto matrix = [&](BlochAxis a, double ra, double rb) {
      return wy_asymmetry(bloch_product_state({a, ra, rb}), ham()).normalized;
    };
    c.near(matrix(BlochAxis::Z, r, r), 0.0, 1e-10, "z matrix A(r,r)" + at);
    c.near(matrix(BlochAxis::Z, r, -r), 4 * r * r / 9, 1e-10, "z matrix A(r,-r)" + at);
    c.near(matrix(BlochAxis::X, r, r), r * r, 1e-10, "x matrix A(r,r)" + at);
    c.near(matrix(BlochAxis::X, r, -r), r * r / 9, 1e-10, "x matrix A(r,-r)" + at);
  }
  return c;
}

Check ac5() {
  Check c;
  c.near(local_asymmetry(pure_rho(kPi / 2, kPi / 2), ham(), 0.0, Subsystem::A).normalized, 5.0 / 9.0, 1e-9,
         "local asymmetry at t=0");
  const double thetas[] = {0.3, kPi / 2, 2.0, 4.4};
  for (double ta : thetas) {
    for (double tb : thetas) {
      const DensityMatrix rho = pure_rho(ta, tb);
      for (int k = 0; k < 721; ++k) {
        const double t = grid(0, kPi, k, 721);
        c.near(local_asymmetry(rho, ham(), t + kPi, Subsystem::A).raw, local_asymmetry(rho, ham(), t, Subsystem::A).raw,
               1e-9, "pi-periodicity");
      }
    }
  }
  const int n = 51;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double ra = grid(-1, 1, i, n), rb = grid(-1, 1, j, n);
      const DensityMatrix z = bloch_product_state({BlochAxis::Z, ra, rb});
      const DensityMatrix x = bloch_product_state({BlochAxis::X, ra, rb});
      for (int k = 0; k < n; ++k) {
        const double t = grid(0, 2 * kPi, k, n);
        c.near(local_closed_form_rho3(ra, rb, t), local_asymmetry(z, ham(), t, Subsystem::A).normalized, 1e-9,
               "z local closed form (normalized)");
        c.near(local_closed_form_rho1(ra, rb, t), local_asymmetry(x, ham(), t, Subsystem::A).raw, 1e-9,
               "x local closed form (raw)");
      }
    }
  }
  return c;
}

Check ac6() {
  Check c;
  auto au = [](double ta, double tb, double t) {
    return unitary_asymmetry(pure_rho(ta, tb), unitary_at(ham(), t));
  };
  c.near(au(kPi / 2, kPi / 2, kPi / 3), 1.0, 1e-9, "(pi/2, pi/2, pi/3)");
  c.near(au(kPi, 0.0, kPi / 2), 1.0, 1e-9, "(pi, 0, pi/2)");
  for (int j = 0; j < 101; ++j) {
    const double tb = grid(0, 2 * kPi, j, 101);
    c.near(au(kPi / 2, tb, kPi), 1.0, 1e-9, "theta_a = pi/2 at t = pi");
    c.near(unitary_asymmetry_pure_closed({kPi / 2, tb}, kPi), 1.0, 1e-9, "closed, theta_a = pi/2 at t = pi");
  }
  for (int k = 0; k < 100; ++k) {
    const double t = 2 * kPi * k / 100.0;
    c.near(au(0.0, 0.0, t), 0.0, 1e-9, "|00> sweep");
    c.near(au(kPi, kPi, t), 0.0, 1e-9, "|11> sweep");
  }
  return c;
}

Check ac7() {
  Check c;
  const double g = wy_asymmetry(DensityMatrix::from_pure(bell::psi_minus()), ham()).raw;
  c.require(std::abs(g) <= 1e-12, "singlet generator asymmetry " + format_number(g));
  c.worst = std::abs(g);
  const double u = unitary_asymmetry(DensityMatrix::from_pure(ComplexMatrix::basis(4, 1)), unitary_at(ham(), kPi / 2));
  c.require(u >= 1.0 - 1e-9, "unitary asymmetry of |01> at pi/2 " + format_number(u));
  return c;
}

Check ac8() {
  Check c;
  const DensityMatrix s01 = DensityMatrix::from_pure(ComplexMatrix::basis(4, 1));
  c.near(concurrence(evolve_density(s01, ham(), kPi / 4)), 1.0, 1e-9, "concurrence of evolved |01>");
  std::vector<ComplexMatrix> us;
  for (int k = 0; k < 100; ++k) {
    us.push_back(unitary_at(ham(), grid(0, kPi, k, 100)));
  }
  const int n = 101;
  std::size_t asymmetric = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double ta = grid(0, 2 * kPi, i, n), tb = grid(0, 2 * kPi, j, n);
      const StateVector psi = pure_product_state({ta, tb});
      if (wy_asymmetry(DensityMatrix::from_pure(psi), ham()).normalized <= 1e-6) {
        continue;
      }
      ++asymmetric;
      double best = 0.0;
      for (const ComplexMatrix& u : us) {
        best = std::max(best, concurrence_pure(matmul(u, psi)));
      }
      c.require(best > 1e-6, "no entanglement at (" + format_number(ta) + ", " + format_number(tb) + ")");
    }
  }
  c.require(asymmetric > 0, "no asymmetric grid points");
  c.note = c.ok ? std::to_string(asymmetric) + " asymmetric points all entangle" : c.note;
  return c;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Check ac9(const std::string& cli) {
  Check c;
  if (cli.empty()) {
    c.require(false, "CLI path not given");
    return c;
  }
  const auto dir = std::filesystem::temp_directory_path() / ("mdiasym-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::vector<std::string> outputs;
  const std::pair<int, int> runs[] = {{1, 0}, {4, 0}, {8, 0}, {1, 1}, {8, 1}};
  for (const auto& [workers, run] : runs) {
    const auto out = dir / ("fig1-w" + std::to_string(workers) + "-r" + std::to_string(run) + ".csv");
    const std::string cmd = "\"" + cli + "\" figure fig1 --workers " + std::to_string(workers) + " --out \"" +
                            out.string() + "\" 2>/dev/null";
    c.require(std::system(cmd.c_str()) == 0, "figure fig1 exited non-zero");
    outputs.push_back(slurp(out));
  }
  c.require(!outputs.front().empty(), "empty output");
  for (const auto& o : outputs) {
    c.require(o == outputs.front(), "outputs differ");
  }
  c.note = c.ok ? std::to_string(outputs.front().size()) + " bytes, 5 runs identical" : c.note;
  std::filesystem::remove_all(dir);
  return c;
}

} // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {"AC1", "landmark global asymmetry values", 1.0, ac1},
      {"AC2", "closed forms agree with matrix path", 60.0, ac2},
      {"AC3", "generator asymmetry invariant under evolution", 0.0, ac3},
      {"AC4", "Bloch family identities", 0.0, ac4},
      {"AC5", "local asymmetry value, period and closed-form scales", 0.0, ac5},
      {"AC6", "unitary asymmetry landmarks", 0.0, ac6},
      {"AC7", "singlet subspace contrast", 0.0, ac7},
      {"AC8", "entanglement cross-check", 120.0, ac8},
      {"AC9", "figure output deterministic across workers and runs", 0.0, [&] { return ac9(cli); }},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.time_limit > 0 && secs >= cr.time_limit) {
      c.ok = false;
      c.note = "runtime " + format_number(secs) + " s exceeds " + format_number(cr.time_limit) + " s";
    }
    char line[256];
    std::snprintf(line, sizeof line, "%s %s  %-54s worst %.3g  %.2f s", cr.id, c.ok ? "PASS" : "FAIL", cr.title,
                  c.worst, secs);
    std::cout << line << (c.note.empty() ? "" : "  [" + c.note + "]") << '\n';
    failed += c.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
