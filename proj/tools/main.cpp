// Copyright 2026 The entbound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entbound/bounds.hpp"
#include "entbound/parallel.hpp"
#include "entbound/random.hpp"
#include "entbound/states.hpp"
#include "entbound/thermal.hpp"

namespace {

// Exit codes: 0 ok, 2 validation, 3 parse, 4 numeric failure.
constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;
constexpr int kExitNumeric = 4;

std::string fmt_real(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

struct RandomSweepConfig {
  std::uint64_t n = 1000;
  int dm_min = 2;
  int dm_max = 10;
  int offset = 0;  // 0 = balanced
  std::uint64_t seed = 1;
};

struct ThermalSweepConfig {
  entbound::ThermalParams params;
  entbound::SweepVariable var = entbound::SweepVariable::gamma;
  double from = 0.0;
  double to = 1.0;
  std::size_t steps = 2;
};

int cmd_report(const std::string& path) {
  const entbound::QdmState raw = entbound::load_qdm(path);
  const entbound::DensityMatrix rho = entbound::validate(raw.mat, raw.part);
  const entbound::BoundsReport r = entbound::make_report(rho);

  std::ostringstream csv;
  csv << "d1,d2,purity,s_linear,negativity,q1,q2,q3,q,p_c\n"
      << r.d1 << ',' << r.d2 << ',' << fmt_real(r.purity) << ','
      << fmt_real(r.s_linear) << ',' << fmt_real(r.negativity) << ','
      << fmt_real(r.q1) << ',' << fmt_real(r.q2) << ',' << fmt_real(r.q3)
      << ',' << fmt_real(r.q) << ',' << fmt_real(r.p_critical) << '\n';
  std::cout << csv.str() << std::flush;

  std::ostringstream human;
  human << "state: " << r.d1 << " x " << r.d2 << " (d = " << r.d1 * r.d2
        << ")\n"
        << "purity: " << fmt_real(r.purity)
        << "  linear entropy: " << fmt_real(r.s_linear) << '\n'
        << "negativity: " << fmt_real(r.negativity) << '\n'
        << "bounds: q1 " << fmt_real(r.q1) << "  q2 " << fmt_real(r.q2)
        << "  q3 " << fmt_real(r.q3) << "  ->  q = " << fmt_real(r.q) << '\n'
        << "negativity <= q: " << (r.negativity <= r.q + 1e-9 ? "yes" : "NO")
        << "  (margin " << fmt_real(r.q - r.negativity) << ")\n"
        << "critical purity: " << fmt_real(r.p_critical) << '\n';
  std::cerr << human.str();
  return kExitOk;
}

int cmd_random_sweep(const RandomSweepConfig& cfg) {
  struct Row {
    int d1;
    int d2;
    double purity;
    double negativity;
    double q1;
    double q2;
  };
  std::vector<Row> rows(cfg.n);

  entbound::parallel_run(cfg.n, [&](std::size_t i) {
    const entbound::Bipartition part = entbound::sweep_dims(
        cfg.seed, i, cfg.dm_min, cfg.dm_max, cfg.offset);
    const entbound::DensityMatrix rho = entbound::random_density_hs(
        part, entbound::SampleStream{cfg.seed, i});
    Row& row = rows[i];
    row.d1 = part.d1();
    row.d2 = part.d2();
    row.purity = entbound::purity(rho);
    row.negativity = entbound::negativity(rho);
    row.q1 = entbound::q1_bound(row.purity, part.d(), part.d_min());
    row.q2 = entbound::q2_bound(row.purity, part.d(), part.d_min());
  });

  std::ostringstream csv;
  csv << "index,d1,d2,purity,negativity,q1,q2,delta1,delta2\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    csv << i << ',' << row.d1 << ',' << row.d2 << ','
        << fmt_real(row.purity) << ',' << fmt_real(row.negativity) << ','
        << fmt_real(row.q1) << ',' << fmt_real(row.q2) << ','
        << fmt_real(row.q1 - row.negativity) << ','
        << fmt_real(row.q2 - row.negativity) << '\n';
  }
  std::cout << csv.str() << std::flush;
  return kExitOk;
}

int cmd_pc_surface(int d_min, int d_max, int dm_min, int dm_max) {
  if (d_min < 4 || d_max < d_min || dm_min < 2 || dm_max < dm_min) {
    throw entbound::DomainError(
        "pc-surface: need 4 <= d-min <= d-max and 2 <= dm-min <= dm-max");
  }
  std::ostringstream csv;
  csv << "d,d_m,p_c,p_min\n";
  for (int d = d_min; d <= d_max; ++d) {
    for (int d_m = dm_min; d_m <= dm_max; ++d_m) {
      if (d_m * d_m > d) continue;
      csv << d << ',' << d_m << ',' << fmt_real(entbound::p_critical(d, d_m))
          << ',' << fmt_real(1.0 / static_cast<double>(d)) << '\n';
    }
  }
  std::cout << csv.str() << std::flush;
  return kExitOk;
}

int cmd_thermal_sweep(const ThermalSweepConfig& cfg) {
  if (cfg.steps < 2) {
    throw entbound::DomainError("thermal-sweep: steps must be at least 2");
  }
  if (!(cfg.from < cfg.to)) {
    throw entbound::DomainError("thermal-sweep: need from < to");
  }
  std::vector<double> grid(cfg.steps);
  for (std::size_t i = 0; i < cfg.steps; ++i) {
    grid[i] = cfg.from + (cfg.to - cfg.from) * static_cast<double>(i) /
                             static_cast<double>(cfg.steps - 1);
  }

  const std::vector<entbound::ThermalSweepRow> rows =
      entbound::thermal_sweep(cfg.params, cfg.var, grid);

  std::ostringstream csv;
  csv << "sweep_value,heat_capacity,purity_reduced,negativity,q1,q2,q3\n";
  for (const entbound::ThermalSweepRow& row : rows) {
    const double q = std::min(std::min(row.q1, row.q2), row.q3);
    if (row.negativity > q + 1e-9) {
      throw entbound::NumericalError(
          "thermal-sweep: negativity " + std::to_string(row.negativity) +
          " exceeds its bound " + std::to_string(q) + " at sweep value " +
          std::to_string(row.sweep_value));
    }
    csv << fmt_real(row.sweep_value) << ',' << fmt_real(row.heat_capacity)
        << ',' << fmt_real(row.purity_reduced) << ','
        << fmt_real(row.negativity) << ',' << fmt_real(row.q1) << ','
        << fmt_real(row.q2) << ',' << fmt_real(row.q3) << '\n';
  }
  std::cout << csv.str() << std::flush;
  return kExitOk;
}

/// Presets replace every other option of their subcommand; mixing them
/// with explicit flags is rejected rather than silently resolved.
void require_no_explicit_options(const CLI::App* sub,
                                 const std::vector<std::string>& names,
                                 const std::string& preset) {
  for (const std::string& name : names) {
    if (sub->count(name) > 0) {
      throw entbound::DomainError("preset " + preset +
                                  " cannot be combined with " + name);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "entbound: upper bounds on bipartite entanglement from state "
      "mixedness"};
  app.require_subcommand(1);

  // --- report ---
  std::string report_path;
  CLI::App* report = app.add_subcommand(
      "report", "bounds report for one density-matrix file (QDM v1)");
  report->add_option("file", report_path, "QDM v1 state file")->required();

  // --- random-sweep ---
  RandomSweepConfig rnd;
  bool balanced = false;
  CLI::App* random_sweep = app.add_subcommand(
      "random-sweep",
      "negativity vs. bounds over random states (CSV on stdout)");
  random_sweep->add_option("--n", rnd.n, "number of states");
  random_sweep->add_option("--dm-min", rnd.dm_min,
                           "smallest subsystem-1 dimension");
  random_sweep->add_option("--dm-max", rnd.dm_max,
                           "largest subsystem-1 dimension");
  random_sweep->add_flag("--balanced", balanced,
                         "subsystem 2 matches subsystem 1 (default)");
  CLI::Option* offset_opt = random_sweep->add_option(
      "--offset", rnd.offset, "subsystem-2 dimension exceeds subsystem 1 by "
                              "this amount");
  offset_opt->excludes("--balanced");
  random_sweep->add_option("--seed", rnd.seed, "master seed");
  bool fig2 = false;
  bool fig3 = false;
  bool fig4 = false;
  random_sweep->add_flag("--fig2", fig2,
                         "preset: 1000 balanced states, dims 2..10");
  random_sweep->add_flag("--fig3", fig3,
                         "preset: 1000 states, dims 2..14, offset 60");
  random_sweep->add_flag("--fig4", fig4,
                         "preset: 1000 states, dims 2..5, offset 70");

  // --- pc-surface ---
  int d_min = 4;
  int d_max = 1000;
  int surf_dm_min = 2;
  int surf_dm_max = 25;
  CLI::App* pc_surface = app.add_subcommand(
      "pc-surface",
      "critical purity over a (d, d_m) grid (CSV on stdout)");
  pc_surface->add_option("--d-min", d_min, "smallest total dimension");
  pc_surface->add_option("--d-max", d_max, "largest total dimension");
  pc_surface->add_option("--dm-min", surf_dm_min,
                         "smallest small-subsystem dimension");
  pc_surface->add_option("--dm-max", surf_dm_max,
                         "largest small-subsystem dimension");

  // --- thermal-sweep ---
  ThermalSweepConfig th;
  double kbt = 1.0;
  std::string var_name = "gamma";
  CLI::App* thermal = app.add_subcommand(
      "thermal-sweep",
      "three-spin thermal model: heat capacity, reduced-state negativity "
      "and bounds along a parameter sweep (CSV on stdout)");
  thermal->add_option("--omega", th.params.omega, "field strength");
  thermal->add_option("--tau", th.params.tau, "linear exchange");
  thermal->add_option("--gamma", th.params.gamma, "quadratic exchange");
  thermal->add_option("--k", th.params.k, "probe coupling");
  thermal->add_option("--kbt", kbt, "temperature k_B T (ignored when "
                                    "sweeping T)");
  thermal->add_option("--var", var_name, "sweep variable: gamma, k, or T")
      ->check(CLI::IsMember({"gamma", "k", "T"}));
  thermal->add_option("--from", th.from, "first grid value");
  thermal->add_option("--to", th.to, "last grid value");
  thermal->add_option("--steps", th.steps, "number of grid points (>= 2)");
  bool fig5 = false;
  bool fig6 = false;
  bool fig7 = false;
  bool fig8 = false;
  thermal->add_flag("--fig5", fig5,
                    "preset: sweep gamma 0..12, kbt 2, tau 3, k 1");
  thermal->add_flag("--fig6", fig6, "preset: same sweep as --fig5");
  thermal->add_flag("--fig7", fig7,
                    "preset: sweep k 0..10, kbt 10, tau 3, gamma 1");
  thermal->add_flag("--fig8", fig8,
                    "preset: sweep T 0.5..10, tau 4, k 5, gamma 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*report) {
      return cmd_report(report_path);
    }

    if (*random_sweep) {
      const int presets = (fig2 ? 1 : 0) + (fig3 ? 1 : 0) + (fig4 ? 1 : 0);
      if (presets > 1) {
        throw entbound::DomainError("choose at most one preset");
      }
      if (presets == 1) {
        require_no_explicit_options(
            random_sweep,
            {"--n", "--dm-min", "--dm-max", "--balanced", "--offset",
             "--seed"},
            fig2 ? "--fig2" : (fig3 ? "--fig3" : "--fig4"));
        if (fig2) rnd = RandomSweepConfig{1000, 2, 10, 0, 1};
        if (fig3) rnd = RandomSweepConfig{1000, 2, 14, 60, 1};
        if (fig4) rnd = RandomSweepConfig{1000, 2, 5, 70, 1};
      }
      if (rnd.n < 1) {
        throw entbound::DomainError("random-sweep: --n must be at least 1");
      }
      return cmd_random_sweep(rnd);
    }

    if (*pc_surface) {
      return cmd_pc_surface(d_min, d_max, surf_dm_min, surf_dm_max);
    }

    if (*thermal) {
      const int presets =
          (fig5 ? 1 : 0) + (fig6 ? 1 : 0) + (fig7 ? 1 : 0) + (fig8 ? 1 : 0);
      if (presets > 1) {
        throw entbound::DomainError("choose at most one preset");
      }
      if (presets == 1) {
        require_no_explicit_options(
            thermal,
            {"--omega", "--tau", "--gamma", "--k", "--kbt", "--var",
             "--from", "--to", "--steps"},
            fig5 ? "--fig5" : (fig6 ? "--fig6" : (fig7 ? "--fig7"
                                                       : "--fig8")));
        const entbound::ThermalPreset preset =
            (fig5 || fig6) ? entbound::preset_gamma_sweep()
                           : (fig7 ? entbound::preset_k_sweep()
                                   : entbound::preset_temperature_sweep());
        th.params = preset.params;
        th.var = preset.var;
        th.from = preset.from;
        th.to = preset.to;
        th.steps = preset.steps;
      } else {
        if (!(kbt > 0.0)) {
          throw entbound::DomainError("thermal-sweep: --kbt must be positive");
        }
        th.params.beta = 1.0 / kbt;
        if (var_name == "gamma") th.var = entbound::SweepVariable::gamma;
        if (var_name == "k") th.var = entbound::SweepVariable::k;
        if (var_name == "T") th.var = entbound::SweepVariable::temperature;
      }
      return cmd_thermal_sweep(th);
    }
  } catch (const entbound::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const entbound::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const entbound::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const entbound::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const entbound::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}
