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

#ifndef ENTBOUND_THERMAL_HPP
#define ENTBOUND_THERMAL_HPP

#include <vector>

#include "entbound/bounds.hpp"
#include "entbound/states.hpp"

namespace entbound {

/// Spin-1 operators in the m = +1, 0, -1 basis.
struct SpinOperators {
  ComplexMatrix jx;
  ComplexMatrix jy;
  ComplexMatrix jz;
};

SpinOperators spin1_operators();

/// Couplings of the three-site spin-1 model, all in units of the field
/// omega. Site 0 is the probe spin, sites 1 and 2 carry the quadratic
/// exchange.
struct ThermalParams {
  double omega = 1.0;
  double tau = 0.0;    // linear exchange between sites 1 and 2
  double gamma = 0.0;  // quadratic exchange between sites 1 and 2
  double k = 0.0;      // isotropic coupling of site 0 to sites 1 and 2
  double beta = 1.0;   // inverse temperature, k_B = 1
};

/// H = omega * Jz_total + tau * (J1.J2) + gamma * (J1.J2)^2
///     + k * (J0.J1 + J0.J2)
/// on the 27-dimensional space with tensor factor order site 0, 1, 2.
ComplexMatrix build_hamiltonian(const ThermalParams& p);

/// exp(-beta H) / Z with its spectral data. Weights use max-shifted
/// exponents, so log_partition_function is always finite while
/// partition_function itself may overflow to +inf at large beta.
struct GibbsState {
  ComplexMatrix hamiltonian;
  std::vector<double> energies;     // ascending
  std::vector<double> occupations;  // normalized Gibbs weights, same order
  double log_partition_function;
  double partition_function;
  double beta;
  DensityMatrix state;
};

/// Diagonalizes H (must be square with dimension d1*d2 of `part`) and
/// assembles the Gibbs state at inverse temperature beta.
GibbsState gibbs(const ComplexMatrix& h, double beta, const Bipartition& part);

/// Mixedness 1 - Tr rho^2 evaluated as sum_{i != j} p_i p_j over the
/// Gibbs weights; an independent path from purity(state).
double gibbs_mixedness(const GibbsState& g);

/// C_V = beta^2 * (<H^2> - <H>^2), from the spectrum. Nonnegative.
double heat_capacity(const GibbsState& g);

/// Gibbs state of the three-site model, reduced to sites 1 and 2 (site 0
/// traced out), analyzed as a 3x3 bipartite state: full bounds report of
/// the 9-dimensional reduced state.
BoundsReport reduced_two_atom_report(const ThermalParams& p);

enum class SweepVariable { gamma, k, temperature };

/// One grid point of a thermal sweep. The q1/q2/q3 columns bound the
/// reduced two-atom Negativity using the reduced state's purity evaluated
/// against the full 27-dimensional system (d = 27, d_m = 3); they are
/// looser than the reduced-system reading, so N <= min(q1, q2) still
/// holds while q1 can climb past 1 where the reduced purity is large.
struct ThermalSweepRow {
  double sweep_value;
  double heat_capacity;
  double purity_reduced;
  double negativity;
  double q1;
  double q2;
  double q3;
};

/// Evaluates the model over a strictly increasing grid of the chosen
/// variable (temperature sweeps set beta = 1/value). Grid points are
/// independent and evaluated in parallel.
std::vector<ThermalSweepRow> thermal_sweep(const ThermalParams& base,
                                           SweepVariable var,
                                           const std::vector<double>& grid);

/// A canned sweep configuration shared by the CLI presets and the
/// acceptance checks.
struct ThermalPreset {
  ThermalParams params;
  SweepVariable var;
  double from;
  double to;
  std::size_t steps;

  std::vector<double> grid() const;
};

/// gamma in [0, 12] at k_B T = 2, tau = 3, k = 1. Dense enough (step
/// 0.005) to resolve the narrow low-gamma window where q1 exceeds 1.
ThermalPreset preset_gamma_sweep();

/// k in [0, 10] at k_B T = 10, tau = 3, gamma = 1.
ThermalPreset preset_k_sweep();

/// T in [0.5, 10] at tau = 4, k = 5, gamma = 1.
ThermalPreset preset_temperature_sweep();

}  // namespace entbound

#endif  // ENTBOUND_THERMAL_HPP
