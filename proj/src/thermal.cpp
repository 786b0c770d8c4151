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

#include "entbound/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entbound/parallel.hpp"

namespace entbound {

namespace {

ComplexMatrix kron3(const ComplexMatrix& a, const ComplexMatrix& b,
                    const ComplexMatrix& c) {
  return kron(kron(a, b), c);
}

/// J_i . J_j embedded in the three-site space, site indices in {0, 1, 2}.
ComplexMatrix dot_coupling(int site_a, int site_b) {
  const SpinOperators ops = spin1_operators();
  const ComplexMatrix* axes[3] = {&ops.jx, &ops.jy, &ops.jz};
  const ComplexMatrix eye = ComplexMatrix::identity(3);
  ComplexMatrix total(27, 27);
  for (const ComplexMatrix* axis : axes) {
    const ComplexMatrix* factors[3] = {&eye, &eye, &eye};
    factors[site_a] = axis;
    factors[site_b] = axis;
    total += kron3(*factors[0], *factors[1], *factors[2]);
  }
  return total;
}

}  // namespace

SpinOperators spin1_operators() {
  const double r = 1.0 / std::sqrt(2.0);
  SpinOperators ops;
  ops.jx = ComplexMatrix(3, 3);
  ops.jx(0, 1) = Complex(r, 0.0);
  ops.jx(1, 0) = Complex(r, 0.0);
  ops.jx(1, 2) = Complex(r, 0.0);
  ops.jx(2, 1) = Complex(r, 0.0);
  ops.jy = ComplexMatrix(3, 3);
  ops.jy(0, 1) = Complex(0.0, -r);
  ops.jy(1, 0) = Complex(0.0, r);
  ops.jy(1, 2) = Complex(0.0, -r);
  ops.jy(2, 1) = Complex(0.0, r);
  ops.jz = ComplexMatrix(3, 3);
  ops.jz(0, 0) = Complex(1.0, 0.0);
  ops.jz(2, 2) = Complex(-1.0, 0.0);
  return ops;
}

ComplexMatrix build_hamiltonian(const ThermalParams& p) {
  const SpinOperators ops = spin1_operators();
  const ComplexMatrix eye = ComplexMatrix::identity(3);

  ComplexMatrix jz_total = kron3(ops.jz, eye, eye);
  jz_total += kron3(eye, ops.jz, eye);
  jz_total += kron3(eye, eye, ops.jz);

  const ComplexMatrix j12 = dot_coupling(1, 2);
  const ComplexMatrix j12_sq = matmul(j12, j12);

  ComplexMatrix probe = dot_coupling(0, 1);
  probe += dot_coupling(0, 2);

  ComplexMatrix h(27, 27);
  jz_total *= Complex(p.omega, 0.0);
  h += jz_total;
  ComplexMatrix term = j12;
  term *= Complex(p.tau, 0.0);
  h += term;
  term = j12_sq;
  term *= Complex(p.gamma, 0.0);
  h += term;
  probe *= Complex(p.k, 0.0);
  h += probe;
  return h;
}

GibbsState gibbs(const ComplexMatrix& h, double beta,
                 const Bipartition& part) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("gibbs: beta = " + std::to_string(beta) +
                      " must be finite and positive");
  }
  const std::size_t d = static_cast<std::size_t>(part.d());
  if (!h.square() || h.rows() != d) {
    throw DimensionError("gibbs: Hamiltonian is " + std::to_string(h.rows()) +
                         "x" + std::to_string(h.cols()) +
                         ", bipartition needs " + std::to_string(d));
  }

  const EigenDecomposition eig = hermitian_eigen(h, 1e-10);
  const double e_min = eig.eigenvalues.front();

  std::vector<double> weights(d);
  double weight_sum = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    weights[i] = std::exp(-beta * (eig.eigenvalues[i] - e_min));
    weight_sum += weights[i];
  }
  for (double& w : weights) w /= weight_sum;

  // rho = V diag(p) V^dagger, assembled as an exactly Hermitian matrix.
  ComplexMatrix rho(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Complex sum(0.0, 0.0);
      for (std::size_t k = 0; k < d; ++k) {
        sum += weights[k] * eig.eigenvectors(i, k) *
               std::conj(eig.eigenvectors(j, k));
      }
      if (i == j) {
        rho(i, i) = Complex(sum.real(), 0.0);
      } else {
        rho(i, j) = sum;
        rho(j, i) = std::conj(sum);
      }
    }
  }
  Complex tr(0.0, 0.0);
  for (std::size_t i = 0; i < d; ++i) tr += rho(i, i);
  rho(0, 0) += Complex(1.0 - tr.real(), 0.0);

  GibbsState g{h,
               eig.eigenvalues,
               std::move(weights),
               std::log(weight_sum) - beta * e_min,
               0.0,
               beta,
               validate(rho, part)};
  g.partition_function = std::exp(g.log_partition_function);
  return g;
}

double gibbs_mixedness(const GibbsState& g) {
  const std::size_t n = g.occupations.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sum += g.occupations[i] * g.occupations[j];
    }
  }
  return sum;
}

double heat_capacity(const GibbsState& g) {
  const std::size_t n = g.energies.size();
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean += g.occupations[i] * g.energies[i];
  }
  double variance = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double centered = g.energies[i] - mean;
    variance += g.occupations[i] * centered * centered;
  }
  return g.beta * g.beta * variance;
}

BoundsReport reduced_two_atom_report(const ThermalParams& p) {
  const GibbsState g = gibbs(build_hamiltonian(p), p.beta, Bipartition(3, 9));
  const ComplexMatrix reduced = partial_trace(g.state, Keep::subsystem2);
  return make_report(validate(reduced, Bipartition(3, 3)));
}

std::vector<ThermalSweepRow> thermal_sweep(const ThermalParams& base,
                                           SweepVariable var,
                                           const std::vector<double>& grid) {
  if (grid.empty()) {
    throw DomainError("thermal_sweep: empty grid");
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(grid[i] < grid[i + 1])) {
      throw DomainError("thermal_sweep: grid must be strictly increasing");
    }
  }

  std::vector<ThermalSweepRow> rows(grid.size());
  parallel_run(grid.size(), [&](std::size_t i) {
    ThermalParams p = base;
    switch (var) {
      case SweepVariable::gamma:
        p.gamma = grid[i];
        break;
      case SweepVariable::k:
        p.k = grid[i];
        break;
      case SweepVariable::temperature:
        if (!(grid[i] > 0.0)) {
          throw DomainError("thermal_sweep: temperature " +
                            std::to_string(grid[i]) + " must be positive");
        }
        p.beta = 1.0 / grid[i];
        break;
    }

    const GibbsState g =
        gibbs(build_hamiltonian(p), p.beta, Bipartition(3, 9));
    const DensityMatrix reduced =
        validate(partial_trace(g.state, Keep::subsystem2), Bipartition(3, 3));

    ThermalSweepRow row;
    row.sweep_value = grid[i];
    row.heat_capacity = heat_capacity(g);
    row.purity_reduced = purity(reduced);
    row.negativity = negativity(reduced);
    // Bound columns read the reduced purity against the full system
    // (d = 27, d_m = 3); see ThermalSweepRow.
    row.q1 = q1_bound(row.purity_reduced, 27, 3);
    row.q2 = q2_bound(row.purity_reduced, 27, 3);
    row.q3 = q3_bound(row.purity_reduced, 27);
    rows[i] = row;
  });
  return rows;
}

std::vector<double> ThermalPreset::grid() const {
  std::vector<double> values(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    values[i] = from + (to - from) * static_cast<double>(i) /
                           static_cast<double>(steps - 1);
  }
  return values;
}

ThermalPreset preset_gamma_sweep() {
  return ThermalPreset{ThermalParams{1.0, 3.0, 0.0, 1.0, 0.5},
                       SweepVariable::gamma, 0.0, 12.0, 2401};
}

ThermalPreset preset_k_sweep() {
  return ThermalPreset{ThermalParams{1.0, 3.0, 1.0, 0.0, 0.1},
                       SweepVariable::k, 0.0, 10.0, 201};
}

ThermalPreset preset_temperature_sweep() {
  return ThermalPreset{ThermalParams{1.0, 4.0, 1.0, 5.0, 1.0},
                       SweepVariable::temperature, 0.5, 10.0, 201};
}

}  // namespace entbound
