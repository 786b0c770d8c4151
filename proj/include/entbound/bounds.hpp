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

#ifndef ENTBOUND_BOUNDS_HPP
#define ENTBOUND_BOUNDS_HPP

#include <cstddef>
#include <vector>

#include "entbound/states.hpp"

namespace entbound {

/// Q1 = (sqrt(d * purity) - 1) / (d_m - 1). Upper bound on Negativity from
/// purity alone; can exceed 1 for very unbalanced bipartitions, where it
/// carries no information.
double q1_bound(double purity, int d, int d_m);

/// Q2 = (d_m * sqrt(purity) + sqrt((d-1)/d) * sqrt(1-purity) - 1) / (d_m - 1).
/// Never exceeds 1 at purity 1; does not vanish at the separability
/// threshold purity = 1/(d-1).
double q2_bound(double purity, int d, int d_m);

/// Step bound: 1 while purity > 1/(d-1), else 0. States at or below that
/// purity are separable across every bipartition, so the bound switches
/// off exactly at the threshold.
double q3_bound(double purity, int d);

struct QBounds {
  double q1;
  double q2;
  double q3;
  double q;  // min(q1, q2, q3); never above 1 because q3 <= 1
};

QBounds q_min(double purity, int d, int d1, int d2);

/// Purity above which Q2 is strictly tighter than Q1 (and below which Q1
/// is): P_c = (d-1) / (d*(sqrt(d)-d_m)^2 + d-1). Equals 1 for balanced
/// bipartitions.
double p_critical(int d, int d_m);

/// Largest trace norm the partial transpose can reach among d-dimensional
/// spectra with unit trace, the given purity, and exactly n_minus negative
/// eigenvalues: (d - 2*n_minus + 2*sqrt(n_minus*(d-n_minus)*(d*purity-1)))/d.
/// Maximizing over n_minus recovers sqrt(d*purity), i.e. bound Q1.
double norm_bound_fixed_negatives(int d, int n_minus, double purity);

/// Q1 sharpened by a caller-certified bound r on the rank of the partially
/// transposed state: max(0, (sqrt(r * purity) - 1) / (d_m - 1)). With
/// r = d this is Q1; a pure state has r = d_m^2 and bound exactly 1.
double rank_refined_bound(double purity, int r, int d_m);

/// Everything the CLI prints about one state.
struct BoundsReport {
  int d1;
  int d2;
  double purity;
  double s_linear;
  double negativity;
  double q1;
  double q2;
  double q3;
  double q;
  double p_critical;
};

BoundsReport make_report(const DensityMatrix& rho);

/// One term of a pure-state decomposition rho = sum_i weight_i * projector_i.
struct PureTerm {
  double weight;
  ComplexMatrix projector;
};

/// Eigenvalues of the partially transposed state sorted into the two
/// continuation classes: alpha paths start from the nonzero spectrum of the
/// reference projector's partial transpose, beta paths from its kernel.
struct AlphaBetaSplit {
  double a_sum;  // sum of squared alpha values at the endpoint
  double b_sum;  // sum of squared beta values at the endpoint
  std::vector<double> alpha_values;
  std::vector<double> beta_values;
  std::vector<double> x_path;  // grid actually used
};

struct ContinuationReport {
  AlphaBetaSplit split;
  bool inequality_holds;  // 1 - A - B >= B*d - 1e-9 on the whole grid
  double delta;           // largest x where the reference weight stays maximal
  std::size_t steps_used;
  std::size_t reference_index;
};

/// Follows the spectrum of the partial transpose along the interpolation
/// tau(x) = (1-x) * projector_R + x * rho, where R is the decomposition
/// term of largest weight, classifying each eigenvalue path as alpha or
/// beta by its starting point and checking 1 - A(x) - B(x) >= B(x)*d at
/// every grid point. Paths are matched between consecutive grid points in
/// sorted order; when a swap between adjacent paths of different classes
/// would fit the data about as well, the grid is refined (doubling up to
/// 1024 steps) before giving up with ConvergenceError.
ContinuationReport continuation_verify(const DensityMatrix& rho,
                                       const std::vector<PureTerm>& terms,
                                       std::size_t steps = 64);

}  // namespace entbound

#endif  // ENTBOUND_BOUNDS_HPP
