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

#include "entbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

namespace entbound {

namespace {

/// Bounds accept purity with a 1e-9 slack band (validated states can carry
/// rounding that size) and evaluate on the clamped value.
double checked_purity(double purity, int d, const char* op) {
  const double floor = 1.0 / static_cast<double>(d);
  if (!(purity >= floor - 1e-9) || !(purity <= 1.0 + 1e-9)) {
    throw DomainError(std::string(op) + ": purity " + std::to_string(purity) +
                      " outside [" + std::to_string(floor) + ", 1]");
  }
  return std::clamp(purity, floor, 1.0);
}

void check_dims(int d, int d_m, const char* op) {
  if (d_m < 2) {
    throw DomainError(std::string(op) + ": smaller subsystem dimension " +
                      std::to_string(d_m) + " must be at least 2");
  }
  if (d_m * d_m > d) {
    throw DomainError(std::string(op) + ": d_m^2 = " +
                      std::to_string(d_m * d_m) + " exceeds d = " +
                      std::to_string(d));
  }
}

}  // namespace

double q1_bound(double purity, int d, int d_m) {
  check_dims(d, d_m, "q1_bound");
  const double p = checked_purity(purity, d, "q1_bound");
  return (std::sqrt(static_cast<double>(d) * p) - 1.0) /
         (static_cast<double>(d_m) - 1.0);
}

double q2_bound(double purity, int d, int d_m) {
  check_dims(d, d_m, "q2_bound");
  const double p = checked_purity(purity, d, "q2_bound");
  const double dd = static_cast<double>(d);
  return (static_cast<double>(d_m) * std::sqrt(p) +
          std::sqrt((dd - 1.0) / dd) * std::sqrt(1.0 - p) - 1.0) /
         (static_cast<double>(d_m) - 1.0);
}

double q3_bound(double purity, int d) {
  if (d < 4) {
    throw DomainError("q3_bound: total dimension " + std::to_string(d) +
                      " is below the smallest bipartite dimension 4");
  }
  const double p = checked_purity(purity, d, "q3_bound");
  // Separability holds up to and including the threshold, so the step
  // switches off already at equality.
  return p > 1.0 / (static_cast<double>(d) - 1.0) ? 1.0 : 0.0;
}

QBounds q_min(double purity, int d, int d1, int d2) {
  if (d != d1 * d2) {
    throw DomainError("q_min: d = " + std::to_string(d) +
                      " is not the product of " + std::to_string(d1) +
                      " and " + std::to_string(d2));
  }
  const int d_m = std::min(d1, d2);
  QBounds out;
  out.q1 = q1_bound(purity, d, d_m);
  out.q2 = q2_bound(purity, d, d_m);
  out.q3 = q3_bound(purity, d);
  out.q = std::min(std::min(out.q1, out.q2), out.q3);
  return out;
}

double p_critical(int d, int d_m) {
  check_dims(d, d_m, "p_critical");
  const double dd = static_cast<double>(d);
  const double gap = std::sqrt(dd) - static_cast<double>(d_m);
  return (dd - 1.0) / (dd * gap * gap + dd - 1.0);
}

double norm_bound_fixed_negatives(int d, int n_minus, double purity) {
  if (n_minus < 1 || n_minus >= d) {
    throw DomainError("norm_bound_fixed_negatives: n_minus = " +
                      std::to_string(n_minus) + " must lie in [1, " +
                      std::to_string(d - 1) + "]");
  }
  const double dd = static_cast<double>(d);
  const double excess = dd * purity - 1.0;
  if (excess < -1e-9) {
    throw DomainError("norm_bound_fixed_negatives: d * purity = " +
                      std::to_string(dd * purity) + " is below 1");
  }
  const double n = static_cast<double>(n_minus);
  return (dd - 2.0 * n +
          2.0 * std::sqrt(n * (dd - n) * std::max(excess, 0.0))) /
         dd;
}

double rank_refined_bound(double purity, int r, int d_m) {
  if (d_m < 2) {
    throw DomainError("rank_refined_bound: smaller subsystem dimension " +
                      std::to_string(d_m) + " must be at least 2");
  }
  if (r < d_m * d_m) {
    throw DomainError("rank_refined_bound: rank bound " + std::to_string(r) +
                      " is below d_m^2 = " + std::to_string(d_m * d_m));
  }
  if (!(purity >= 0.0) || !(purity <= 1.0 + 1e-9)) {
    throw DomainError("rank_refined_bound: purity " + std::to_string(purity) +
                      " outside [0, 1]");
  }
  const double p = std::min(purity, 1.0);
  const double value = (std::sqrt(static_cast<double>(r) * p) - 1.0) /
                       (static_cast<double>(d_m) - 1.0);
  return std::max(value, 0.0);
}

BoundsReport make_report(const DensityMatrix& rho) {
  const Bipartition& part = rho.bipartition();
  BoundsReport report;
  report.d1 = part.d1();
  report.d2 = part.d2();
  report.purity = purity(rho);
  report.s_linear = linear_entropy(rho);
  report.negativity = negativity(rho);
  const QBounds qs = q_min(report.purity, part.d(), part.d1(), part.d2());
  report.q1 = qs.q1;
  report.q2 = qs.q2;
  report.q3 = qs.q3;
  report.q = qs.q;
  report.p_critical = p_critical(part.d(), part.d_min());
  return report;
}

namespace {

constexpr std::size_t kMaxContinuationSteps = 1024;

void check_terms(const DensityMatrix& rho, const std::vector<PureTerm>& terms) {
  if (terms.empty()) {
    throw DomainError("continuation_verify: empty decomposition");
  }
  const std::size_t d = rho.mat().rows();
  double weight_sum = 0.0;
  ComplexMatrix recombined(d, d);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const PureTerm& term = terms[i];
    if (!(term.weight >= -1e-12)) {
      throw DomainError("continuation_verify: term " + std::to_string(i) +
                        " has negative weight " + std::to_string(term.weight));
    }
    weight_sum += term.weight;
    if (!term.projector.square() || term.projector.rows() != d) {
      throw DimensionError("continuation_verify: term " + std::to_string(i) +
                           " projector is " +
                           std::to_string(term.projector.rows()) + "x" +
                           std::to_string(term.projector.cols()) +
                           ", state is " + std::to_string(d) + "x" +
                           std::to_string(d));
    }
    const double herm = hermiticity_defect(term.projector);
    const double trace_err =
        std::abs(term.projector.trace() - Complex(1.0, 0.0));
    const double hs = hs_norm(term.projector);
    if (herm > 1e-9 || trace_err > 1e-9 || std::abs(hs * hs - 1.0) > 1e-9) {
      throw DomainError("continuation_verify: term " + std::to_string(i) +
                        " is not a pure-state projector");
    }
    ComplexMatrix scaled = term.projector;
    scaled *= Complex(term.weight, 0.0);
    recombined += scaled;
  }
  if (std::abs(weight_sum - 1.0) > 1e-10) {
    throw DomainError("continuation_verify: weights sum to " +
                      std::to_string(weight_sum) + ", not 1");
  }
  recombined -= rho.mat();
  const double mismatch = max_abs(recombined);
  if (mismatch > 1e-10) {
    throw DomainError(
        "continuation_verify: decomposition misses the state by " +
        std::to_string(mismatch) + " entrywise");
  }
}

}  // namespace

ContinuationReport continuation_verify(const DensityMatrix& rho,
                                       const std::vector<PureTerm>& terms,
                                       std::size_t steps) {
  check_terms(rho, terms);
  const Bipartition& part = rho.bipartition();
  const std::size_t d = rho.mat().rows();

  std::size_t reference = 0;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].weight > terms[reference].weight) reference = i;
  }

  const ComplexMatrix sigma_pt =
      partial_transpose_1(terms[reference].projector, part.d1(), part.d2());
  const ComplexMatrix rho_pt = partial_transpose_1(rho);

  const std::vector<double> start = hermitian_eigenvalues(sigma_pt);
  // Beta paths are the ones leaving the reference projector's kernel.
  std::vector<bool> is_beta(d);
  std::size_t alpha_count = 0;
  for (std::size_t k = 0; k < d; ++k) {
    is_beta[k] = std::abs(start[k]) <= 1e-9;
    if (!is_beta[k]) ++alpha_count;
  }
  const std::size_t d_m = static_cast<std::size_t>(part.d_min());
  if (alpha_count > d_m * d_m) {
    throw NumericalError(
        "continuation_verify: " + std::to_string(alpha_count) +
        " nonzero reference eigenvalues exceed d_m^2 = " +
        std::to_string(d_m * d_m));
  }

  // The reference weight must stay maximal along the interpolation; for
  // this family its path weight is (1-x) + x*w_R against x*w_i, so the
  // requirement holds on all of [0, 1]. Scan the grid anyway so delta is
  // measured, not assumed.
  const double w_r = terms[reference].weight;
  double w_other = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i != reference) w_other = std::max(w_other, terms[i].weight);
  }

  if (steps < 2) steps = 2;
  for (; steps <= kMaxContinuationSteps; steps *= 2) {
    std::vector<double> prev = start;
    std::vector<double> grid(steps + 1);
    double a_sum = 0.0;
    double b_sum = 0.0;
    std::vector<double> endpoint;
    bool inequality_holds = true;
    bool ambiguous = false;
    double delta = 0.0;

    for (std::size_t k = 0; k <= steps && !ambiguous; ++k) {
      const double x =
          static_cast<double>(k) / static_cast<double>(steps);
      grid[k] = x;

      std::vector<double> cur;
      if (k == 0) {
        cur = start;
      } else {
        ComplexMatrix tau = sigma_pt;
        tau *= Complex(1.0 - x, 0.0);
        ComplexMatrix mixed = rho_pt;
        mixed *= Complex(x, 0.0);
        tau += mixed;
        cur = hermitian_eigenvalues(tau);

        // Sorted index matching silently resolves a would-be crossing of
        // adjacent paths as a bounce. That only changes the outcome when
        // the two paths carry different classes and separate again, so
        // exactly then the grid is too coarse to trust.
        for (std::size_t j = 0; j + 1 < d; ++j) {
          if (is_beta[j] == is_beta[j + 1]) continue;
          const double straight = std::abs(cur[j] - prev[j]) +
                                  std::abs(cur[j + 1] - prev[j + 1]);
          const double swapped = std::abs(cur[j] - prev[j + 1]) +
                                 std::abs(cur[j + 1] - prev[j]);
          if (swapped <= straight + 1e-9 &&
              std::abs(cur[j] - cur[j + 1]) > 1e-12) {
            ambiguous = true;
            break;
          }
        }
        if (ambiguous) break;
      }

      const bool reference_maximal = (1.0 - x) + x * w_r >= x * w_other;
      if (reference_maximal) delta = x;

      double a = 0.0;
      double b = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        (is_beta[j] ? b : a) += cur[j] * cur[j];
      }
      if (reference_maximal &&
          1.0 - a - b < b * static_cast<double>(d) - 1e-9) {
        inequality_holds = false;
      }
      if (k == steps) {
        a_sum = a;
        b_sum = b;
        endpoint = cur;
      }
      prev = cur;
    }

    if (ambiguous) continue;

    const double target_purity = purity(rho);
    if (std::abs(a_sum + b_sum - target_purity) > 1e-9) {
      throw NumericalError(
          "continuation_verify: A + B = " + std::to_string(a_sum + b_sum) +
          " disagrees with Tr rho^2 = " + std::to_string(target_purity));
    }

    ContinuationReport report;
    report.split.a_sum = a_sum;
    report.split.b_sum = b_sum;
    for (std::size_t j = 0; j < d; ++j) {
      (is_beta[j] ? report.split.beta_values : report.split.alpha_values)
          .push_back(endpoint[j]);
    }
    report.split.x_path = std::move(grid);
    report.inequality_holds = inequality_holds;
    report.delta = delta;
    report.steps_used = steps;
    report.reference_index = reference;
    return report;
  }

  throw ConvergenceError(
      "continuation_verify: eigenvalue paths of different classes stay "
      "unresolvable at " +
      std::to_string(kMaxContinuationSteps) + " steps");
}

}  // namespace entbound
