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

#ifndef ENTBOUND_STATES_HPP
#define ENTBOUND_STATES_HPP

#include <iosfwd>
#include <string>

#include "entbound/linalg.hpp"

namespace entbound {

/// Split of the total Hilbert space into two subsystems. Both parts must be
/// at least two-dimensional; nothing can be entangled with a trivial factor.
class Bipartition {
 public:
  Bipartition(int d1, int d2);

  int d1() const noexcept { return d1_; }
  int d2() const noexcept { return d2_; }
  int d() const noexcept { return d1_ * d2_; }
  int d_min() const noexcept { return d1_ < d2_ ? d1_ : d2_; }
  int d_max() const noexcept { return d1_ > d2_ ? d1_ : d2_; }

  friend bool operator==(const Bipartition& a, const Bipartition& b) = default;

 private:
  int d1_;
  int d2_;
};

/// A density matrix that passed validation: Hermitian within psd_tol,
/// unit trace within 1e-12, no eigenvalue below -psd_tol, dimension
/// d1*d2. Immutable; construct through validate().
class DensityMatrix {
 public:
  const ComplexMatrix& mat() const noexcept { return mat_; }
  const Bipartition& bipartition() const noexcept { return part_; }
  double psd_tol() const noexcept { return psd_tol_; }

 private:
  friend DensityMatrix validate(const ComplexMatrix&, const Bipartition&,
                                double);
  DensityMatrix(ComplexMatrix mat, Bipartition part, double psd_tol)
      : mat_(std::move(mat)), part_(part), psd_tol_(psd_tol) {}

  ComplexMatrix mat_;
  Bipartition part_;
  double psd_tol_;
};

/// Checks the DensityMatrix invariants; throws ValidationError (with the
/// failing kind) when any is violated.
DensityMatrix validate(const ComplexMatrix& mat, const Bipartition& part,
                       double psd_tol = 1e-10);

/// Tr rho^2, clamped to [1/d, 1]. Values escaping that interval by more
/// than 1e-9 raise NumericalError instead of being clamped.
double purity(const DensityMatrix& rho);

/// S_L = d/(d-1) * (1 - Tr rho^2), normalized to [0, 1].
double linear_entropy(const DensityMatrix& rho);

/// Transpose of the first tensor factor. With composite row index a*d2+b:
/// out[(a,b),(a',b')] = in[(a',b),(a,b')]. A pure entry permutation, so
/// trace and Hilbert-Schmidt norm are preserved exactly.
ComplexMatrix partial_transpose_1(const ComplexMatrix& mat, int d1, int d2);
ComplexMatrix partial_transpose_1(const DensityMatrix& rho);

enum class Keep { subsystem1, subsystem2 };

/// Traces out the factor not kept; mat is d1*d2-dimensional with the
/// subsystem-1-major index convention.
ComplexMatrix partial_trace(const ComplexMatrix& mat, int d1, int d2,
                            Keep keep);
ComplexMatrix partial_trace(const DensityMatrix& rho, Keep keep);

/// N = (||rho^{T1}||_1 - 1) / (d_min - 1), in [0, 1]. Zero exactly for
/// states with positive partial transpose, one only for maximally
/// entangled states. Rounding excursions within 1e-10 outside [0, 1] are
/// clamped; anything larger raises NumericalError.
double negativity(const DensityMatrix& rho);

/// A matrix plus bipartition as read from disk, before validation.
struct QdmState {
  ComplexMatrix mat;
  Bipartition part;
};

/// Text format "QDM v1":
///   line 1: `qdm 1 <d1> <d2>`
///   lines 2 .. d^2+1: `<re> <im>`, row-major entries.
QdmState read_qdm(std::istream& in);
QdmState load_qdm(const std::string& path);
void write_qdm(std::ostream& out, const ComplexMatrix& mat,
               const Bipartition& part);
void save_qdm(const std::string& path, const ComplexMatrix& mat,
              const Bipartition& part);

}  // namespace entbound

#endif  // ENTBOUND_STATES_HPP
