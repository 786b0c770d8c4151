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

#ifndef ENTBOUND_LINALG_HPP
#define ENTBOUND_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "entbound/errors.hpp"

namespace entbound {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Plain storage plus the handful of
/// operations the rest of the library needs; not a general linear-algebra
/// facade.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Complex* data() noexcept { return data_.data(); }
  const Complex* data() const noexcept { return data_.data(); }

  Complex trace() const;
  ComplexMatrix adjoint() const;
  bool all_finite() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; index convention (i1*b.rows()+i2, j1*b.cols()+j2).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hilbert-Schmidt (Frobenius) norm.
double hs_norm(const ComplexMatrix& a);

/// Largest entry magnitude.
double max_abs(const ComplexMatrix& a);

/// max_ij |a(i,j) - conj(a(j,i))|; zero iff a is exactly Hermitian.
double hermiticity_defect(const ComplexMatrix& a);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

/// Full Hermitian eigendecomposition (cyclic Jacobi). Input must be square
/// with hermiticity defect below `tol`; eigenvalues come back ascending.
/// Cost grows like n^3 per sweep, intended for the small (n <= a few dozen)
/// matrices where eigenvectors are actually consumed.
EigenDecomposition hermitian_eigen(const ComplexMatrix& a, double tol = 1e-10);

/// Eigenvalues only, ascending. Same contract as hermitian_eigen but
/// delegates to LAPACK and stays practical for n in the thousands.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          double tol = 1e-10);

/// Sum of |eigenvalue| over the spectrum of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& a, double tol = 1e-10);

/// a * adjoint(a), computed so the result is exactly Hermitian.
ComplexMatrix gram(const ComplexMatrix& a);

/// Whether a + shift * I admits a Cholesky factorization, i.e. the
/// Hermitian matrix `a` has no eigenvalue below -shift.
bool positive_semidefinite_within(const ComplexMatrix& a, double shift);

}  // namespace entbound

#endif  // ENTBOUND_LINALG_HPP
