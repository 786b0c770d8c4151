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

#include "entbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_float_real(z) ((z).real())
#define lapack_complex_float_imag(z) ((z).imag())
#define lapack_complex_double std::complex<double>
#define lapack_complex_double_real(z) ((z).real())
#define lapack_complex_double_imag(z) ((z).imag())
#include <cblas.h>
#include <lapacke.h>

namespace entbound {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shapes " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + " differ");
  }
}

void require_square_hermitian(const ComplexMatrix& a, double tol,
                              const char* op) {
  if (!a.square()) {
    throw DimensionError(std::string(op) + ": matrix is " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", not square");
  }
  const double defect = hermiticity_defect(a);
  if (!(defect <= tol)) {
    throw DomainError(std::string(op) + ": hermiticity defect " +
                      std::to_string(defect) + " exceeds tolerance " +
                      std::to_string(tol));
  }
}

/// (A + A^dagger) / 2, entrywise. Jacobi below assumes exact Hermitian
/// storage; symmetrizing first makes the rotation algebra valid even when
/// the input carries defect at the tolerance edge.
ComplexMatrix hermitize(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = Complex(a(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

double offdiag_frobenius(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(2.0 * sum);
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex(1.0, 0.0);
  return m;
}

Complex ComplexMatrix::trace() const {
  if (!square()) {
    throw DimensionError("trace: matrix is " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + ", not square");
  }
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out(j, i) = std::conj((*this)(i, j));
    }
  }
  return out;
}

bool ComplexMatrix::all_finite() const noexcept {
  for (const Complex& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& v : data_) v *= scale;
  return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions " +
                         std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
  }
  ComplexMatrix c(a.rows(), b.cols());
  const Complex one(1.0, 0.0);
  const Complex zero(0.0, 0.0);
  cblas_zgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans,
              static_cast<int>(a.rows()), static_cast<int>(b.cols()),
              static_cast<int>(a.cols()), &one, a.data(),
              static_cast<int>(a.cols()), b.data(),
              static_cast<int>(b.cols()), &zero, c.data(),
              static_cast<int>(c.cols()));
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex scale = a(i1, j1);
      if (scale == Complex(0.0, 0.0)) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = scale * b(i2, j2);
        }
      }
    }
  }
  return out;
}

double hs_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  const Complex* p = a.data();
  const std::size_t count = a.rows() * a.cols();
  for (std::size_t i = 0; i < count; ++i) sum += std::norm(p[i]);
  return std::sqrt(sum);
}

double max_abs(const ComplexMatrix& a) {
  double best = 0.0;
  const Complex* p = a.data();
  const std::size_t count = a.rows() * a.cols();
  for (std::size_t i = 0; i < count; ++i) best = std::max(best, std::abs(p[i]));
  return best;
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (!a.square()) {
    throw DimensionError("hermiticity_defect: matrix is " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", not square");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return worst;
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& a, double tol) {
  require_square_hermitian(a, tol, "hermitian_eigen");
  const std::size_t n = a.rows();

  ComplexMatrix m = hermitize(a);
  ComplexMatrix vecs = ComplexMatrix::identity(n);

  if (n > 1) {
    const double target = 1e-12 * std::max(hs_norm(m), 1e-300);
    constexpr int kMaxSweeps = 30;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      if (offdiag_frobenius(m) <= target) {
        converged = true;
        break;
      }
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const Complex z = m(p, q);
          const double r = std::abs(z);
          // Entries already far below the convergence target cannot move
          // the off-diagonal norm; rotating on them just churns roundoff.
          if (r <= target / (10.0 * static_cast<double>(n))) continue;

          const Complex phase = z / r;
          const double app = m(p, p).real();
          const double aqq = m(q, q).real();
          const double w = (app - aqq) / (2.0 * r);
          double t;
          if (w == 0.0) {
            t = 1.0;
          } else {
            t = (w > 0.0 ? 1.0 : -1.0) / (std::abs(w) + std::hypot(w, 1.0));
          }
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;

          // Two-sided rotation in the (p, q) plane, chosen to zero m(p, q).
          for (std::size_t k = 0; k < n; ++k) {
            const Complex akp = m(k, p);
            const Complex akq = m(k, q);
            m(k, p) = c * akp + s * std::conj(phase) * akq;
            m(k, q) = -s * phase * akp + c * akq;
          }
          for (std::size_t k = 0; k < n; ++k) {
            m(p, k) = std::conj(m(k, p));
            m(q, k) = std::conj(m(k, q));
          }
          m(p, p) = Complex(c * c * app + 2.0 * r * s * c + s * s * aqq, 0.0);
          m(q, q) = Complex(s * s * app - 2.0 * r * s * c + c * c * aqq, 0.0);
          m(p, q) = Complex(0.0, 0.0);
          m(q, p) = Complex(0.0, 0.0);

          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = vecs(k, p);
            const Complex vkq = vecs(k, q);
            vecs(k, p) = c * vkp + s * std::conj(phase) * vkq;
            vecs(k, q) = -s * phase * vkp + c * vkq;
          }
        }
      }
    }
    if (!converged && offdiag_frobenius(m) > target) {
      throw ConvergenceError(
          "hermitian_eigen: Jacobi sweeps exhausted with off-diagonal norm " +
          std::to_string(offdiag_frobenius(m)) + " above target " +
          std::to_string(target));
    }
  }

  EigenDecomposition result;
  result.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = m(i, i).real();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return result.eigenvalues[x] < result.eigenvalues[y];
  });

  EigenDecomposition sorted;
  sorted.eigenvalues.resize(n);
  sorted.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    sorted.eigenvalues[k] = result.eigenvalues[order[k]];
    for (std::size_t i = 0; i < n; ++i) {
      sorted.eigenvectors(i, k) = vecs(i, order[k]);
    }
  }
  return sorted;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, double tol) {
  require_square_hermitian(a, tol, "hermitian_eigenvalues");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  if (n == 1) return {a(0, 0).real()};

  ComplexMatrix m = hermitize(a);
  std::vector<double> values(n);
  const lapack_int info = LAPACKE_zheev(
      LAPACK_ROW_MAJOR, 'N', 'L', static_cast<lapack_int>(n), m.data(),
      static_cast<lapack_int>(n), values.data());
  if (info != 0) {
    throw ConvergenceError("hermitian_eigenvalues: zheev failed with info " +
                           std::to_string(info));
  }
  return values;
}

double trace_norm_hermitian(const ComplexMatrix& a, double tol) {
  const std::vector<double> values = hermitian_eigenvalues(a, tol);
  double sum = 0.0;
  for (double v : values) sum += std::abs(v);
  return sum;
}

ComplexMatrix gram(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  ComplexMatrix out(n, n);
  if (n == 0) return out;
  cblas_zherk(CblasRowMajor, CblasLower, CblasNoTrans, static_cast<int>(n),
              static_cast<int>(k), 1.0, a.data(), static_cast<int>(k), 0.0,
              out.data(), static_cast<int>(n));
  // zherk fills one triangle; mirror it so the result is exactly Hermitian.
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = Complex(out(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      out(i, j) = std::conj(out(j, i));
    }
  }
  return out;
}

bool positive_semidefinite_within(const ComplexMatrix& a, double shift) {
  if (!a.square()) {
    throw DimensionError("positive_semidefinite_within: matrix is " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", not square");
  }
  const std::size_t n = a.rows();
  if (n == 0) return true;
  ComplexMatrix m = hermitize(a);
  for (std::size_t i = 0; i < n; ++i) m(i, i) += shift;
  const lapack_int info = LAPACKE_zpotrf(
      LAPACK_ROW_MAJOR, 'L', static_cast<lapack_int>(n), m.data(),
      static_cast<lapack_int>(n));
  return info == 0;
}

}  // namespace entbound
