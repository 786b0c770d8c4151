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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "entbound/linalg.hpp"
#include "entbound/random.hpp"

using entbound::Complex;
using entbound::ComplexMatrix;

namespace {

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m(0, 1) = Complex(1.0, 0.0);
  m(1, 0) = Complex(1.0, 0.0);
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m(0, 0) = Complex(1.0, 0.0);
  m(1, 1) = Complex(-1.0, 0.0);
  return m;
}

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& eng) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = Complex(entbound::standard_complex_gaussian(eng).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = entbound::standard_complex_gaussian(eng);
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return m;
}

double residual_norm(const ComplexMatrix& a,
                     const entbound::EigenDecomposition& eig) {
  const std::size_t n = a.rows();
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex av(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        av += a(i, j) * eig.eigenvectors(j, k);
      }
      av -= eig.eigenvalues[k] * eig.eigenvectors(i, k);
      sum += std::norm(av);
    }
    worst = std::max(worst, std::sqrt(sum));
  }
  return worst;
}

double orthonormality_defect(const ComplexMatrix& v) {
  const std::size_t n = v.rows();
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Complex dot(0.0, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        dot += std::conj(v(i, a)) * v(i, b);
      }
      if (a == b) dot -= Complex(1.0, 0.0);
      worst = std::max(worst, std::abs(dot));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("matrix basics: identity, trace, adjoint, arithmetic") {
  const ComplexMatrix eye = ComplexMatrix::identity(3);
  CHECK(eye(0, 0) == Complex(1.0, 0.0));
  CHECK(eye(0, 1) == Complex(0.0, 0.0));
  CHECK(eye.trace() == Complex(3.0, 0.0));

  ComplexMatrix a(2, 3);
  a(0, 2) = Complex(1.0, 2.0);
  const ComplexMatrix ad = a.adjoint();
  CHECK(ad.rows() == 3);
  CHECK(ad.cols() == 2);
  CHECK(ad(2, 0) == Complex(1.0, -2.0));
  CHECK_THROWS_AS((void)a.trace(), entbound::DimensionError);

  ComplexMatrix b = pauli_x();
  b += pauli_x();
  CHECK(b(0, 1) == Complex(2.0, 0.0));
  b -= pauli_x();
  CHECK(b(0, 1) == Complex(1.0, 0.0));
  b *= Complex(0.0, 1.0);
  CHECK(b(0, 1) == Complex(0.0, 1.0));
  CHECK_THROWS_AS(b += ComplexMatrix(3, 3), entbound::DimensionError);

  CHECK(b.all_finite());
  b(1, 0) = Complex(std::nan(""), 0.0);
  CHECK_FALSE(b.all_finite());
}

TEST_CASE("matmul reproduces the Pauli algebra") {
  // sigma_x sigma_y = i sigma_z.
  const ComplexMatrix xy = entbound::matmul(pauli_x(), pauli_y());
  ComplexMatrix expected = pauli_z();
  expected *= Complex(0.0, 1.0);
  expected -= xy;
  CHECK(entbound::max_abs(expected) == 0.0);

  CHECK_THROWS_AS(entbound::matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)),
                  entbound::DimensionError);
}

TEST_CASE("kron index convention and mixed-product identity") {
  const ComplexMatrix k = entbound::kron(pauli_z(), pauli_x());
  // (i1*2+i2, j1*2+j2) = z(i1,j1) * x(i2,j2).
  CHECK(k(0, 1) == Complex(1.0, 0.0));
  CHECK(k(1, 0) == Complex(1.0, 0.0));
  CHECK(k(2, 3) == Complex(-1.0, 0.0));
  CHECK(k(3, 2) == Complex(-1.0, 0.0));
  CHECK(entbound::hs_norm(k) == doctest::Approx(2.0).epsilon(1e-14));

  std::mt19937_64 eng(11);
  const ComplexMatrix a = random_hermitian(2, eng);
  const ComplexMatrix b = random_hermitian(3, eng);
  const ComplexMatrix c = random_hermitian(2, eng);
  const ComplexMatrix d = random_hermitian(3, eng);
  // (a kron b)(c kron d) = (ac) kron (bd).
  ComplexMatrix lhs = entbound::matmul(entbound::kron(a, b),
                                       entbound::kron(c, d));
  lhs -= entbound::kron(entbound::matmul(a, c), entbound::matmul(b, d));
  CHECK(entbound::max_abs(lhs) <= 1e-13);
}

TEST_CASE("hs_norm, max_abs, hermiticity_defect") {
  ComplexMatrix m(2, 2);
  m(0, 0) = Complex(3.0, 0.0);
  m(1, 1) = Complex(0.0, 4.0);
  CHECK(entbound::hs_norm(m) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(entbound::max_abs(m) == doctest::Approx(4.0).epsilon(1e-15));

  CHECK(entbound::hermiticity_defect(pauli_y()) == 0.0);
  // |m(1,1) - conj(m(1,1))| = |8i| = 8.
  CHECK(entbound::hermiticity_defect(m) == doctest::Approx(8.0));
  CHECK_THROWS_AS(entbound::hermiticity_defect(ComplexMatrix(2, 3)),
                  entbound::DimensionError);
}

TEST_CASE("hermitian_eigen: closed-form 2x2 cases") {
  // sigma_x: eigenvalues -1, +1.
  const entbound::EigenDecomposition eig = entbound::hermitian_eigen(pauli_x());
  CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

  // [[2, 1-i], [1+i, 3]]: trace 5, det 4 -> eigenvalues 1 and 4.
  ComplexMatrix m(2, 2);
  m(0, 0) = Complex(2.0, 0.0);
  m(0, 1) = Complex(1.0, -1.0);
  m(1, 0) = Complex(1.0, 1.0);
  m(1, 1) = Complex(3.0, 0.0);
  const entbound::EigenDecomposition e2 = entbound::hermitian_eigen(m);
  CHECK(e2.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(e2.eigenvalues[1] == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(residual_norm(m, e2) <= 1e-12);
}

TEST_CASE("hermitian_eigen: random matrices satisfy the residual contract") {
  std::mt19937_64 eng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(eng() % 26);
    const ComplexMatrix a = random_hermitian(n, eng);
    const entbound::EigenDecomposition eig = entbound::hermitian_eigen(a);

    const double scale = entbound::hs_norm(a);
    CHECK(residual_norm(a, eig) <= 1e-10 * scale);
    CHECK(orthonormality_defect(eig.eigenvectors) <= 1e-10);

    double eig_sum = 0.0;
    for (double v : eig.eigenvalues) eig_sum += v;
    CHECK(std::abs(eig_sum - a.trace().real()) <=
          1e-12 * static_cast<double>(n) * std::max(scale, 1.0));
    for (std::size_t k = 1; k < n; ++k) {
      CHECK(eig.eigenvalues[k - 1] <= eig.eigenvalues[k]);
    }
  }
}

TEST_CASE("hermitian_eigen input contract") {
  CHECK_THROWS_AS(entbound::hermitian_eigen(ComplexMatrix(2, 3)),
                  entbound::DimensionError);
  ComplexMatrix skewed(2, 2);
  skewed(0, 1) = Complex(1.0, 0.0);
  skewed(1, 0) = Complex(5.0, 0.0);
  CHECK_THROWS_AS(entbound::hermitian_eigen(skewed), entbound::DomainError);
}

TEST_CASE("hermitian_eigenvalues agrees with the full decomposition") {
  std::mt19937_64 eng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(eng() % 20);
    const ComplexMatrix a = random_hermitian(n, eng);
    const std::vector<double> fast = entbound::hermitian_eigenvalues(a);
    const entbound::EigenDecomposition full = entbound::hermitian_eigen(a);
    REQUIRE(fast.size() == n);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(fast[k] ==
            doctest::Approx(full.eigenvalues[k]).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("trace_norm_hermitian sums absolute eigenvalues") {
  ComplexMatrix m(3, 3);
  m(0, 0) = Complex(1.0, 0.0);
  m(1, 1) = Complex(-2.0, 0.0);
  m(2, 2) = Complex(3.0, 0.0);
  CHECK(entbound::trace_norm_hermitian(m) ==
        doctest::Approx(6.0).epsilon(1e-13));
}

TEST_CASE("gram is exactly Hermitian and matches a*adjoint(a)") {
  std::mt19937_64 eng(3);
  for (const auto [rows, cols] :
       {std::pair<int, int>{4, 4}, {5, 2}, {3, 7}}) {
    ComplexMatrix a(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a(i, j) = entbound::standard_complex_gaussian(eng);
      }
    }
    const ComplexMatrix g = entbound::gram(a);
    CHECK(entbound::hermiticity_defect(g) == 0.0);
    ComplexMatrix diff = entbound::matmul(a, a.adjoint());
    diff -= g;
    CHECK(entbound::max_abs(diff) <= 1e-12 * entbound::hs_norm(a) *
                                         entbound::hs_norm(a));
    CHECK(entbound::positive_semidefinite_within(g, 1e-10));
  }
}

TEST_CASE("positive_semidefinite_within separates signs around the shift") {
  ComplexMatrix m(2, 2);
  m(0, 0) = Complex(1.0, 0.0);
  m(1, 1) = Complex(-1e-12, 0.0);
  CHECK(entbound::positive_semidefinite_within(m, 1e-10));
  m(1, 1) = Complex(-1e-6, 0.0);
  CHECK_FALSE(entbound::positive_semidefinite_within(m, 1e-10));
  CHECK_THROWS_AS(entbound::positive_semidefinite_within(ComplexMatrix(1, 2),
                                                         1e-10),
                  entbound::DimensionError);
}
