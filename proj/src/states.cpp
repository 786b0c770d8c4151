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

#include "entbound/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace entbound {

namespace {

void require_matching_dims(const ComplexMatrix& mat, int d1, int d2,
                           const char* op) {
  const std::size_t d = static_cast<std::size_t>(d1) * static_cast<std::size_t>(d2);
  if (!mat.square() || mat.rows() != d) {
    throw DimensionError(std::string(op) + ": matrix is " +
                         std::to_string(mat.rows()) + "x" +
                         std::to_string(mat.cols()) + ", bipartition needs " +
                         std::to_string(d) + "x" + std::to_string(d));
  }
}

}  // namespace

Bipartition::Bipartition(int d1, int d2) : d1_(d1), d2_(d2) {
  if (d1 < 2 || d2 < 2) {
    throw DomainError("Bipartition: both dimensions must be at least 2, got " +
                      std::to_string(d1) + " and " + std::to_string(d2));
  }
}

DensityMatrix validate(const ComplexMatrix& mat, const Bipartition& part,
                       double psd_tol) {
  const std::size_t d = static_cast<std::size_t>(part.d());
  if (!mat.square() || mat.rows() != d || !mat.all_finite()) {
    throw ValidationError(
        ValidationFailure::dimension_mismatch,
        "validate: need a finite " + std::to_string(d) + "x" +
            std::to_string(d) + " matrix for bipartition (" +
            std::to_string(part.d1()) + "," + std::to_string(part.d2()) +
            "), got " + std::to_string(mat.rows()) + "x" +
            std::to_string(mat.cols()));
  }

  const double defect = hermiticity_defect(mat);
  if (!(defect <= psd_tol)) {
    throw ValidationError(ValidationFailure::not_hermitian,
                          "validate: hermiticity defect " +
                              std::to_string(defect) + " exceeds " +
                              std::to_string(psd_tol));
  }

  const double trace_error = std::abs(mat.trace() - Complex(1.0, 0.0));
  if (!(trace_error <= 1e-12)) {
    throw ValidationError(ValidationFailure::trace_not_one,
                          "validate: |trace - 1| = " +
                              std::to_string(trace_error) + " exceeds 1e-12");
  }

  // Cholesky of mat + psd_tol*I succeeds iff no eigenvalue sits below
  // -psd_tol (up to the factorization's own roundoff, far below psd_tol
  // here). Only on failure pay for the spectrum to report the offender.
  if (!positive_semidefinite_within(mat, psd_tol)) {
    const std::vector<double> values = hermitian_eigenvalues(mat, psd_tol);
    throw ValidationError(ValidationFailure::not_positive,
                          "validate: minimum eigenvalue " +
                              std::to_string(values.front()) + " is below -" +
                              std::to_string(psd_tol));
  }

  return DensityMatrix(mat, part, psd_tol);
}

double purity(const DensityMatrix& rho) {
  const double norm = hs_norm(rho.mat());
  const double value = norm * norm;
  const double floor = 1.0 / static_cast<double>(rho.bipartition().d());
  if (value < floor - 1e-9 || value > 1.0 + 1e-9) {
    throw NumericalError("purity: Tr rho^2 = " + std::to_string(value) +
                         " escapes [" + std::to_string(floor) + ", 1]");
  }
  return std::clamp(value, floor, 1.0);
}

double linear_entropy(const DensityMatrix& rho) {
  const double d = static_cast<double>(rho.bipartition().d());
  return d / (d - 1.0) * (1.0 - purity(rho));
}

ComplexMatrix partial_transpose_1(const ComplexMatrix& mat, int d1, int d2) {
  require_matching_dims(mat, d1, d2, "partial_transpose_1");
  const std::size_t n1 = static_cast<std::size_t>(d1);
  const std::size_t n2 = static_cast<std::size_t>(d2);
  ComplexMatrix out(mat.rows(), mat.cols());
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t ap = 0; ap < n1; ++ap) {
      for (std::size_t b = 0; b < n2; ++b) {
        for (std::size_t bp = 0; bp < n2; ++bp) {
          out(a * n2 + b, ap * n2 + bp) = mat(ap * n2 + b, a * n2 + bp);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose_1(const DensityMatrix& rho) {
  return partial_transpose_1(rho.mat(), rho.bipartition().d1(),
                             rho.bipartition().d2());
}

ComplexMatrix partial_trace(const ComplexMatrix& mat, int d1, int d2,
                            Keep keep) {
  require_matching_dims(mat, d1, d2, "partial_trace");
  const std::size_t n1 = static_cast<std::size_t>(d1);
  const std::size_t n2 = static_cast<std::size_t>(d2);
  if (keep == Keep::subsystem1) {
    ComplexMatrix out(n1, n1);
    for (std::size_t a = 0; a < n1; ++a) {
      for (std::size_t ap = 0; ap < n1; ++ap) {
        Complex sum(0.0, 0.0);
        for (std::size_t b = 0; b < n2; ++b) {
          sum += mat(a * n2 + b, ap * n2 + b);
        }
        out(a, ap) = sum;
      }
    }
    return out;
  }
  ComplexMatrix out(n2, n2);
  for (std::size_t b = 0; b < n2; ++b) {
    for (std::size_t bp = 0; bp < n2; ++bp) {
      Complex sum(0.0, 0.0);
      for (std::size_t a = 0; a < n1; ++a) {
        sum += mat(a * n2 + b, a * n2 + bp);
      }
      out(b, bp) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const DensityMatrix& rho, Keep keep) {
  return partial_trace(rho.mat(), rho.bipartition().d1(),
                       rho.bipartition().d2(), keep);
}

double negativity(const DensityMatrix& rho) {
  const ComplexMatrix pt = partial_transpose_1(rho);
  // PT permutes entries of a Hermitian matrix into a Hermitian matrix, but
  // the input is only Hermitian within psd_tol; the defect bound must scale
  // with it rather than with the eigensolver default.
  const double tol =
      2.0 * rho.psd_tol() * static_cast<double>(rho.bipartition().d());
  const double norm = trace_norm_hermitian(pt, std::max(tol, 1e-10));
  const double d_m = static_cast<double>(rho.bipartition().d_min());
  const double value = (norm - 1.0) / (d_m - 1.0);
  if (value < -1e-10 || value > 1.0 + 1e-10) {
    throw NumericalError("negativity: value " + std::to_string(value) +
                         " escapes [0, 1]");
  }
  return std::clamp(value, 0.0, 1.0);
}

QdmState read_qdm(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("qdm: empty input, expected header `qdm 1 <d1> <d2>`");
  }
  std::istringstream header(line);
  std::string magic;
  int version = 0;
  int d1 = 0;
  int d2 = 0;
  if (!(header >> magic >> version >> d1 >> d2) || magic != "qdm" ||
      version != 1) {
    throw ParseError("qdm: line 1: bad header `" + line +
                     "`, expected `qdm 1 <d1> <d2>`");
  }
  std::string rest;
  if (header >> rest) {
    throw ParseError("qdm: line 1: trailing content `" + rest + "`");
  }
  if (d1 < 2 || d2 < 2) {
    throw ParseError("qdm: line 1: dimensions must be at least 2, got " +
                     std::to_string(d1) + " and " + std::to_string(d2));
  }

  const Bipartition part(d1, d2);
  const std::size_t d = static_cast<std::size_t>(part.d());
  ComplexMatrix mat(d, d);
  for (std::size_t k = 0; k < d * d; ++k) {
    const std::size_t line_no = k + 2;
    if (!std::getline(in, line)) {
      throw ParseError("qdm: line " + std::to_string(line_no) +
                       ": unexpected end of input, expected " +
                       std::to_string(d * d) + " entry lines");
    }
    std::istringstream entry(line);
    double re = 0.0;
    double im = 0.0;
    if (!(entry >> re >> im)) {
      throw ParseError("qdm: line " + std::to_string(line_no) +
                       ": bad entry `" + line + "`, expected `<re> <im>`");
    }
    if (entry >> rest) {
      throw ParseError("qdm: line " + std::to_string(line_no) +
                       ": trailing content `" + rest + "`");
    }
    mat(k / d, k % d) = Complex(re, im);
  }
  return QdmState{std::move(mat), part};
}

QdmState load_qdm(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("qdm: cannot open `" + path + "`");
  }
  return read_qdm(in);
}

void write_qdm(std::ostream& out, const ComplexMatrix& mat,
               const Bipartition& part) {
  require_matching_dims(mat, part.d1(), part.d2(), "write_qdm");
  out << "qdm 1 " << part.d1() << ' ' << part.d2() << '\n';
  char buffer[64];
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    for (std::size_t j = 0; j < mat.cols(); ++j) {
      // %.17g round-trips doubles exactly.
      std::snprintf(buffer, sizeof(buffer), "%.17g %.17g", mat(i, j).real(),
                    mat(i, j).imag());
      out << buffer << '\n';
    }
  }
}

void save_qdm(const std::string& path, const ComplexMatrix& mat,
              const Bipartition& part) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("qdm: cannot open `" + path + "` for writing");
  }
  write_qdm(out, mat, part);
  out.flush();
  if (!out) {
    throw ParseError("qdm: write to `" + path + "` failed");
  }
}

}  // namespace entbound
