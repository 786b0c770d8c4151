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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "entbound/random.hpp"
#include "entbound/states.hpp"

using entbound::Bipartition;
using entbound::Complex;
using entbound::ComplexMatrix;
using entbound::DensityMatrix;

namespace {

ComplexMatrix bell_phi_plus() {
  // (|00> + |11>)/sqrt(2) as a projector.
  ComplexMatrix m(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = Complex(0.5, 0.0);
  return m;
}

ComplexMatrix werner(double p) {
  ComplexMatrix m = bell_phi_plus();
  m *= Complex(p, 0.0);
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, i) += Complex((1.0 - p) / 4.0, 0.0);
  }
  return m;
}

ComplexMatrix maximally_mixed(int d) {
  ComplexMatrix m = ComplexMatrix::identity(d);
  m *= Complex(1.0 / static_cast<double>(d), 0.0);
  return m;
}

/// rho mixed toward I/d until Tr rho^2 == target. Purity along the line
/// t*rho + (1-t)*I/d is 1/d + t^2*(P0 - 1/d).
DensityMatrix mix_to_purity(const DensityMatrix& rho, double target) {
  const int d = rho.bipartition().d();
  const double p0 = entbound::purity(rho);
  REQUIRE(target <= p0);
  const double t =
      std::sqrt((target - 1.0 / d) / (p0 - 1.0 / d));
  ComplexMatrix m = rho.mat();
  m *= Complex(t, 0.0);
  ComplexMatrix mixed = maximally_mixed(d);
  mixed *= Complex(1.0 - t, 0.0);
  m += mixed;
  // Pin the trace to exactly 1 against accumulated rounding.
  Complex tr(0.0, 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
  m(0, 0) += Complex(1.0 - tr.real(), 0.0);
  return entbound::validate(m, rho.bipartition());
}

}  // namespace

TEST_CASE("bipartition derived quantities and guards") {
  const Bipartition part(2, 3);
  CHECK(part.d() == 6);
  CHECK(part.d_min() == 2);
  CHECK(part.d_max() == 3);
  CHECK_THROWS_AS(Bipartition(1, 4), entbound::DomainError);
  CHECK_THROWS_AS(Bipartition(3, 0), entbound::DomainError);
}

TEST_CASE("validate accepts the maximally mixed state") {
  const DensityMatrix rho =
      entbound::validate(maximally_mixed(4), Bipartition(2, 2));
  CHECK(entbound::purity(rho) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("validate rejects each invariant violation with its own kind") {
  using entbound::ValidationError;
  using entbound::ValidationFailure;

  // Negative eigenvalue below tolerance.
  ComplexMatrix neg(4, 4);
  neg(0, 0) = Complex(1.0, 0.0);
  neg(1, 1) = Complex(0.1, 0.0);
  neg(3, 3) = Complex(-0.1, 0.0);
  try {
    entbound::validate(neg, Bipartition(2, 2));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationFailure::not_positive);
  }

  // Dimension mismatch.
  try {
    entbound::validate(maximally_mixed(6), Bipartition(2, 2));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationFailure::dimension_mismatch);
  }

  // Hermiticity violation.
  ComplexMatrix skew = maximally_mixed(4);
  skew(0, 1) = Complex(0.1, 0.0);
  try {
    entbound::validate(skew, Bipartition(2, 2));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationFailure::not_hermitian);
  }

  // Trace away from one.
  ComplexMatrix traced = maximally_mixed(4);
  traced(0, 0) += Complex(1e-9, 0.0);
  try {
    entbound::validate(traced, Bipartition(2, 2));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationFailure::trace_not_one);
  }

  // Non-finite entries count as a shape failure.
  ComplexMatrix infinite = maximally_mixed(4);
  infinite(2, 2) = Complex(std::numeric_limits<double>::infinity(), 0.0);
  try {
    entbound::validate(infinite, Bipartition(2, 2));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationFailure::dimension_mismatch);
  }
}

TEST_CASE("purity and linear entropy at the extremes") {
  const DensityMatrix pure =
      entbound::validate(bell_phi_plus(), Bipartition(2, 2));
  CHECK(entbound::purity(pure) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(entbound::linear_entropy(pure) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-14));

  const DensityMatrix mixed =
      entbound::validate(maximally_mixed(6), Bipartition(2, 3));
  CHECK(entbound::purity(mixed) == doctest::Approx(1.0 / 6).epsilon(1e-14));
  CHECK(entbound::linear_entropy(mixed) ==
        doctest::Approx(1.0).epsilon(1e-13));

  // Two equal weights on a 2x2 system: purity 1/2, S_L = (4/3)*(1/2) = 2/3.
  ComplexMatrix half(4, 4);
  half(0, 0) = Complex(0.5, 0.0);
  half(1, 1) = Complex(0.5, 0.0);
  const DensityMatrix two_level =
      entbound::validate(half, Bipartition(2, 2));
  CHECK(entbound::purity(two_level) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(entbound::linear_entropy(two_level) ==
        doctest::Approx(2.0 / 3).epsilon(1e-13));
}

TEST_CASE("partial transpose: Bell spectrum, involution, norm preservation") {
  const DensityMatrix bell =
      entbound::validate(bell_phi_plus(), Bipartition(2, 2));
  const ComplexMatrix pt = entbound::partial_transpose_1(bell);
  const std::vector<double> spectrum = entbound::hermitian_eigenvalues(pt);
  CHECK(spectrum[0] == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(spectrum[1] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(spectrum[2] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(spectrum[3] == doctest::Approx(0.5).epsilon(1e-13));

  // Entry permutation: trace and HS norm carry over exactly, applying it
  // twice is the identity.
  CHECK(pt.trace() == bell.mat().trace());
  CHECK(entbound::hs_norm(pt) == entbound::hs_norm(bell.mat()));
  ComplexMatrix twice = entbound::partial_transpose_1(pt, 2, 2);
  twice -= bell.mat();
  CHECK(entbound::max_abs(twice) == 0.0);
}

TEST_CASE("partial transpose of a product state keeps the spectrum") {
  entbound::SampleStream stream{5, 0};
  std::mt19937_64 eng = entbound::stream_engine(stream);
  ComplexMatrix a(2, 2);
  ComplexMatrix b(3, 3);
  // Two random pure factors.
  for (auto* f : {&a, &b}) {
    const std::size_t n = f->rows();
    std::vector<Complex> v(n);
    double norm = 0.0;
    for (auto& x : v) {
      x = entbound::standard_complex_gaussian(eng);
      norm += std::norm(x);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        (*f)(i, j) = v[i] * std::conj(v[j]) / norm;
      }
    }
  }
  const ComplexMatrix prod = entbound::kron(a, b);
  const std::vector<double> before = entbound::hermitian_eigenvalues(prod);
  const std::vector<double> after =
      entbound::hermitian_eigenvalues(entbound::partial_transpose_1(prod, 2, 3));
  for (std::size_t k = 0; k < before.size(); ++k) {
    CHECK(after[k] == doctest::Approx(before[k]).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("partial trace recovers factors and marginals") {
  ComplexMatrix a(2, 2);
  a(0, 0) = Complex(0.75, 0.0);
  a(1, 1) = Complex(0.25, 0.0);
  a(0, 1) = Complex(0.1, 0.2);
  a(1, 0) = Complex(0.1, -0.2);
  const ComplexMatrix b = maximally_mixed(3);
  const ComplexMatrix prod = entbound::kron(a, b);

  ComplexMatrix kept1 = entbound::partial_trace(prod, 2, 3,
                                                entbound::Keep::subsystem1);
  kept1 -= a;
  CHECK(entbound::max_abs(kept1) <= 1e-15);

  ComplexMatrix kept2 = entbound::partial_trace(prod, 2, 3,
                                                entbound::Keep::subsystem2);
  kept2 -= b;
  CHECK(entbound::max_abs(kept2) <= 1e-15);

  // Bell marginal is maximally mixed.
  ComplexMatrix marginal = entbound::partial_trace(
      bell_phi_plus(), 2, 2, entbound::Keep::subsystem2);
  marginal -= maximally_mixed(2);
  CHECK(entbound::max_abs(marginal) <= 1e-15);

  // Trace is linear: reduced trace stays 1 on random states.
  for (std::uint64_t i = 0; i < 5; ++i) {
    const DensityMatrix rho = entbound::random_density_hs(
        Bipartition(2, 4), entbound::SampleStream{99, i});
    const ComplexMatrix red =
        entbound::partial_trace(rho, entbound::Keep::subsystem1);
    CHECK(red.trace().real() == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("negativity oracles: Bell, product, Werner family") {
  CHECK(entbound::negativity(entbound::validate(
            bell_phi_plus(), Bipartition(2, 2))) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Product states have positive partial transpose; the clamp returns
  // exactly zero.
  ComplexMatrix prod = entbound::kron(maximally_mixed(2), maximally_mixed(2));
  CHECK(entbound::negativity(entbound::validate(prod, Bipartition(2, 2))) ==
        0.0);

  // Werner: eigenvalues of the partial transpose are (1+p)/4 (x3) and
  // (1-3p)/4, so N = max(0, (3p-1)/2).
  for (int step = 0; step <= 10; ++step) {
    const double p = 0.1 * step;
    const DensityMatrix rho =
        entbound::validate(werner(p), Bipartition(2, 2));
    const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    CHECK(entbound::negativity(rho) ==
          doctest::Approx(expected).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("purity is invariant under partial transposition") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    const DensityMatrix rho = entbound::random_density_hs(
        Bipartition(3, 3), entbound::SampleStream{123, i});
    const double direct = entbound::purity(rho);
    const double pt_norm = entbound::hs_norm(entbound::partial_transpose_1(rho));
    CHECK(pt_norm * pt_norm ==
          doctest::Approx(direct).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("negativity stays in [0,1] and vanishes at low purity") {
  // Below the separability threshold purity <= 1/(d-1) no entanglement
  // survives, across every bipartition.
  for (const Bipartition part : {Bipartition(2, 2), Bipartition(2, 3)}) {
    for (std::uint64_t i = 0; i < 20; ++i) {
      const DensityMatrix rho =
          entbound::random_density_hs(part, entbound::SampleStream{77, i});
      const double n = entbound::negativity(rho);
      CHECK(n >= 0.0);
      CHECK(n <= 1.0);

      const DensityMatrix dull =
          mix_to_purity(rho, 1.0 / (part.d() - 1.0));
      CHECK(entbound::negativity(dull) <= 1e-9);
    }
  }
}

TEST_CASE("qdm round trip is exact") {
  const DensityMatrix rho = entbound::random_density_hs(
      Bipartition(2, 3), entbound::SampleStream{2024, 0});
  std::stringstream buffer;
  entbound::write_qdm(buffer, rho.mat(), rho.bipartition());
  const entbound::QdmState back = entbound::read_qdm(buffer);
  CHECK(back.part == rho.bipartition());
  ComplexMatrix diff = back.mat;
  diff -= rho.mat();
  CHECK(entbound::max_abs(diff) == 0.0);
}

TEST_CASE("qdm parse failures carry line positions") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return entbound::read_qdm(in);
  };

  CHECK_THROWS_AS(parse(""), entbound::ParseError);
  CHECK_THROWS_AS(parse("qdm 2 2 2\n"), entbound::ParseError);
  CHECK_THROWS_AS(parse("qdm 1 1 4\n"), entbound::ParseError);
  CHECK_THROWS_AS(parse("qdm 1 2 2 extra\n"), entbound::ParseError);

  try {
    parse("qdm 1 2 2\n0.25 0\nnot-a-number 0\n");
    FAIL("expected ParseError");
  } catch (const entbound::ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  try {
    parse("qdm 1 2 2\n0.25 0\n");
    FAIL("expected ParseError");
  } catch (const entbound::ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  CHECK_THROWS_AS(entbound::load_qdm("/nonexistent/state.qdm"),
                  entbound::ParseError);
}
