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

#include "entbound/random.hpp"

#include <cmath>
#include <iostream>
#include <string>

namespace entbound {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

DensityMatrix density_from_ginibre(const Bipartition& part, int k,
                                   const SampleStream& stream,
                                   double psd_tol) {
  // Tr(G G^dagger) = 0 only for G = 0, a probability-zero draw; the
  // resample path keeps determinism by advancing an attempt counter that
  // feeds the lane, never the shared index space.
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    SampleStream attempt_stream = stream;
    if (attempt > 0) {
      attempt_stream.master_seed =
          splitmix64(stream.master_seed ^ (attempt * 0xa0761d6478bd642fULL));
    }
    const ComplexMatrix g = ginibre(part.d(), k, attempt_stream);
    ComplexMatrix m = gram(g);
    const double trace = m.trace().real();
    if (trace > 0.0 && std::isfinite(trace)) {
      m *= Complex(1.0 / trace, 0.0);
      // Renormalize the diagonal so the trace is exactly 1 in floating
      // point; validate() allows only 1e-12 slack.
      Complex t(0.0, 0.0);
      for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
      const double correction = 1.0 - t.real();
      m(0, 0) += Complex(correction, 0.0);
      return validate(m, part, psd_tol);
    }
    std::cerr << "entbound: degenerate random draw at index "
              << stream.index << ", resampling\n";
  }
  throw NumericalError("random density: resample budget exhausted at index " +
                       std::to_string(stream.index));
}

}  // namespace

std::uint64_t derive_stream_seed(const SampleStream& stream,
                                 std::uint64_t lane) {
  std::uint64_t s = splitmix64(stream.master_seed ^ 0x8e2f9d4b6a531c07ULL);
  s = splitmix64(s ^ stream.index);
  s = splitmix64(s ^ (lane * 0xd6e8feb86659fd93ULL));
  return s;
}

std::mt19937_64 stream_engine(const SampleStream& stream, std::uint64_t lane) {
  return std::mt19937_64(derive_stream_seed(stream, lane));
}

double uniform_unit(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

Complex standard_complex_gaussian(std::mt19937_64& eng) {
  double u;
  double v;
  double s;
  do {
    u = 2.0 * uniform_unit(eng) - 1.0;
    v = 2.0 * uniform_unit(eng) - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  // Polar Box-Muller gives two independent N(0,1); scaling by 1/sqrt(2)
  // makes the complex entry variance 1.
  const double scale = std::sqrt(-std::log(s) / s);
  return Complex(u * scale, v * scale);
}

std::uint64_t bounded_uint(std::mt19937_64& eng, std::uint64_t lo,
                           std::uint64_t hi) {
  if (lo > hi) {
    throw DomainError("bounded_uint: empty range [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "]");
  }
  const std::uint64_t span = hi - lo;
  if (span == 0) return lo;
  std::uint64_t mask = span;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  while (true) {
    const std::uint64_t draw = eng() & mask;
    if (draw <= span) return lo + draw;
  }
}

ComplexMatrix ginibre(int d, int k, const SampleStream& stream) {
  if (d < 1 || k < 1) {
    throw DomainError("ginibre: dimensions " + std::to_string(d) + "x" +
                      std::to_string(k) + " must be positive");
  }
  std::mt19937_64 eng = stream_engine(stream);
  ComplexMatrix g(static_cast<std::size_t>(d), static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      g(i, j) = standard_complex_gaussian(eng);
    }
  }
  return g;
}

DensityMatrix random_density_hs(const Bipartition& part,
                                const SampleStream& stream, double psd_tol) {
  return density_from_ginibre(part, part.d(), stream, psd_tol);
}

DensityMatrix random_density_induced(const Bipartition& part, int k,
                                     const SampleStream& stream,
                                     double psd_tol) {
  if (k < 1) {
    throw DomainError("random_density_induced: k = " + std::to_string(k) +
                      " must be at least 1");
  }
  return density_from_ginibre(part, k, stream, psd_tol);
}

Bipartition sweep_dims(std::uint64_t master_seed, std::uint64_t index,
                       int dm_min, int dm_max, int offset) {
  if (dm_min < 2 || dm_max < dm_min || offset < 0) {
    throw DomainError("sweep_dims: need 2 <= dm_min <= dm_max and a "
                      "nonnegative offset");
  }
  std::mt19937_64 eng = stream_engine(SampleStream{master_seed, index}, 1);
  const int d1 = static_cast<int>(
      bounded_uint(eng, static_cast<std::uint64_t>(dm_min),
                   static_cast<std::uint64_t>(dm_max)));
  return Bipartition(d1, d1 + offset);
}

}  // namespace entbound
