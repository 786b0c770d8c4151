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

#ifndef ENTBOUND_RANDOM_HPP
#define ENTBOUND_RANDOM_HPP

#include <cstdint>
#include <random>

#include "entbound/states.hpp"

namespace entbound {

/// Address of one sample in a reproducible ensemble. Sample `index` under
/// `master_seed` is the same state no matter in which order, on how many
/// threads, or how often it is drawn.
struct SampleStream {
  std::uint64_t master_seed = 0;
  std::uint64_t index = 0;
};

/// Avalanche-mixes (master_seed, index, lane) into one generator seed.
/// Lanes decorrelate different uses of the same sample index (e.g. the
/// dimension draw of a sweep row vs. the matrix entries of that row).
std::uint64_t derive_stream_seed(const SampleStream& stream,
                                 std::uint64_t lane = 0);

/// Engine for one sample. mt19937_64 because its output sequence is fixed
/// by the standard, keeping ensembles identical across platforms.
std::mt19937_64 stream_engine(const SampleStream& stream,
                              std::uint64_t lane = 0);

/// Uniform double in [0, 1) from the top 53 bits of the engine output.
/// (The standard library's distributions are implementation-defined, so
/// every mapping from engine words to numbers is spelled out here.)
double uniform_unit(std::mt19937_64& eng);

/// Standard complex Gaussian: variance 1 per complex entry, i.e. real and
/// imaginary parts N(0, 1/2). Marsaglia polar method.
Complex standard_complex_gaussian(std::mt19937_64& eng);

/// Uniform integer in [lo, hi] via masked rejection.
std::uint64_t bounded_uint(std::mt19937_64& eng, std::uint64_t lo,
                           std::uint64_t hi);

/// d x k matrix of independent standard complex Gaussian entries.
ComplexMatrix ginibre(int d, int k, const SampleStream& stream);

/// G G^dagger / Tr(G G^dagger) with square G: a random density matrix under
/// the Hilbert-Schmidt measure.
DensityMatrix random_density_hs(const Bipartition& part,
                                const SampleStream& stream,
                                double psd_tol = 1e-10);

/// Same construction with rectangular d x k Ginibre: rank <= min(d, k).
/// k = 1 gives a pure state, large k concentrates toward maximal mixing.
DensityMatrix random_density_induced(const Bipartition& part, int k,
                                     const SampleStream& stream,
                                     double psd_tol = 1e-10);

/// The (d1, d2) used for row `index` of the random sweeps: d1 uniform in
/// [dm_min, dm_max], d2 = d1 + offset. Drawn from its own lane so the
/// dimensions stay decorrelated from the state entries.
Bipartition sweep_dims(std::uint64_t master_seed, std::uint64_t index,
                       int dm_min, int dm_max, int offset);

}  // namespace entbound

#endif  // ENTBOUND_RANDOM_HPP
