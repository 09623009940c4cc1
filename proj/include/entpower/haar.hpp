// Copyright 2026 The entpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTPOWER_HAAR_HPP
#define ENTPOWER_HAAR_HPP

#include <cstdint>

#include "entpower/linalg.hpp"
#include "entpower/parallel.hpp"
#include "entpower/rng.hpp"

namespace entpower {

/// Normalized vector of independent standard complex Gaussians: uniform on
/// the unit sphere of C^d.
StateVector random_pure_state(int d, RngStream &stream);

/// Haar-distributed n x n unitary: Q of the QR decomposition of a complex
/// Ginibre matrix, with column j multiplied by R_jj / |R_jj| so that the
/// factorization has a positive diagonal R.
ComplexMatrix random_unitary(int n, RngStream &stream);

/// Haar-random unitary on C^d (x) C^d.
Unitary random_bipartite_unitary(int d, RngStream &stream);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
    std::uint64_t master_seed = 0;
};

enum class TwirlSides {
    // Average over (V (x) W)|psi+> with V, W independent Haar.
    Both,
    // V = I; only W is sampled.
    One,
};

inline constexpr std::int64_t kMinMcSamples = 100;

/// Mean of S_L(U |psi_1>|psi_2>) over uniformly random product states,
/// with S_L across A|B at D = d.
McEstimate mc_entangling_power(const Unitary &u, std::int64_t n, std::uint64_t seed, ExecPolicy policy = {});

/// 1 - mean of S_L(U (V (x) W)|psi+>) over Haar V, W.
McEstimate mc_disentangling_power(const Unitary &u, std::int64_t n, std::uint64_t seed, ExecPolicy policy = {},
                                  TwirlSides sides = TwirlSides::Both);

/// Single-sample kernels shared by the parallel and reference estimators.
double entangling_sample(const Unitary &u, RngStream &stream);
double disentangling_sample(const Unitary &u, RngStream &stream, TwirlSides sides);

/// Straight serial loops over the same samples; kept as the baseline the
/// OpenMP kernels are tested and benchmarked against.
namespace reference {
McEstimate mc_entangling_power(const Unitary &u, std::int64_t n, std::uint64_t seed);
McEstimate mc_disentangling_power(const Unitary &u, std::int64_t n, std::uint64_t seed,
                                  TwirlSides sides = TwirlSides::Both);
}  // namespace reference

}  // namespace entpower

#endif
