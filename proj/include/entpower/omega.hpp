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

#ifndef ENTPOWER_OMEGA_HPP
#define ENTPOWER_OMEGA_HPP

#include <cstdint>

#include "entpower/linalg.hpp"
#include "entpower/parallel.hpp"

namespace entpower {

// All operators here act on four d-dimensional parties in the flat order of
// PartyIndexer({d, d, d, d}). Parties 0 and 1 hold the first copy of the
// bipartite system (A, B), parties 2 and 3 the second copy (A', B').
// The twirl conjugates by V on parties 0, 2 and W on parties 1, 3.

/// Omega = [I + S_13 S_24] / (d^2 (d^2-1)) - [S_13 + S_24] / (d^3 (d^2-1)).
ComplexMatrix omega_closed_form(int d);

/// The same operator as 2/(d^3 (d^2-1)) [(d-1) P+_13 P+_24 + (d+1) P-_13 P-_24]
/// with P± = (I ± S)/2.
ComplexMatrix omega_projector_form(int d);

struct OmegaEstimate {
    ComplexMatrix mean;
    Eigen::MatrixXd re_std_error;
    Eigen::MatrixXd im_std_error;
    std::int64_t samples = 0;
    std::uint64_t master_seed = 0;
};

inline constexpr int kMaxMcOmegaDim = 3;
inline constexpr std::int64_t kMinOmegaSamples = 1000;

/// Sample average of (V1 V3 W2 W4) P+ (V1 V3 W2 W4)^dagger, with P+ the
/// projector onto psi_plus(d), plus per-entry standard errors.
OmegaEstimate mc_omega(int d, std::int64_t n, std::uint64_t seed, ExecPolicy policy = {});

namespace reference {
OmegaEstimate mc_omega(int d, std::int64_t n, std::uint64_t seed);
}  // namespace reference

struct OmegaComparison {
    double max_abs_deviation = 0.0;
    /// Largest |estimate - exact| / std_error over real and imaginary parts.
    double max_z = 0.0;
    double trace_deviation = 0.0;
};

OmegaComparison compare_omega(const OmegaEstimate &estimate, const ComplexMatrix &exact);

/// max |[Omega, V_1 V_3]| for a d x d unitary V.
double omega_commutator_residual(const ComplexMatrix &omega, const ComplexMatrix &v);

/// delta(U) = (d Tr((U (x) U) Omega (U (x) U)^dagger S_13) - 1) / (d - 1).
/// Throws Error(SizeLimit) for d > kMaxFourPartyDim.
double delta_via_omega(const Unitary &u);

}  // namespace entpower

#endif
