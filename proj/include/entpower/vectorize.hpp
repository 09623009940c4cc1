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

#ifndef ENTPOWER_VECTORIZE_HPP
#define ENTPOWER_VECTORIZE_HPP

#include <initializer_list>
#include <vector>

#include "entpower/linalg.hpp"

namespace entpower {

/// A unit vector over four d-dimensional parties. The parties are numbered
/// 0..3 in code and correspond to the labels 1..4 used in the math:
///
///     party 0 = A-row, 1 = A-column, 2 = B-row, 3 = B-column.
///
/// Amplitude T[a, b, c, e] lives at flat index ((a*d + b)*d + c)*d + e.
class FourPartyState {
   public:
    FourPartyState(int d, ComplexVector amplitudes);

    int d() const noexcept {
        return d_;
    }
    const StateVector &state() const noexcept {
        return state_;
    }
    const ComplexVector &amplitudes() const noexcept {
        return state_.amplitudes();
    }
    Complex at(int a, int b, int c, int e) const;

   private:
    int d_;
    StateVector state_;
};

/// A bipartition of a multi-party system; `left` holds 0-based party indices.
class Cut {
   public:
    Cut(int parties, std::vector<int> left);

    int parties() const noexcept {
        return parties_;
    }
    const std::vector<int> &left() const noexcept {
        return left_;
    }
    const std::vector<int> &right() const noexcept {
        return right_;
    }
    Cut flipped() const;

   private:
    int parties_;
    std::vector<int> left_;
    std::vector<int> right_;
};

/// The A|B cut of a vectorized operator (labels 12|34).
Cut cut_12_34();
/// The row|column cut of a vectorized operator (labels 13|24).
Cut cut_13_24();
/// The A|B cut of a plain bipartite state.
Cut cut_bipartite();

/// (1/d) sum_ij |ij>_{13} |ij>_{24}, i.e. T[a,b,c,e] = [a=b][c=e] / d.
FourPartyState psi_plus(int d);

/// T[a,b,c,e] = U[(a,c),(b,e)] / d.
FourPartyState vectorize(const Unitary &u);

/// The swap S|i>|j> = |j>|i> on C^d (x) C^d.
Unitary swap_operator(int d);

/// (D/(D-1)) (1 - Tr rho^2) with rho the reduced state of the left side and D
/// the smaller of the two side dimensions. Result is clamped to [0, 1];
/// values within kEntropySnap of either end are snapped onto it.
double linear_entropy(const StateVector &state, const Cut &cut);
double linear_entropy(const FourPartyState &state, const Cut &cut);

/// Normalized linear entropy from a purity at local dimension D.
double normalized_linear_entropy(double purity, int dimension);

inline constexpr double kEntropySnap = 1e-12;

/// S_L(|U>) across the 12|34 cut.
double entropy_of_operator(const Unitary &u);

/// S_L(|U>) through the two-copy trace identity
///   (d^2/(d^2-1)) [1 - d^-4 Tr((U (x) U) S_13 (U (x) U)^dagger S_13)],
/// where the copies occupy parties (1,2) and (3,4) and S_13 swaps 1 and 3.
/// Throws Error(SizeLimit) for d > kMaxFourPartyDim.
double entropy_trace_formula(const Unitary &u);

}  // namespace entpower

#endif
