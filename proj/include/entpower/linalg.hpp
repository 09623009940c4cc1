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

#ifndef ENTPOWER_LINALG_HPP
#define ENTPOWER_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "entpower/permutation.hpp"

namespace entpower {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

inline constexpr int kMinLocalDim = 2;
inline constexpr int kMaxLocalDim = 16;
// Operators on four parties are dense d^4 x d^4 matrices.
inline constexpr int kMaxFourPartyDim = 6;
inline constexpr int kMaxDenseSide = 1296;
inline constexpr double kUnitarityTol = 1e-10;
inline constexpr double kNormTol = 1e-10;

// ---------------------------------------------------------------------------
// Composite indexing.
//
// A basis state of parties with dimensions (n_0, ..., n_{k-1}) is the digit
// tuple (x_0, ..., x_{k-1}); its flat index is the mixed-radix number with
// party 0 most significant:
//
//     flat = ((x_0 * n_1 + x_1) * n_2 + x_2) * ... + x_{k-1}.
//
// For a bipartite d x d system this is k = i * d + j. For four parties
// (1, 2, 3, 4) it is ((a * d + b) * d + c) * d + e. Every module converts
// between flat indices and digits through PartyIndexer; nothing else does
// this arithmetic by hand.
// ---------------------------------------------------------------------------
class PartyIndexer {
   public:
    explicit PartyIndexer(std::vector<int> dims);

    std::size_t parties() const noexcept {
        return dims_.size();
    }
    std::span<const int> dims() const noexcept {
        return dims_;
    }
    /// Product of all party dimensions.
    std::size_t total() const noexcept {
        return total_;
    }

    std::size_t flat(std::span<const int> digits) const;
    void digits(std::size_t flat, std::span<int> out) const;
    std::vector<int> digits(std::size_t flat) const;

   private:
    std::vector<int> dims_;
    std::size_t total_;
};

inline constexpr int pair_index(int i, int j, int d) noexcept {
    return i * d + j;
}

/// Throws Error(NotFinite) on any NaN or Inf entry.
void require_finite(const ComplexMatrix &m);

double max_abs(const ComplexMatrix &m);

/// Max-norm of U^dagger U - I.
double unitarity_deviation(const ComplexMatrix &m);

/// Entry [(i * b.rows + k), (j * b.cols + l)] = a[i, j] * b[k, l].
/// Throws Error(SizeLimit) if either side of the result exceeds kMaxDenseSide.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Reduced density matrix on the parties listed in `keep` (in increasing
/// party order). An empty `keep` yields the 1 x 1 matrix [Tr rho].
ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const int> dims, std::span<const int> keep);

/// Entry [p(k), k] = 1, all others 0.
ComplexMatrix permutation_matrix(const Permutation &p);

/// The basis permutation exchanging the digits of parties `p` and `q`.
Permutation party_swap_permutation(std::span<const int> dims, int p, int q);

/// A d^2 x d^2 unitary on H_A (x) H_B. Row/column index (i, j) -> i * d + j,
/// i on A.
class Unitary {
   public:
    /// Throws Error(NotUnitary) if ||U^dagger U - I||_max > kUnitarityTol,
    /// Error(ShapeMismatch) if the matrix is not d^2 x d^2, and
    /// Error(SizeLimit) for d outside [kMinLocalDim, kMaxLocalDim].
    Unitary(int d, ComplexMatrix matrix);

    static Unitary identity(int d);
    static Unitary from_permutation(int d, const Permutation &p);

    int d() const noexcept {
        return d_;
    }
    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }

    Unitary operator*(const Unitary &rhs) const;

   private:
    int d_;
    ComplexMatrix matrix_;
};

/// A normalized pure state over parties with the given dimensions.
class StateVector {
   public:
    /// Throws Error(NotNormalized) if | ||amplitudes|| - 1 | > kNormTol.
    StateVector(std::vector<int> dims, ComplexVector amplitudes);

    std::span<const int> dims() const noexcept {
        return dims_;
    }
    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    const ComplexVector &amplitudes() const noexcept {
        return amplitudes_;
    }

   private:
    std::vector<int> dims_;
    ComplexVector amplitudes_;
};

void require_local_dim(int d, int max_d = kMaxLocalDim);

}  // namespace entpower

#endif
