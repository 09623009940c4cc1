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

#ifndef ENTPOWER_LATIN_HPP
#define ENTPOWER_LATIN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "entpower/permutation.hpp"

namespace entpower {

/// Addition and multiplication tables of GF(q). Elements are 0..q-1; for
/// q = p^k an element is the base-p digit string of its polynomial
/// coefficients (constant term least significant).
class FiniteField {
   public:
    /// Supported orders: primes up to 16 and the bundled 4, 8, 9.
    /// Throws Error(NoConstruction) otherwise.
    explicit FiniteField(int order);

    static bool supported(int order);

    int order() const noexcept {
        return q_;
    }
    int add(int x, int y) const {
        return add_[static_cast<std::size_t>(x * q_ + y)];
    }
    int mul(int x, int y) const {
        return mul_[static_cast<std::size_t>(x * q_ + y)];
    }

   private:
    int q_;
    std::vector<int> add_;
    std::vector<int> mul_;
};

class LatinSquare {
   public:
    /// Throws Error(InvalidArgument) if a row or column repeats a symbol.
    explicit LatinSquare(std::vector<std::vector<int>> cells);

    int order() const noexcept {
        return static_cast<int>(cells_.size());
    }
    int operator()(int i, int j) const {
        return cells_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const std::vector<std::vector<int>> &cells() const noexcept {
        return cells_;
    }

    friend bool operator==(const LatinSquare &, const LatinSquare &) = default;

   private:
    std::vector<std::vector<int>> cells_;
};

bool is_latin(const std::vector<std::vector<int>> &cells);
bool are_orthogonal(const LatinSquare &first, const LatinSquare &second);

struct MolsPair {
    LatinSquare first;
    LatinSquare second;
};

/// cells[i][j] = a*i + j over GF(d), for d prime or d in {4, 8, 9}.
/// Throws Error(NoConstruction) for other orders and Error(InvalidArgument)
/// for a = 0.
LatinSquare cyclic_latin_square(int d, int a);

/// Squares with multipliers 1 and 2. Throws Error(NoMolsPair) for d = 2, 6
/// and Error(NoConstruction) for other unsupported orders.
MolsPair mols_pair(int d);

/// (i, j) -> (first(i, j), second(i, j)) under the pair encoding i*d + j.
Permutation ols_permutation(const MolsPair &pair);

/// Integer entangling-power evaluation of permutation unitaries.
///
/// For a permutation p of the d^2 points with p(b, e) = (p1, p2), the purity
/// of |P> across 12|34 is d^-4 sum N(a, b, a', b')^2 with
///   N = #{e : p1(b, e) = a, p1(b', e) = a', p2(b, e) = p2(b', e)}.
/// purity_sum(p) = X(p) + X(p o swap) orders permutations by power
/// (smaller is stronger) without any rounding.
class PermutationEvaluator {
   public:
    explicit PermutationEvaluator(int d);

    int d() const noexcept {
        return d_;
    }

    /// sum N^2 for p (p o swap when `transposed`).
    std::int64_t coincidence_sum(std::span<const int> images, bool transposed = false);
    std::int64_t purity_sum(std::span<const int> images);

    /// Entangling power for a given purity_sum.
    double power_from_sum(std::int64_t sum) const;

   private:
    int d_;
    std::int64_t swap_sum_;
    std::vector<std::int64_t> counts_;
};

/// Entangling power of the permutation unitary of p on d^2 points.
double permutation_power(const Permutation &p, int d);

/// (i, j) -> (j, i).
Permutation swap_permutation(int d);

}  // namespace entpower

#endif
