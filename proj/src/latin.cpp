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

#include "entpower/latin.hpp"

#include <string>

#include "entpower/error.hpp"
#include "entpower/linalg.hpp"

namespace entpower {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int k = 2; k * k <= n; ++k) {
        if (n % k == 0) return false;
    }
    return true;
}

struct Extension {
    int order;
    int characteristic;
    int degree;
    // Monic modulus x^degree = -(sum low[k] x^k), coefficients of the
    // reduction x^degree -> low.
    std::vector<int> reduction;
};

// x^2 + x + 1 over GF(2), x^3 + x + 1 over GF(2), x^2 + 1 over GF(3).
const Extension kExtensions[] = {
    {4, 2, 2, {1, 1}},
    {8, 2, 3, {1, 1, 0}},
    {9, 3, 2, {2, 0}},
};

const Extension *find_extension(int order) {
    for (const auto &e : kExtensions) {
        if (e.order == order) return &e;
    }
    return nullptr;
}

std::vector<int> to_digits(int x, int p, int k) {
    std::vector<int> out(static_cast<std::size_t>(k));
    for (auto &c : out) {
        c = x % p;
        x /= p;
    }
    return out;
}

int from_digits(const std::vector<int> &digits, int p) {
    int x = 0;
    for (std::size_t i = digits.size(); i-- > 0;) x = x * p + digits[i];
    return x;
}

int poly_mul(int x, int y, const Extension &ext) {
    const int p = ext.characteristic;
    const int k = ext.degree;
    const auto a = to_digits(x, p, k);
    const auto b = to_digits(y, p, k);
    std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            prod[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
    // Reduce from the top: x^m = x^(m-k) * x^k.
    for (int m = 2 * k - 2; m >= k; --m) {
        const int c = prod[static_cast<std::size_t>(m)] % p;
        prod[static_cast<std::size_t>(m)] = 0;
        for (int t = 0; t < k; ++t) {
            prod[static_cast<std::size_t>(m - k + t)] += c * ext.reduction[static_cast<std::size_t>(t)];
        }
    }
    std::vector<int> out(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) out[static_cast<std::size_t>(t)] = prod[static_cast<std::size_t>(t)] % p;
    return from_digits(out, p);
}

int poly_add(int x, int y, const Extension &ext) {
    auto a = to_digits(x, ext.characteristic, ext.degree);
    const auto b = to_digits(y, ext.characteristic, ext.degree);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % ext.characteristic;
    return from_digits(a, ext.characteristic);
}

}  // namespace

bool FiniteField::supported(int order) {
    return (is_prime(order) && order <= kMaxLocalDim) || find_extension(order) != nullptr;
}

FiniteField::FiniteField(int order) : q_(order) {
    if (!supported(order)) {
        throw Error(ErrorKind::NoConstruction, "no finite field table for order " + std::to_string(order));
    }
    add_.resize(static_cast<std::size_t>(q_ * q_));
    mul_.resize(static_cast<std::size_t>(q_ * q_));
    const Extension *ext = find_extension(order);
    for (int x = 0; x < q_; ++x) {
        for (int y = 0; y < q_; ++y) {
            const auto k = static_cast<std::size_t>(x * q_ + y);
            add_[k] = ext ? poly_add(x, y, *ext) : (x + y) % q_;
            mul_[k] = ext ? poly_mul(x, y, *ext) : (x * y) % q_;
        }
    }
}

bool is_latin(const std::vector<std::vector<int>> &cells) {
    const std::size_t n = cells.size();
    if (n == 0) return false;
    for (const auto &row : cells) {
        if (row.size() != n) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> row_seen(n, 0);
        std::vector<char> col_seen(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            const int r = cells[i][j];
            const int c = cells[j][i];
            if (r < 0 || c < 0 || static_cast<std::size_t>(r) >= n || static_cast<std::size_t>(c) >= n) return false;
            if (row_seen[static_cast<std::size_t>(r)]++ || col_seen[static_cast<std::size_t>(c)]++) return false;
        }
    }
    return true;
}

LatinSquare::LatinSquare(std::vector<std::vector<int>> cells) : cells_(std::move(cells)) {
    if (!is_latin(cells_)) {
        throw Error(ErrorKind::InvalidArgument, "cells do not form a Latin square");
    }
}

bool are_orthogonal(const LatinSquare &first, const LatinSquare &second) {
    const int d = first.order();
    if (second.order() != d) return false;
    std::vector<char> seen(static_cast<std::size_t>(d * d), 0);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const auto k = static_cast<std::size_t>(pair_index(first(i, j), second(i, j), d));
            if (seen[k]++) return false;
        }
    }
    return true;
}

LatinSquare cyclic_latin_square(int d, int a) {
    if (d < kMinLocalDim || d > kMaxLocalDim || !FiniteField::supported(d)) {
        throw Error(ErrorKind::NoConstruction,
                    "no Latin square construction for order " + std::to_string(d) +
                        " (supported: primes and the field orders 4, 8, 9)");
    }
    if (a <= 0 || a >= d) {
        throw Error(ErrorKind::InvalidArgument, "multiplier must be a nonzero field element");
    }
    const FiniteField field(d);
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = field.add(field.mul(a, i), j);
        }
    }
    return LatinSquare(std::move(cells));
}

MolsPair mols_pair(int d) {
    if (d == 2 || d == 6) {
        throw Error(ErrorKind::NoMolsPair,
                    "no pair of orthogonal Latin squares of order " + std::to_string(d) + " exists");
    }
    MolsPair pair{cyclic_latin_square(d, 1), cyclic_latin_square(d, 2)};
    if (!are_orthogonal(pair.first, pair.second)) {
        throw Error(ErrorKind::Diagnostics, "constructed squares are not orthogonal");
    }
    return pair;
}

Permutation ols_permutation(const MolsPair &pair) {
    const int d = pair.first.order();
    std::vector<int> images(static_cast<std::size_t>(d * d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            images[static_cast<std::size_t>(pair_index(i, j, d))] = pair_index(pair.first(i, j), pair.second(i, j), d);
        }
    }
    return Permutation(std::move(images));
}

Permutation swap_permutation(int d) {
    std::vector<int> images(static_cast<std::size_t>(d * d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            images[static_cast<std::size_t>(pair_index(i, j, d))] = pair_index(j, i, d);
        }
    }
    return Permutation(std::move(images));
}

PermutationEvaluator::PermutationEvaluator(int d)
    : d_(d), swap_sum_(0), counts_(static_cast<std::size_t>(d * d), 0) {
    require_local_dim(d);
    const Permutation s = swap_permutation(d);
    swap_sum_ = coincidence_sum(s.images());
}

std::int64_t PermutationEvaluator::coincidence_sum(std::span<const int> images, bool transposed) {
    const int d = d_;
    if (images.size() != static_cast<std::size_t>(d * d)) {
        throw Error(ErrorKind::ShapeMismatch, "permutation must act on d^2 points");
    }
    auto image = [&](int b, int e) {
        return transposed ? images[static_cast<std::size_t>(pair_index(e, b, d))]
                          : images[static_cast<std::size_t>(pair_index(b, e, d))];
    };
    std::int64_t total = 0;
    for (int b = 0; b < d; ++b) {
        for (int b2 = 0; b2 < d; ++b2) {
            std::fill(counts_.begin(), counts_.end(), 0);
            for (int e = 0; e < d; ++e) {
                const int x = image(b, e);
                const int y = image(b2, e);
                if (x % d == y % d) {
                    ++counts_[static_cast<std::size_t>((x / d) * d + y / d)];
                }
            }
            for (std::int64_t c : counts_) total += c * c;
        }
    }
    return total;
}

std::int64_t PermutationEvaluator::purity_sum(std::span<const int> images) {
    return coincidence_sum(images, false) + coincidence_sum(images, true);
}

double PermutationEvaluator::power_from_sum(std::int64_t sum) const {
    // epsilon = d/(d+1) * d^2/(d^2-1) * (1 - (sum - swap_sum) / d^4).
    const std::int64_t d = d_;
    const std::int64_t d4 = d * d * d * d;
    const double numerator = static_cast<double>(d * d * d) * static_cast<double>(d4 - sum + swap_sum_);
    const double denominator = static_cast<double>((d + 1) * (d * d - 1) * d4);
    const double eps = numerator / denominator;
    return eps < 0.0 ? 0.0 : eps;
}

double permutation_power(const Permutation &p, int d) {
    PermutationEvaluator eval(d);
    return eval.power_from_sum(eval.purity_sum(p.images()));
}

}  // namespace entpower
