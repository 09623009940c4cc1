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

#ifndef ENTPOWER_PERMUTATION_HPP
#define ENTPOWER_PERMUTATION_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace entpower {

/// A bijection on {0, ..., n-1}; images()[k] is the image of k.
///
/// Permutations of a d x d grid of points use the pair encoding k = i * d + j
/// (see pair_index), which is part of the file format.
class Permutation {
   public:
    Permutation() = default;

    /// Throws Error(NotBijective) if `images` is not a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const noexcept {
        return static_cast<int>(images_.size());
    }
    int operator()(int k) const {
        return images_[static_cast<std::size_t>(k)];
    }
    std::span<const int> images() const noexcept {
        return images_;
    }

    Permutation inverse() const;

    /// (p.compose(q))(k) = p(q(k)).
    Permutation compose(const Permutation &q) const;

    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &a, const Permutation &b) {
        return a.images_ <=> b.images_;
    }

   private:
    std::vector<int> images_;
};

bool is_bijection(std::span<const int> images);

}  // namespace entpower

#endif
