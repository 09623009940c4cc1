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

#include "entpower/permutation.hpp"

#include <numeric>
#include <string>

#include "entpower/error.hpp"

namespace entpower {

bool is_bijection(std::span<const int> images) {
    const auto n = images.size();
    std::vector<char> seen(n, 0);
    for (int v : images) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) {
            return false;
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (!is_bijection(images_)) {
        throw Error(ErrorKind::NotBijective, "images of a permutation on " + std::to_string(images_.size()) +
                                                 " points are not a bijection");
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) {
        inv[static_cast<std::size_t>(images_[k])] = static_cast<int>(k);
    }
    Permutation result;
    result.images_ = std::move(inv);
    return result;
}

Permutation Permutation::compose(const Permutation &q) const {
    if (q.size() != size()) {
        throw Error(ErrorKind::ShapeMismatch, "composing permutations of different sizes");
    }
    std::vector<int> out(images_.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = images_[static_cast<std::size_t>(q.images_[k])];
    }
    Permutation result;
    result.images_ = std::move(out);
    return result;
}

}  // namespace entpower
