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

#ifndef ENTPOWER_RNG_HPP
#define ENTPOWER_RNG_HPP

#include <cstdint>
#include <random>

namespace entpower {

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of substream `index` under `master`:
///   splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019)).
constexpr std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// A reproducible random substream identified by (master_seed, stream_index).
class RngStream {
   public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
        : master_seed_(master_seed), stream_index_(stream_index), engine_(substream_seed(master_seed, stream_index)) {
    }

    std::uint64_t master_seed() const noexcept {
        return master_seed_;
    }
    std::uint64_t stream_index() const noexcept {
        return stream_index_;
    }
    std::mt19937_64 &engine() noexcept {
        return engine_;
    }

    double normal() {
        return normal_(engine_);
    }
    /// Uniform integer in [0, n).
    int below(int n) {
        return std::uniform_int_distribution<int>(0, n - 1)(engine_);
    }

   private:
    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

}  // namespace entpower

#endif
