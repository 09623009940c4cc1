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

#ifndef ENTPOWER_STATS_HPP
#define ENTPOWER_STATS_HPP

#include <cmath>
#include <cstdint>

namespace entpower {

/// Welford running mean / second moment with Chan's pairwise merge.
struct RunningStats {
    std::int64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    void merge(const RunningStats &other) {
        if (other.count == 0) {
            return;
        }
        if (count == 0) {
            *this = other;
            return;
        }
        const double na = static_cast<double>(count);
        const double nb = static_cast<double>(other.count);
        const double n = na + nb;
        const double delta = other.mean - mean;
        mean += delta * (nb / n);
        m2 += other.m2 + delta * delta * (na * nb / n);
        count += other.count;
    }

    /// Sample standard deviation over sqrt(count).
    double std_error() const {
        if (count < 2) {
            return 0.0;
        }
        const double var = m2 / static_cast<double>(count - 1);
        return std::sqrt(var > 0.0 ? var : 0.0) / std::sqrt(static_cast<double>(count));
    }
};

}  // namespace entpower

#endif
