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

#ifndef ENTPOWER_PARALLEL_HPP
#define ENTPOWER_PARALLEL_HPP

#include <cstdint>

namespace entpower {

/// Samples are drawn in chunks of this size; chunk c uses substream c of the
/// master seed and chunk results are reduced in chunk order. Changing it
/// changes every seeded result.
inline constexpr std::int64_t kChunkSize = 1024;

/// Worker count for the OpenMP kernels. 0 means the OpenMP default. Results
/// never depend on it.
struct ExecPolicy {
    int threads = 0;
};

int resolve_threads(ExecPolicy policy);

inline std::int64_t chunk_count(std::int64_t n) {
    return (n + kChunkSize - 1) / kChunkSize;
}

}  // namespace entpower

#endif
