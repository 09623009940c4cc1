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

#ifndef ENTPOWER_SEARCH_HPP
#define ENTPOWER_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "entpower/parallel.hpp"
#include "entpower/permutation.hpp"

namespace entpower {

enum class SearchMode { Exhaustive, Random, HillClimb };

std::string_view to_string(SearchMode mode);
/// Accepts "exhaustive", "random", "hillclimb".
std::optional<SearchMode> parse_search_mode(std::string_view name);

inline constexpr int kMaxExhaustiveDim = 3;
inline constexpr std::int64_t kMaxSearchBudget = 100'000'000;
inline constexpr std::size_t kTieCap = 128;
/// Hill-climb restarts are launched in fixed-size batches so that budget
/// accounting is independent of the worker count.
inline constexpr int kRestartBatch = 16;

struct SearchOptions {
    int d = 2;
    SearchMode mode = SearchMode::Exhaustive;
    /// Permutation evaluations; ignored by exhaustive mode.
    std::int64_t budget = 0;
    std::uint64_t seed = 0;
};

struct SearchResult {
    double best_value = 0.0;
    /// Integer purity sum of the maximizers (smaller is stronger).
    std::int64_t best_purity_sum = 0;
    /// Lexicographically smallest maximizers, at most kTieCap.
    std::vector<Permutation> best_permutations;
    /// Evaluations that hit the best value (with multiplicity for sampled modes).
    std::int64_t best_hits = 0;
    std::int64_t evaluated = 0;
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t seed = 0;

    friend bool operator==(const SearchResult &, const SearchResult &) = default;
};

/// Throws Error(BudgetInfeasible) for exhaustive mode at d > 3 or a sampled
/// budget outside [1, 1e8].
SearchResult search(const SearchOptions &options, ExecPolicy policy = {});

namespace reference {
SearchResult search(const SearchOptions &options);
}  // namespace reference

}  // namespace entpower

#endif
