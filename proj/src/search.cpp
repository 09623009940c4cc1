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

#include "entpower/search.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "entpower/error.hpp"
#include "entpower/latin.hpp"
#include "entpower/linalg.hpp"
#include "entpower/rng.hpp"

namespace entpower {

namespace {

// Best purity sum seen so far and the lexicographically smallest
// permutations attaining it.
class TieSet {
   public:
    void offer(std::int64_t sum, std::span<const int> images) {
        if (empty_ || sum < best_) {
            empty_ = false;
            best_ = sum;
            hits_ = 0;
            reps_.clear();
        }
        if (sum != best_) return;
        ++hits_;
        insert(images);
    }

    void merge(const TieSet &other) {
        if (other.empty_) return;
        if (empty_ || other.best_ < best_) {
            *this = other;
            return;
        }
        if (other.best_ != best_) return;
        hits_ += other.hits_;
        for (const auto &r : other.reps_) insert(r);
    }

    SearchResult finish(const PermutationEvaluator &eval, std::int64_t evaluated, SearchMode mode,
                        std::uint64_t seed) const {
        SearchResult out;
        out.best_purity_sum = best_;
        out.best_value = eval.power_from_sum(best_);
        for (const auto &r : reps_) out.best_permutations.emplace_back(r);
        out.best_hits = hits_;
        out.evaluated = evaluated;
        out.mode = mode;
        out.seed = seed;
        return out;
    }

   private:
    void insert(std::span<const int> images) {
        auto it = std::lower_bound(reps_.begin(), reps_.end(), images,
                                   [](const std::vector<int> &a, std::span<const int> b) {
                                       return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                                   });
        if (it != reps_.end() && std::equal(it->begin(), it->end(), images.begin(), images.end())) return;
        if (reps_.size() >= kTieCap && it == reps_.end()) return;
        reps_.insert(it, std::vector<int>(images.begin(), images.end()));
        if (reps_.size() > kTieCap) reps_.pop_back();
    }

    bool empty_ = true;
    std::int64_t best_ = 0;
    std::int64_t hits_ = 0;
    std::vector<std::vector<int>> reps_;
};

void validate(const SearchOptions &o) {
    require_local_dim(o.d);
    if (o.mode == SearchMode::Exhaustive) {
        if (o.d > kMaxExhaustiveDim) {
            throw Error(ErrorKind::BudgetInfeasible, "exhaustive search needs d <= 3 ((d^2)! evaluations)");
        }
        return;
    }
    if (o.budget < 1 || o.budget > kMaxSearchBudget) {
        throw Error(ErrorKind::BudgetInfeasible, "budget must lie in [1, 1e8]");
    }
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// The permutation of {0..n-1} at lexicographic rank `rank`.
std::vector<int> unrank(std::int64_t rank, int n) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = n; k >= 1; --k) {
        const std::int64_t f = factorial(k - 1);
        const auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

void random_permutation(std::vector<int> &images, RngStream &stream) {
    std::iota(images.begin(), images.end(), 0);
    for (int k = static_cast<int>(images.size()) - 1; k > 0; --k) {
        std::swap(images[static_cast<std::size_t>(k)], images[static_cast<std::size_t>(stream.below(k + 1))]);
    }
}

TieSet exhaustive_block(int d, std::int64_t begin, std::int64_t end) {
    PermutationEvaluator eval(d);
    TieSet ties;
    auto images = unrank(begin, d * d);
    for (std::int64_t r = begin; r < end; ++r) {
        ties.offer(eval.purity_sum(images), images);
        std::next_permutation(images.begin(), images.end());
    }
    return ties;
}

TieSet random_chunk(int d, std::int64_t count, std::uint64_t seed, std::uint64_t chunk) {
    PermutationEvaluator eval(d);
    RngStream stream(seed, chunk);
    std::vector<int> images(static_cast<std::size_t>(d * d));
    TieSet ties;
    for (std::int64_t i = 0; i < count; ++i) {
        random_permutation(images, stream);
        ties.offer(eval.purity_sum(images), images);
    }
    return ties;
}

struct ClimbOutcome {
    TieSet ties;
    std::int64_t used = 0;
};

// One seeded restart: random start, then first-improvement over all
// transpositions in a freshly shuffled order, until a local optimum or `cap`
// evaluations.
ClimbOutcome climb(int d, std::uint64_t seed, std::uint64_t restart, std::int64_t cap) {
    PermutationEvaluator eval(d);
    RngStream stream(seed, restart);
    const int n = d * d;
    std::vector<int> images(static_cast<std::size_t>(n));
    random_permutation(images, stream);
    ClimbOutcome out;
    if (cap <= 0) return out;

    std::int64_t current = eval.purity_sum(images);
    out.ties.offer(current, images);
    out.used = 1;

    std::vector<std::pair<int, int>> moves;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) moves.emplace_back(i, j);
    }
    bool improved = true;
    while (improved && out.used < cap) {
        improved = false;
        for (std::size_t k = moves.size(); k-- > 1;) {
            std::swap(moves[k], moves[static_cast<std::size_t>(stream.below(static_cast<int>(k) + 1))]);
        }
        for (const auto &[i, j] : moves) {
            if (out.used >= cap) break;
            std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
            const std::int64_t sum = eval.purity_sum(images);
            ++out.used;
            out.ties.offer(sum, images);
            if (sum < current) {
                current = sum;
                improved = true;
                break;
            }
            std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(SearchMode mode) {
    switch (mode) {
        case SearchMode::Exhaustive:
            return "exhaustive";
        case SearchMode::Random:
            return "random";
        case SearchMode::HillClimb:
            return "hillclimb";
    }
    return "unknown";
}

std::optional<SearchMode> parse_search_mode(std::string_view name) {
    if (name == "exhaustive") return SearchMode::Exhaustive;
    if (name == "random") return SearchMode::Random;
    if (name == "hillclimb") return SearchMode::HillClimb;
    return std::nullopt;
}

SearchResult search(const SearchOptions &o, ExecPolicy policy) {
    validate(o);
    const int threads = resolve_threads(policy);
    const PermutationEvaluator eval(o.d);

    if (o.mode == SearchMode::Exhaustive) {
        const std::int64_t total = factorial(o.d * o.d);
        const std::int64_t blocks = chunk_count(total);
        std::vector<TieSet> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (std::int64_t b = 0; b < blocks; ++b) {
            partial[static_cast<std::size_t>(b)] =
                exhaustive_block(o.d, b * kChunkSize, std::min(total, (b + 1) * kChunkSize));
        }
        TieSet ties;
        for (const auto &p : partial) ties.merge(p);
        return ties.finish(eval, total, o.mode, o.seed);
    }

    if (o.mode == SearchMode::Random) {
        const std::int64_t chunks = chunk_count(o.budget);
        std::vector<TieSet> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (std::int64_t c = 0; c < chunks; ++c) {
            const std::int64_t count = std::min(o.budget, (c + 1) * kChunkSize) - c * kChunkSize;
            partial[static_cast<std::size_t>(c)] = random_chunk(o.d, count, o.seed, static_cast<std::uint64_t>(c));
        }
        TieSet ties;
        for (const auto &p : partial) ties.merge(p);
        return ties.finish(eval, o.budget, o.mode, o.seed);
    }

    // Hill climbing: restarts run in parallel batches, each capped at the
    // budget left when the batch started. Accepting them in restart order,
    // the first one that would overrun is rerun with the exact remainder;
    // a capped run is a prefix of the uncapped trajectory, so this matches
    // the sequential schedule.
    TieSet ties;
    std::int64_t remaining = o.budget;
    std::uint64_t next_restart = 0;
    while (remaining > 0) {
        std::vector<ClimbOutcome> batch(kRestartBatch);
        const std::int64_t cap = remaining;
        const std::uint64_t first = next_restart;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (int r = 0; r < kRestartBatch; ++r) {
            batch[static_cast<std::size_t>(r)] = climb(o.d, o.seed, first + static_cast<std::uint64_t>(r), cap);
        }
        for (int r = 0; r < kRestartBatch && remaining > 0; ++r) {
            ClimbOutcome &run = batch[static_cast<std::size_t>(r)];
            if (run.used > remaining) {
                run = climb(o.d, o.seed, first + static_cast<std::uint64_t>(r), remaining);
            }
            ties.merge(run.ties);
            remaining -= run.used;
            ++next_restart;
        }
    }
    return ties.finish(eval, o.budget, o.mode, o.seed);
}

namespace reference {

SearchResult search(const SearchOptions &o) {
    validate(o);
    PermutationEvaluator eval(o.d);
    TieSet ties;
    const int n = o.d * o.d;
    std::vector<int> images(static_cast<std::size_t>(n));

    switch (o.mode) {
        case SearchMode::Exhaustive: {
            std::iota(images.begin(), images.end(), 0);
            std::int64_t count = 0;
            do {
                ties.offer(eval.purity_sum(images), images);
                ++count;
            } while (std::next_permutation(images.begin(), images.end()));
            return ties.finish(eval, count, o.mode, o.seed);
        }
        case SearchMode::Random: {
            // Same substream layout as the parallel kernel.
            std::optional<RngStream> stream;
            for (std::int64_t i = 0; i < o.budget; ++i) {
                if (i % kChunkSize == 0) stream.emplace(o.seed, static_cast<std::uint64_t>(i / kChunkSize));
                random_permutation(images, *stream);
                ties.offer(eval.purity_sum(images), images);
            }
            return ties.finish(eval, o.budget, o.mode, o.seed);
        }
        case SearchMode::HillClimb: {
            std::int64_t remaining = o.budget;
            for (std::uint64_t r = 0; remaining > 0; ++r) {
                ClimbOutcome run = climb(o.d, o.seed, r, remaining);
                ties.merge(run.ties);
                remaining -= run.used;
            }
            return ties.finish(eval, o.budget, o.mode, o.seed);
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown search mode");
}

}  // namespace reference

}  // namespace entpower
