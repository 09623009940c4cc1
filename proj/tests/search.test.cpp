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
#include <set>

#include "gtest/gtest.h"

#include "entpower/error.hpp"
#include "entpower/latin.hpp"
#include "entpower/power.hpp"

using namespace entpower;

TEST(search, d2_exhaustive_matches_dense_enumeration) {
    // Dense oracle: every one of the 24 permutation unitaries.
    std::vector<int> v(4);
    std::iota(v.begin(), v.end(), 0);
    double best = -1.0;
    std::set<std::vector<int>> maximizers;
    do {
        const double e = entangling_power(Unitary::from_permutation(2, Permutation(v)));
        if (e > best + 1e-12) {
            best = e;
            maximizers.clear();
        }
        if (std::abs(e - best) <= 1e-12) maximizers.insert(v);
    } while (std::next_permutation(v.begin(), v.end()));
    EXPECT_NEAR(best, 4.0 / 9.0, 1e-12);

    const SearchResult r = search({2, SearchMode::Exhaustive, 0, 0});
    EXPECT_NEAR(r.best_value, 4.0 / 9.0, 1e-12);
    EXPECT_LT(r.best_value, 2.0 / 3.0);
    EXPECT_EQ(r.evaluated, 24);
    std::set<std::vector<int>> listed;
    for (const auto &p : r.best_permutations) listed.insert({p.images().begin(), p.images().end()});
    EXPECT_EQ(listed, maximizers);
    EXPECT_EQ(r.best_hits, static_cast<std::int64_t>(maximizers.size()));
    EXPECT_TRUE(listed.count({0, 1, 3, 2}));
}

TEST(search, d3_exhaustive_reaches_bound_with_ols_among_maximizers) {
    const SearchResult r = search({3, SearchMode::Exhaustive, 0, 0});
    EXPECT_NEAR(r.best_value, 0.75, 1e-12);
    EXPECT_EQ(r.evaluated, 362880);
    const Permutation ols = ols_permutation(mols_pair(3));
    PermutationEvaluator eval(3);
    EXPECT_EQ(eval.purity_sum(ols.images()), r.best_purity_sum);
    EXPECT_TRUE(std::find(r.best_permutations.begin(), r.best_permutations.end(), ols) != r.best_permutations.end());
    for (const auto &p : r.best_permutations) {
        EXPECT_NEAR(permutation_power(p, 3), r.best_value, 1e-12);
    }
    EXPECT_TRUE(std::is_sorted(r.best_permutations.begin(), r.best_permutations.end()));
    EXPECT_EQ(r, reference::search({3, SearchMode::Exhaustive, 0, 0}));
}

TEST(search, infeasible_requests) {
    auto kind_of = [](const SearchOptions &o) {
        try {
            search(o);
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::Diagnostics;
    };
    EXPECT_EQ(kind_of({4, SearchMode::Exhaustive, 0, 0}), ErrorKind::BudgetInfeasible);
    EXPECT_EQ(kind_of({3, SearchMode::Random, 0, 0}), ErrorKind::BudgetInfeasible);
    EXPECT_EQ(kind_of({3, SearchMode::HillClimb, kMaxSearchBudget + 1, 0}), ErrorKind::BudgetInfeasible);
}

TEST(search, sampled_modes_are_deterministic_across_threads) {
    for (SearchMode mode : {SearchMode::Random, SearchMode::HillClimb}) {
        for (int d : {3, 4}) {
            const SearchOptions o{d, mode, 20000, 77};
            const SearchResult ref = reference::search(o);
            EXPECT_EQ(ref.evaluated, 20000);
            for (int threads : {1, 2, 5}) {
                EXPECT_EQ(search(o, ExecPolicy{threads}), ref) << to_string(mode) << " d=" << d;
            }
            EXPECT_NE(search({d, mode, 20000, 78}).best_permutations, std::vector<Permutation>{});
        }
    }
}

TEST(search, hillclimb_d4_respects_bound_and_lists_consistent_values) {
    const SearchResult r = search({4, SearchMode::HillClimb, 200000, 3});
    EXPECT_LE(r.best_value, 0.8 + 1e-12);
    EXPECT_GT(r.best_value, 0.0);
    EXPECT_LE(r.best_permutations.size(), kTieCap);
    for (const auto &p : r.best_permutations) EXPECT_NEAR(permutation_power(p, 4), r.best_value, 1e-12);
}

TEST(search, tie_cap_keeps_smallest) {
    // d = 2 random search revisits the 24 permutations many times.
    const SearchResult r = search({2, SearchMode::Random, 5000, 1});
    EXPECT_NEAR(r.best_value, 4.0 / 9.0, 1e-12);
    EXPECT_GT(r.best_hits, static_cast<std::int64_t>(r.best_permutations.size()));
    EXPECT_TRUE(std::is_sorted(r.best_permutations.begin(), r.best_permutations.end()));
    EXPECT_TRUE(std::adjacent_find(r.best_permutations.begin(), r.best_permutations.end()) ==
                r.best_permutations.end());
}

TEST(search, mode_names) {
    for (SearchMode m : {SearchMode::Exhaustive, SearchMode::Random, SearchMode::HillClimb}) {
        EXPECT_EQ(parse_search_mode(to_string(m)), m);
    }
    EXPECT_FALSE(parse_search_mode("anneal").has_value());
}
