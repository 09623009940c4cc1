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

#include "entpower/haar.hpp"

#include "gtest/gtest.h"

#include "entpower/error.hpp"
#include "entpower/power.hpp"
#include "entpower/stats.hpp"
#include "entpower/vectorize.hpp"
#include "test_util.hpp"

using namespace entpower;
using entpower::testing::cnot;

TEST(rng_stream, reproducible_and_distinct) {
    RngStream a(42, 3);
    RngStream b(42, 3);
    RngStream c(42, 4);
    for (int k = 0; k < 10; ++k) {
        const auto x = a.engine()();
        EXPECT_EQ(x, b.engine()());
        EXPECT_NE(x, c.engine()());
    }
    EXPECT_NE(substream_seed(1, 0), substream_seed(0, 1));
}

TEST(running_stats, merge_matches_single_pass) {
    RunningStats whole, left, right;
    for (int k = 0; k < 1000; ++k) {
        const double x = std::sin(k * 0.37) * 3.0 + k * 1e-3;
        whole.add(x);
        (k < 400 ? left : right).add(x);
    }
    left.merge(right);
    EXPECT_EQ(left.count, whole.count);
    EXPECT_NEAR(left.mean, whole.mean, 1e-13);
    EXPECT_NEAR(left.std_error(), whole.std_error(), 1e-13);
}

TEST(random_pure_state, normalized_and_deterministic) {
    for (int d = 2; d <= 5; ++d) {
        RngStream a(5, 0);
        RngStream b(5, 0);
        for (int k = 0; k < 50; ++k) {
            const StateVector s = random_pure_state(d, a);
            EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-12);
            EXPECT_EQ(s.amplitudes(), random_pure_state(d, b).amplitudes());
        }
    }
}

TEST(random_pure_state, first_moment) {
    for (int d : {2, 3}) {
        RngStream s(6, d);
        RunningStats st;
        for (int k = 0; k < 100000; ++k) st.add(std::norm(random_pure_state(d, s).amplitudes()[0]));
        EXPECT_LE(std::abs(st.mean - 1.0 / d), 5 * st.std_error());
    }
}

TEST(random_unitary, is_unitary) {
    RngStream s(7, 0);
    for (int n = 1; n <= 9; ++n) {
        EXPECT_LE(unitarity_deviation(random_unitary(n, s)), 1e-10);
    }
}

TEST(random_unitary, haar_moments) {
    for (int d : {2, 3}) {
        RngStream s(8, d);
        RunningStats sq, re, im, fourth;
        for (int k = 0; k < 100000; ++k) {
            const Complex u = random_unitary(d, s)(0, 0);
            sq.add(std::norm(u));
            re.add(u.real());
            im.add(u.imag());
            fourth.add(std::norm(u) * std::norm(u));
        }
        EXPECT_LE(std::abs(sq.mean - 1.0 / d), 5 * sq.std_error());
        EXPECT_LE(std::abs(re.mean), 5 * re.std_error());
        EXPECT_LE(std::abs(im.mean), 5 * im.std_error());
        // E|U_00|^4 = 2 / (d (d + 1)); fails without the phase correction.
        EXPECT_LE(std::abs(fourth.mean - 2.0 / (d * (d + 1.0))), 5 * fourth.std_error());
    }
}

TEST(random_unitary, phase_of_diagonal_is_uniform) {
    // Without the R-diagonal fix the diagonal phases of Q are biased.
    RngStream s(9, 0);
    RunningStats re;
    for (int k = 0; k < 50000; ++k) re.add(random_unitary(2, s)(1, 1).real());
    EXPECT_LE(std::abs(re.mean), 5 * re.std_error());
}

TEST(mc, identity_and_swap_are_exactly_zero) {
    for (int d : {2, 3}) {
        for (const Unitary &u : {Unitary::identity(d), swap_operator(d)}) {
            const McEstimate e = mc_entangling_power(u, 10000, 1);
            EXPECT_EQ(e.mean, 0.0);
            EXPECT_EQ(e.std_error, 0.0);
            const McEstimate g = mc_disentangling_power(u, 10000, 1);
            EXPECT_EQ(g.mean, 0.0);
            EXPECT_EQ(g.std_error, 0.0);
        }
    }
}

TEST(mc, cnot_million_samples) {
    const McEstimate e = mc_entangling_power(cnot(), 1000000, 2024);
    EXPECT_LE(std::abs(e.mean - 4.0 / 9.0), 5 * e.std_error);
    const McEstimate g = mc_disentangling_power(cnot(), 1000000, 2024);
    EXPECT_LE(std::abs(g.mean - 2.0 / 3.0), 5 * g.std_error);
    EXPECT_EQ(e.samples, 1000000);
    EXPECT_EQ(e.master_seed, 2024u);
}

TEST(mc, agrees_with_closed_form_on_random_unitaries) {
    RngStream s(10, 0);
    for (int k = 0; k < 6; ++k) {
        const int d = 2 + k % 2;
        const Unitary u = random_bipartite_unitary(d, s);
        const McEstimate e = mc_entangling_power(u, 50000, 100 + k);
        EXPECT_LE(std::abs(e.mean - entangling_power(u)), 5 * e.std_error);
        const McEstimate g = mc_disentangling_power(u, 50000, 200 + k);
        EXPECT_LE(std::abs(g.mean - disentangling_power(u)), 5 * g.std_error);
    }
}

TEST(mc, one_sided_twirl_gives_the_same_average) {
    RngStream s(11, 0);
    for (int d : {2, 3}) {
        const Unitary u = random_bipartite_unitary(d, s);
        const McEstimate g = mc_disentangling_power(u, 50000, 7, {}, TwirlSides::One);
        EXPECT_LE(std::abs(g.mean - disentangling_power(u)), 5 * g.std_error);
    }
}

TEST(mc, parallel_matches_serial_reference_bitwise) {
    RngStream s(12, 0);
    const Unitary u = random_bipartite_unitary(3, s);
    // Deliberately not a multiple of the chunk size.
    const std::int64_t n = 5 * kChunkSize + 17;
    const McEstimate ref_e = reference::mc_entangling_power(u, n, 99);
    const McEstimate ref_d = reference::mc_disentangling_power(u, n, 99);
    for (int threads : {1, 2, 4, 7}) {
        const McEstimate e = mc_entangling_power(u, n, 99, ExecPolicy{threads});
        EXPECT_EQ(e.mean, ref_e.mean);
        EXPECT_EQ(e.std_error, ref_e.std_error);
        const McEstimate g = mc_disentangling_power(u, n, 99, ExecPolicy{threads});
        EXPECT_EQ(g.mean, ref_d.mean);
        EXPECT_EQ(g.std_error, ref_d.std_error);
    }
}

TEST(mc, rejects_tiny_sample_counts) {
    try {
        mc_entangling_power(Unitary::identity(2), 99, 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
}
