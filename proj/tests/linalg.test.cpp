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

#include "entpower/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "gtest/gtest.h"

#include "entpower/error.hpp"
#include "entpower/haar.hpp"

using namespace entpower;

namespace {

ComplexMatrix integer_matrix(Eigen::Index rows, Eigen::Index cols, int salt) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index k = 0; k < m.size(); ++k) {
        m.data()[k] = Complex(double((k * 7 + salt) % 5) - 2.0, double((k + salt) % 3) - 1.0);
    }
    return m;
}

Permutation random_permutation(int n, RngStream &s) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), s.engine());
    return Permutation(v);
}

}  // namespace

TEST(party_indexer, round_trip_and_order) {
    PartyIndexer ix({2, 3, 4});
    EXPECT_EQ(ix.total(), 24u);
    const int digits[3] = {1, 2, 3};
    EXPECT_EQ(ix.flat(digits), std::size_t((1 * 3 + 2) * 4 + 3));
    for (std::size_t k = 0; k < ix.total(); ++k) {
        EXPECT_EQ(ix.flat(ix.digits(k)), k);
    }
}

TEST(kron, identities) {
    const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    EXPECT_EQ(kron(i2, i2), ComplexMatrix(ComplexMatrix::Identity(4, 4)));

    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 2) = expected(1, 3) = expected(2, 0) = expected(3, 1) = 1.0;
    EXPECT_EQ(kron(x, i2), expected);
}

TEST(kron, shape_and_entries) {
    const ComplexMatrix a = integer_matrix(2, 3, 1);
    const ComplexMatrix b = integer_matrix(3, 2, 2);
    const ComplexMatrix k = kron(a, b);
    ASSERT_EQ(k.rows(), 6);
    ASSERT_EQ(k.cols(), 6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 2; ++c) EXPECT_EQ(k(i * 3 + r, j * 2 + c), a(i, j) * b(r, c));
}

TEST(kron, associative_on_integers) {
    const ComplexMatrix a = integer_matrix(2, 2, 0);
    const ComplexMatrix b = integer_matrix(3, 2, 1);
    const ComplexMatrix c = integer_matrix(2, 3, 2);
    EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
}

TEST(kron, size_limit) {
    const ComplexMatrix big = ComplexMatrix::Identity(40, 40);
    try {
        kron(big, big);
        FAIL() << "expected SizeLimit";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
    }
}

TEST(partial_trace, maximally_entangled_and_product) {
    ComplexVector phi = ComplexVector::Zero(4);
    phi[0] = phi[3] = M_SQRT1_2;
    const ComplexMatrix rho = phi * phi.adjoint();
    const int dims[2] = {2, 2};
    const int keep0[1] = {0};
    const ComplexMatrix r = partial_trace(rho, dims, keep0);
    EXPECT_LT(max_abs(ComplexMatrix(r - ComplexMatrix::Identity(2, 2) / 2.0)), 1e-15);

    ComplexVector prod = ComplexVector::Zero(4);
    prod[pair_index(0, 1, 2)] = 1.0;
    const int keep1[1] = {1};
    const ComplexMatrix r1 = partial_trace(prod * prod.adjoint(), dims, keep1);
    ComplexMatrix one = ComplexMatrix::Zero(2, 2);
    one(1, 1) = 1.0;
    EXPECT_EQ(r1, one);
}

TEST(partial_trace, preserves_trace_of_random_hermitian) {
    RngStream s(7, 0);
    const int dims[3] = {2, 3, 2};
    for (int k = 0; k < 100; ++k) {
        const ComplexMatrix g = random_unitary(12, s) * Complex(1.0 + k % 3, 0.5);
        const ComplexMatrix h = g + g.adjoint();
        const int keep[2] = {0, 2};
        EXPECT_NEAR(std::abs(partial_trace(h, dims, keep).trace() - h.trace()), 0.0, 1e-12);
    }
}

TEST(partial_trace, over_everything_is_trace) {
    RngStream s(8, 0);
    const ComplexMatrix g = random_unitary(6, s);
    const ComplexMatrix rho = g * g.adjoint();
    const int dims[2] = {2, 3};
    const ComplexMatrix t = partial_trace(rho, dims, {});
    ASSERT_EQ(t.rows(), 1);
    EXPECT_NEAR(std::abs(t(0, 0) - rho.trace()), 0.0, 1e-13);
}

TEST(partial_trace, keeps_induced_order) {
    // |0>|1>|2> on dims (2, 2, 3); keeping parties {0, 2} leaves |0>|2>.
    const int dims[3] = {2, 2, 3};
    PartyIndexer ix({2, 2, 3});
    const int digits[3] = {0, 1, 2};
    ComplexVector v = ComplexVector::Zero(12);
    v[static_cast<Eigen::Index>(ix.flat(digits))] = 1.0;
    const int keep[2] = {0, 2};
    const ComplexMatrix r = partial_trace(v * v.adjoint(), dims, keep);
    EXPECT_EQ(r(2, 2), Complex(1.0));
}

TEST(partial_trace, shape_mismatch) {
    const int dims[2] = {2, 2};
    const int keep[1] = {0};
    try {
        partial_trace(ComplexMatrix::Identity(5, 5), dims, keep);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
    }
}

TEST(permutation_matrix, identity_transposition_inverse) {
    EXPECT_EQ(permutation_matrix(Permutation::identity(4)), ComplexMatrix(ComplexMatrix::Identity(4, 4)));
    const ComplexMatrix t = permutation_matrix(Permutation({0, 2, 1, 3}));
    EXPECT_EQ(t * t, ComplexMatrix(ComplexMatrix::Identity(4, 4)));

    RngStream s(9, 0);
    for (int k = 0; k < 20; ++k) {
        const Permutation p = random_permutation(9, s);
        EXPECT_EQ(permutation_matrix(p) * permutation_matrix(p.inverse()), ComplexMatrix(ComplexMatrix::Identity(9, 9)));
        EXPECT_LT(unitarity_deviation(permutation_matrix(p)), 1e-15);
    }
}

TEST(permutation_matrix, composition_is_product) {
    RngStream s(10, 0);
    for (int k = 0; k < 50; ++k) {
        const Permutation p = random_permutation(9, s);
        const Permutation q = random_permutation(9, s);
        EXPECT_EQ(permutation_matrix(p.compose(q)), permutation_matrix(p) * permutation_matrix(q));
    }
}

TEST(permutation, rejects_non_bijection) {
    try {
        Permutation({0, 0, 1});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotBijective);
    }
    EXPECT_THROW(Permutation({0, 3}), Error);
}

TEST(unitary, validation) {
    ComplexMatrix m = ComplexMatrix::Identity(4, 4);
    m(0, 0) = 1.0 + 1e-9;
    try {
        Unitary(2, m);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotUnitary);
    }
    m(0, 0) = 1.0 + 1e-12;
    EXPECT_NO_THROW(Unitary(2, m));

    m(0, 0) = std::numeric_limits<double>::quiet_NaN();
    try {
        Unitary(2, m);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotFinite);
    }
    EXPECT_THROW(Unitary(3, ComplexMatrix::Identity(4, 4)), Error);
    try {
        Unitary::identity(17);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
    }
}

TEST(state_vector, normalization) {
    ComplexVector v = ComplexVector::Zero(4);
    v[0] = 1.0;
    EXPECT_NO_THROW(StateVector({2, 2}, v));
    v[1] = 0.1;
    EXPECT_THROW(StateVector({2, 2}, v), Error);
    EXPECT_THROW(StateVector({2, 3}, ComplexVector::Zero(4)), Error);
}
