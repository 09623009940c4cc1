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

#include <cmath>
#include <string>
#include <vector>

#include "entpower/error.hpp"
#include "entpower/stats.hpp"
#include "entpower/vectorize.hpp"

namespace entpower {

namespace {

Complex complex_gaussian(RngStream &stream) {
    const double re = stream.normal();
    const double im = stream.normal();
    return Complex(re, im) * M_SQRT1_2;
}

void require_samples(std::int64_t n) {
    if (n < kMinMcSamples) {
        throw Error(ErrorKind::InvalidArgument, "need at least " + std::to_string(kMinMcSamples) + " samples");
    }
}

// S_L across A|B of a bipartite d x d pure state with amplitudes psi[i*d + j].
double bipartite_entropy(const ComplexVector &psi, int d) {
    Eigen::Map<const ComplexMatrix> m(psi.data(), d, d);
    const double purity = (m * m.adjoint()).squaredNorm();
    return normalized_linear_entropy(purity, d);
}

template <typename Sample>
McEstimate run_chunks(std::int64_t n, std::uint64_t seed, ExecPolicy policy, Sample sample) {
    require_samples(n);
    const std::int64_t chunks = chunk_count(n);
    std::vector<RunningStats> partial(static_cast<std::size_t>(chunks));
    const int threads = resolve_threads(policy);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t c = 0; c < chunks; ++c) {
        RngStream stream(seed, static_cast<std::uint64_t>(c));
        const std::int64_t begin = c * kChunkSize;
        const std::int64_t end = std::min(n, begin + kChunkSize);
        RunningStats acc;
        for (std::int64_t i = begin; i < end; ++i) {
            acc.add(sample(stream));
        }
        partial[static_cast<std::size_t>(c)] = acc;
    }
    RunningStats total;
    for (const auto &p : partial) {
        total.merge(p);
    }
    return McEstimate{total.mean, total.std_error(), n, seed};
}

}  // namespace

StateVector random_pure_state(int d, RngStream &stream) {
    if (d < kMinLocalDim) {
        throw Error(ErrorKind::SizeLimit, "dimension must be >= 2");
    }
    ComplexVector v(d);
    for (int i = 0; i < d; ++i) {
        v[i] = complex_gaussian(stream);
    }
    v /= v.norm();
    return StateVector({d}, std::move(v));
}

ComplexMatrix random_unitary(int n, RngStream &stream) {
    if (n < 1) {
        throw Error(ErrorKind::SizeLimit, "dimension must be positive");
    }
    Eigen::MatrixXcd z(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            z(i, j) = complex_gaussian(stream);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const auto &r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        if (mag > 0.0) {
            q.col(j) *= rjj / mag;
        }
    }
    return q;
}

Unitary random_bipartite_unitary(int d, RngStream &stream) {
    require_local_dim(d);
    return Unitary(d, random_unitary(d * d, stream));
}

double entangling_sample(const Unitary &u, RngStream &stream) {
    const int d = u.d();
    const StateVector a = random_pure_state(d, stream);
    const StateVector b = random_pure_state(d, stream);
    ComplexVector product(d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            product[pair_index(i, j, d)] = a.amplitudes()[i] * b.amplitudes()[j];
        }
    }
    const ComplexVector out = u.matrix() * product;
    return bipartite_entropy(out, d);
}

double disentangling_sample(const Unitary &u, RngStream &stream, TwirlSides sides) {
    const int d = u.d();
    const ComplexMatrix v = sides == TwirlSides::Both ? random_unitary(d, stream) : ComplexMatrix::Identity(d, d);
    const ComplexMatrix w = random_unitary(d, stream);
    // (V (x) W)|psi+> has coefficient matrix V W^T / sqrt(d).
    const ComplexMatrix coeff = v * w.transpose() / std::sqrt(static_cast<double>(d));
    ComplexVector chi(d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            chi[pair_index(i, j, d)] = coeff(i, j);
        }
    }
    const ComplexVector out = u.matrix() * chi;
    return 1.0 - bipartite_entropy(out, d);
}

McEstimate mc_entangling_power(const Unitary &u, std::int64_t n, std::uint64_t seed, ExecPolicy policy) {
    return run_chunks(n, seed, policy, [&u](RngStream &s) { return entangling_sample(u, s); });
}

McEstimate mc_disentangling_power(const Unitary &u, std::int64_t n, std::uint64_t seed, ExecPolicy policy,
                                  TwirlSides sides) {
    return run_chunks(n, seed, policy, [&u, sides](RngStream &s) { return disentangling_sample(u, s, sides); });
}

namespace reference {

namespace {

template <typename Sample>
McEstimate serial(std::int64_t n, std::uint64_t seed, Sample sample) {
    require_samples(n);
    RunningStats total;
    RunningStats chunk;
    std::uint64_t stream_index = 0;
    RngStream stream(seed, stream_index);
    for (std::int64_t i = 0; i < n; ++i) {
        if (i > 0 && i % kChunkSize == 0) {
            total.merge(chunk);
            chunk = RunningStats{};
            stream = RngStream(seed, ++stream_index);
        }
        chunk.add(sample(stream));
    }
    total.merge(chunk);
    return McEstimate{total.mean, total.std_error(), n, seed};
}

}  // namespace

McEstimate mc_entangling_power(const Unitary &u, std::int64_t n, std::uint64_t seed) {
    return serial(n, seed, [&u](RngStream &s) { return entangling_sample(u, s); });
}

McEstimate mc_disentangling_power(const Unitary &u, std::int64_t n, std::uint64_t seed, TwirlSides sides) {
    return serial(n, seed, [&u, sides](RngStream &s) { return disentangling_sample(u, s, sides); });
}

}  // namespace reference

}  // namespace entpower
