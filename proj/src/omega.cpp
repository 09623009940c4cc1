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

#include "entpower/omega.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "entpower/error.hpp"
#include "entpower/haar.hpp"
#include "entpower/rng.hpp"
#include "entpower/vectorize.hpp"

namespace entpower {

namespace {

struct FourPartyOperators {
    ComplexMatrix identity;
    ComplexMatrix s13;
    ComplexMatrix s24;
};

FourPartyOperators four_party_operators(int d) {
    require_local_dim(d, kMaxFourPartyDim);
    const int dims[4] = {d, d, d, d};
    const int n = d * d * d * d;
    return FourPartyOperators{
        ComplexMatrix::Identity(n, n),
        permutation_matrix(party_swap_permutation(dims, 0, 2)),
        permutation_matrix(party_swap_permutation(dims, 1, 3)),
    };
}

// Per-entry Welford accumulators for the real and imaginary parts.
struct EntryStats {
    Eigen::MatrixXd re_mean, re_m2, im_mean, im_m2;
    std::int64_t count = 0;

    explicit EntryStats(Eigen::Index n)
        : re_mean(Eigen::MatrixXd::Zero(n, n)),
          re_m2(Eigen::MatrixXd::Zero(n, n)),
          im_mean(Eigen::MatrixXd::Zero(n, n)),
          im_m2(Eigen::MatrixXd::Zero(n, n)) {
    }

    void add(const ComplexMatrix &x) {
        ++count;
        const double k = static_cast<double>(count);
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
            for (Eigen::Index j = 0; j < x.cols(); ++j) {
                const double re = x(i, j).real();
                const double im = x(i, j).imag();
                const double dr = re - re_mean(i, j);
                re_mean(i, j) += dr / k;
                re_m2(i, j) += dr * (re - re_mean(i, j));
                const double di = im - im_mean(i, j);
                im_mean(i, j) += di / k;
                im_m2(i, j) += di * (im - im_mean(i, j));
            }
        }
    }

    void merge(const EntryStats &o) {
        if (o.count == 0) return;
        if (count == 0) {
            *this = o;
            return;
        }
        const double na = static_cast<double>(count);
        const double nb = static_cast<double>(o.count);
        const double n = na + nb;
        const Eigen::MatrixXd dr = o.re_mean - re_mean;
        const Eigen::MatrixXd di = o.im_mean - im_mean;
        re_mean += dr * (nb / n);
        im_mean += di * (nb / n);
        re_m2 += o.re_m2 + dr.cwiseProduct(dr) * (na * nb / n);
        im_m2 += o.im_m2 + di.cwiseProduct(di) * (na * nb / n);
        count += o.count;
    }

    OmegaEstimate finish(std::uint64_t seed) const {
        OmegaEstimate est;
        const Eigen::Index n = re_mean.rows();
        est.mean = ComplexMatrix(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                est.mean(i, j) = Complex(re_mean(i, j), im_mean(i, j));
            }
        }
        const double c = static_cast<double>(count);
        const double scale = count > 1 ? 1.0 / ((c - 1.0) * c) : 0.0;
        est.re_std_error = (re_m2.cwiseMax(0.0) * scale).cwiseSqrt();
        est.im_std_error = (im_m2.cwiseMax(0.0) * scale).cwiseSqrt();
        est.samples = count;
        est.master_seed = seed;
        return est;
    }
};

// One twirled sample: xi xi^dagger with xi = chi (x) chi and
// chi = (V (x) W)|psi+> on one copy.
ComplexMatrix omega_sample(int d, RngStream &stream) {
    const ComplexMatrix v = random_unitary(d, stream);
    const ComplexMatrix w = random_unitary(d, stream);
    const ComplexMatrix coeff = v * w.transpose() / std::sqrt(static_cast<double>(d));
    ComplexVector chi(d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            chi[pair_index(i, j, d)] = coeff(i, j);
        }
    }
    const int n2 = d * d;
    ComplexVector xi(n2 * n2);
    for (int p = 0; p < n2; ++p) {
        for (int q = 0; q < n2; ++q) {
            xi[p * n2 + q] = chi[p] * chi[q];
        }
    }
    return xi * xi.adjoint();
}

void require_omega_args(int d, std::int64_t n) {
    require_local_dim(d, kMaxMcOmegaDim);
    if (n < kMinOmegaSamples) {
        throw Error(ErrorKind::InvalidArgument, "need at least " + std::to_string(kMinOmegaSamples) + " samples");
    }
}

}  // namespace

ComplexMatrix omega_closed_form(int d) {
    const auto ops = four_party_operators(d);
    const double d2 = static_cast<double>(d) * d;
    const double a = 1.0 / (d2 * (d2 - 1.0));
    const double b = 1.0 / (d2 * d * (d2 - 1.0));
    return a * (ops.identity + ops.s13 * ops.s24) - b * (ops.s13 + ops.s24);
}

ComplexMatrix omega_projector_form(int d) {
    const auto ops = four_party_operators(d);
    const ComplexMatrix p13_plus = (ops.identity + ops.s13) / 2.0;
    const ComplexMatrix p13_minus = (ops.identity - ops.s13) / 2.0;
    const ComplexMatrix p24_plus = (ops.identity + ops.s24) / 2.0;
    const ComplexMatrix p24_minus = (ops.identity - ops.s24) / 2.0;
    const double dd = d;
    const double pre = 2.0 / (dd * dd * dd * (dd * dd - 1.0));
    return pre * ((dd - 1.0) * (p13_plus * p24_plus) + (dd + 1.0) * (p13_minus * p24_minus));
}

OmegaEstimate mc_omega(int d, std::int64_t n, std::uint64_t seed, ExecPolicy policy) {
    require_omega_args(d, n);
    const Eigen::Index side = static_cast<Eigen::Index>(d) * d * d * d;
    const std::int64_t chunks = chunk_count(n);
    std::vector<EntryStats> partial(static_cast<std::size_t>(chunks), EntryStats(0));
    const int threads = resolve_threads(policy);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t c = 0; c < chunks; ++c) {
        RngStream stream(seed, static_cast<std::uint64_t>(c));
        EntryStats acc(side);
        const std::int64_t end = std::min(n, (c + 1) * kChunkSize);
        for (std::int64_t i = c * kChunkSize; i < end; ++i) {
            acc.add(omega_sample(d, stream));
        }
        partial[static_cast<std::size_t>(c)] = std::move(acc);
    }
    EntryStats total(side);
    for (const auto &p : partial) {
        total.merge(p);
    }
    return total.finish(seed);
}

namespace reference {

OmegaEstimate mc_omega(int d, std::int64_t n, std::uint64_t seed) {
    require_omega_args(d, n);
    const Eigen::Index side = static_cast<Eigen::Index>(d) * d * d * d;
    EntryStats total(side);
    for (std::int64_t c = 0; c < chunk_count(n); ++c) {
        RngStream stream(seed, static_cast<std::uint64_t>(c));
        EntryStats chunk(side);
        for (std::int64_t i = c * kChunkSize; i < std::min(n, (c + 1) * kChunkSize); ++i) {
            chunk.add(omega_sample(d, stream));
        }
        total.merge(chunk);
    }
    return total.finish(seed);
}

}  // namespace reference

OmegaComparison compare_omega(const OmegaEstimate &estimate, const ComplexMatrix &exact) {
    if (estimate.mean.rows() != exact.rows() || estimate.mean.cols() != exact.cols()) {
        throw Error(ErrorKind::ShapeMismatch, "estimate and exact operator differ in shape");
    }
    OmegaComparison cmp;
    auto z_of = [](double dev, double se) {
        if (se > 0.0) return dev / se;
        return dev <= 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
    };
    for (Eigen::Index i = 0; i < exact.rows(); ++i) {
        for (Eigen::Index j = 0; j < exact.cols(); ++j) {
            const Complex diff = estimate.mean(i, j) - exact(i, j);
            cmp.max_abs_deviation = std::max(cmp.max_abs_deviation, std::abs(diff));
            cmp.max_z = std::max(cmp.max_z, z_of(std::abs(diff.real()), estimate.re_std_error(i, j)));
            cmp.max_z = std::max(cmp.max_z, z_of(std::abs(diff.imag()), estimate.im_std_error(i, j)));
        }
    }
    cmp.trace_deviation = std::abs(estimate.mean.trace() - 1.0);
    return cmp;
}

double omega_commutator_residual(const ComplexMatrix &omega, const ComplexMatrix &v) {
    const auto d = v.rows();
    const ComplexMatrix vi = kron(v, ComplexMatrix::Identity(d, d));
    const ComplexMatrix g = kron(vi, vi);
    if (g.rows() != omega.rows()) {
        throw Error(ErrorKind::ShapeMismatch, "local unitary does not match the four-party operator");
    }
    return max_abs(ComplexMatrix(omega * g - g * omega));
}

double delta_via_omega(const Unitary &u) {
    const int d = u.d();
    require_local_dim(d, kMaxFourPartyDim);
    const ComplexMatrix omega = omega_closed_form(d);
    const ComplexMatrix k = kron(u.matrix(), u.matrix());
    const ComplexMatrix y = k * omega * k.adjoint();
    const int dims[4] = {d, d, d, d};
    const Permutation s13 = party_swap_permutation(dims, 0, 2);
    // Tr(Y S13) = sum_i Y[i, s13(i)].
    Complex tr = 0.0;
    for (int i = 0; i < s13.size(); ++i) {
        tr += y(i, s13(i));
    }
    double delta = (d * tr.real() - 1.0) / (d - 1.0);
    if (delta < 0.0 && delta > -1e-10) {
        delta = 0.0;
    }
    return delta;
}

}  // namespace entpower
