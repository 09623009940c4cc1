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
#include <cmath>
#include <sstream>
#include <string>

#include "entpower/error.hpp"

namespace entpower {

PartyIndexer::PartyIndexer(std::vector<int> dims) : dims_(std::move(dims)), total_(1) {
    for (int n : dims_) {
        if (n < 1) {
            throw Error(ErrorKind::InvalidArgument, "party dimension must be positive");
        }
        total_ *= static_cast<std::size_t>(n);
    }
}

std::size_t PartyIndexer::flat(std::span<const int> digits) const {
    if (digits.size() != dims_.size()) {
        throw Error(ErrorKind::ShapeMismatch, "digit count does not match party count");
    }
    std::size_t k = 0;
    for (std::size_t p = 0; p < dims_.size(); ++p) {
        k = k * static_cast<std::size_t>(dims_[p]) + static_cast<std::size_t>(digits[p]);
    }
    return k;
}

void PartyIndexer::digits(std::size_t flat, std::span<int> out) const {
    for (std::size_t p = dims_.size(); p-- > 0;) {
        const auto n = static_cast<std::size_t>(dims_[p]);
        out[p] = static_cast<int>(flat % n);
        flat /= n;
    }
}

std::vector<int> PartyIndexer::digits(std::size_t flat) const {
    std::vector<int> out(dims_.size());
    digits(flat, out);
    return out;
}

void require_finite(const ComplexMatrix &m) {
    for (Eigen::Index k = 0; k < m.size(); ++k) {
        const Complex z = m.data()[k];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::NotFinite, "matrix has a non-finite entry");
        }
    }
}

double max_abs(const ComplexMatrix &m) {
    double best = 0.0;
    for (Eigen::Index k = 0; k < m.size(); ++k) {
        best = std::max(best, std::abs(m.data()[k]));
    }
    return best;
}

double unitarity_deviation(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    ComplexMatrix g = m.adjoint() * m;
    g -= ComplexMatrix::Identity(m.rows(), m.cols());
    return max_abs(g);
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const Eigen::Index rows = a.rows() * b.rows();
    const Eigen::Index cols = a.cols() * b.cols();
    if (rows > kMaxDenseSide || cols > kMaxDenseSide) {
        std::ostringstream msg;
        msg << "kron result " << rows << "x" << cols << " exceeds the dense limit " << kMaxDenseSide;
        throw Error(ErrorKind::SizeLimit, msg.str());
    }
    ComplexMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const int> dims, std::span<const int> keep) {
    PartyIndexer full(std::vector<int>(dims.begin(), dims.end()));
    if (rho.rows() != rho.cols() || static_cast<std::size_t>(rho.rows()) != full.total()) {
        throw Error(ErrorKind::ShapeMismatch, "density matrix side does not match the party dimensions");
    }
    std::vector<char> kept(dims.size(), 0);
    for (int p : keep) {
        if (p < 0 || static_cast<std::size_t>(p) >= dims.size() || kept[static_cast<std::size_t>(p)]) {
            throw Error(ErrorKind::InvalidArgument, "invalid kept party index");
        }
        kept[static_cast<std::size_t>(p)] = 1;
    }
    std::vector<int> keep_dims;
    std::vector<int> trace_dims;
    for (std::size_t p = 0; p < dims.size(); ++p) {
        (kept[p] ? keep_dims : trace_dims).push_back(dims[p]);
    }
    PartyIndexer kept_ix(keep_dims);
    PartyIndexer traced_ix(trace_dims);

    const auto nk = static_cast<Eigen::Index>(kept_ix.total());
    ComplexMatrix out = ComplexMatrix::Zero(nk, nk);
    std::vector<int> row_digits(dims.size());
    std::vector<int> col_digits(dims.size());
    std::vector<int> kd_row(keep_dims.size());
    std::vector<int> kd_col(keep_dims.size());
    std::vector<int> td(trace_dims.size());

    // Scatter the kept and traced digits back into full-party tuples.
    auto assemble = [&](std::span<const int> kd, std::span<const int> tdig, std::vector<int> &full_digits) {
        std::size_t ik = 0;
        std::size_t it = 0;
        for (std::size_t p = 0; p < dims.size(); ++p) {
            full_digits[p] = kept[p] ? kd[ik++] : tdig[it++];
        }
    };

    for (Eigen::Index r = 0; r < nk; ++r) {
        kept_ix.digits(static_cast<std::size_t>(r), kd_row);
        for (Eigen::Index c = 0; c < nk; ++c) {
            kept_ix.digits(static_cast<std::size_t>(c), kd_col);
            Complex acc = 0.0;
            for (std::size_t t = 0; t < traced_ix.total(); ++t) {
                traced_ix.digits(t, td);
                assemble(kd_row, td, row_digits);
                assemble(kd_col, td, col_digits);
                acc += rho(static_cast<Eigen::Index>(full.flat(row_digits)),
                           static_cast<Eigen::Index>(full.flat(col_digits)));
            }
            out(r, c) = acc;
        }
    }
    return out;
}

ComplexMatrix permutation_matrix(const Permutation &p) {
    const Eigen::Index n = p.size();
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < p.size(); ++k) {
        m(p(k), k) = 1.0;
    }
    return m;
}

Permutation party_swap_permutation(std::span<const int> dims, int p, int q) {
    PartyIndexer ix(std::vector<int>(dims.begin(), dims.end()));
    const auto np = static_cast<int>(dims.size());
    if (p < 0 || q < 0 || p >= np || q >= np || dims[static_cast<std::size_t>(p)] != dims[static_cast<std::size_t>(q)]) {
        throw Error(ErrorKind::InvalidArgument, "cannot swap parties of unequal dimension");
    }
    std::vector<int> images(ix.total());
    std::vector<int> dig(dims.size());
    for (std::size_t k = 0; k < ix.total(); ++k) {
        ix.digits(k, dig);
        std::swap(dig[static_cast<std::size_t>(p)], dig[static_cast<std::size_t>(q)]);
        images[k] = static_cast<int>(ix.flat(dig));
    }
    return Permutation(std::move(images));
}

void require_local_dim(int d, int max_d) {
    if (d < kMinLocalDim || d > max_d) {
        throw Error(ErrorKind::SizeLimit,
                    "local dimension " + std::to_string(d) + " outside [2, " + std::to_string(max_d) + "]");
    }
}

Unitary::Unitary(int d, ComplexMatrix matrix) : d_(d), matrix_(std::move(matrix)) {
    require_local_dim(d);
    if (matrix_.rows() != d * d || matrix_.cols() != d * d) {
        throw Error(ErrorKind::ShapeMismatch, "unitary on a d x d system must be d^2 x d^2");
    }
    require_finite(matrix_);
    const double dev = unitarity_deviation(matrix_);
    if (!(dev <= kUnitarityTol)) {
        std::ostringstream msg;
        msg.precision(3);
        msg << "max |U^dagger U - I| = " << std::scientific << dev << " exceeds 1e-10";
        throw Error(ErrorKind::NotUnitary, msg.str());
    }
}

Unitary Unitary::identity(int d) {
    require_local_dim(d);
    return Unitary(d, ComplexMatrix::Identity(d * d, d * d));
}

Unitary Unitary::from_permutation(int d, const Permutation &p) {
    require_local_dim(d);
    if (p.size() != d * d) {
        throw Error(ErrorKind::ShapeMismatch, "permutation must act on d^2 points");
    }
    return Unitary(d, permutation_matrix(p));
}

Unitary Unitary::operator*(const Unitary &rhs) const {
    if (rhs.d_ != d_) {
        throw Error(ErrorKind::ShapeMismatch, "multiplying unitaries of different local dimension");
    }
    return Unitary(d_, matrix_ * rhs.matrix_);
}

StateVector::StateVector(std::vector<int> dims, ComplexVector amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    PartyIndexer ix(dims_);
    if (static_cast<std::size_t>(amplitudes_.size()) != ix.total()) {
        throw Error(ErrorKind::ShapeMismatch, "amplitude count does not match the party dimensions");
    }
    const double norm = amplitudes_.norm();
    if (!(std::abs(norm - 1.0) <= kNormTol)) {
        throw Error(ErrorKind::NotNormalized, "state norm " + std::to_string(norm) + " is not 1");
    }
}

}  // namespace entpower
