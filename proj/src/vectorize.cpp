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

#include "entpower/vectorize.hpp"

#include <algorithm>
#include <cmath>

#include "entpower/error.hpp"

namespace entpower {

namespace {

ComplexVector zero_four_party(int d) {
    return ComplexVector::Zero(static_cast<Eigen::Index>(d) * d * d * d);
}

std::vector<int> four_dims(int d) {
    return {d, d, d, d};
}

}  // namespace

FourPartyState::FourPartyState(int d, ComplexVector amplitudes)
    : d_(d), state_(four_dims(d), std::move(amplitudes)) {
    require_local_dim(d);
}

Complex FourPartyState::at(int a, int b, int c, int e) const {
    const int idx[4] = {a, b, c, e};
    PartyIndexer ix(four_dims(d_));
    return amplitudes()[static_cast<Eigen::Index>(ix.flat(idx))];
}

Cut::Cut(int parties, std::vector<int> left) : parties_(parties), left_(std::move(left)) {
    std::sort(left_.begin(), left_.end());
    std::vector<char> on_left(static_cast<std::size_t>(std::max(parties, 0)), 0);
    for (int p : left_) {
        if (p < 0 || p >= parties || on_left[static_cast<std::size_t>(p)]) {
            throw Error(ErrorKind::InvalidArgument, "cut party index out of range or repeated");
        }
        on_left[static_cast<std::size_t>(p)] = 1;
    }
    for (int p = 0; p < parties; ++p) {
        if (!on_left[static_cast<std::size_t>(p)]) {
            right_.push_back(p);
        }
    }
}

Cut Cut::flipped() const {
    return Cut(parties_, right_);
}

Cut cut_12_34() {
    return Cut(4, {0, 1});
}
Cut cut_13_24() {
    return Cut(4, {0, 2});
}
Cut cut_bipartite() {
    return Cut(2, {0});
}

FourPartyState psi_plus(int d) {
    require_local_dim(d);
    PartyIndexer ix(four_dims(d));
    ComplexVector amp = zero_four_party(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const int idx[4] = {i, i, j, j};
            amp[static_cast<Eigen::Index>(ix.flat(idx))] = 1.0 / d;
        }
    }
    return FourPartyState(d, std::move(amp));
}

FourPartyState vectorize(const Unitary &u) {
    const int d = u.d();
    PartyIndexer four(four_dims(d));
    PartyIndexer two({d, d});
    ComplexVector amp = zero_four_party(d);
    const ComplexMatrix &m = u.matrix();
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            for (int c = 0; c < d; ++c) {
                for (int e = 0; e < d; ++e) {
                    const int t[4] = {a, b, c, e};
                    const int row[2] = {a, c};
                    const int col[2] = {b, e};
                    amp[static_cast<Eigen::Index>(four.flat(t))] =
                        m(static_cast<Eigen::Index>(two.flat(row)), static_cast<Eigen::Index>(two.flat(col))) /
                        static_cast<double>(d);
                }
            }
        }
    }
    return FourPartyState(d, std::move(amp));
}

Unitary swap_operator(int d) {
    require_local_dim(d);
    const int dims[2] = {d, d};
    return Unitary::from_permutation(d, party_swap_permutation(dims, 0, 1));
}

double normalized_linear_entropy(double purity, int dimension) {
    if (dimension < 2) {
        throw Error(ErrorKind::DegenerateCut, "linear entropy needs both sides of dimension >= 2");
    }
    const double big_d = dimension;
    double s = big_d / (big_d - 1.0) * (1.0 - purity);
    if (s < kEntropySnap) {
        s = 0.0;
    } else if (s > 1.0 - kEntropySnap) {
        s = 1.0;
    }
    return s;
}

double linear_entropy(const StateVector &state, const Cut &cut) {
    const auto dims = state.dims();
    if (static_cast<std::size_t>(cut.parties()) != dims.size()) {
        throw Error(ErrorKind::ShapeMismatch, "cut does not match the number of parties");
    }
    if (cut.left().empty() || cut.right().empty()) {
        throw Error(ErrorKind::DegenerateCut, "one side of the cut is empty");
    }
    std::vector<int> left_dims;
    std::vector<int> right_dims;
    for (int p : cut.left()) left_dims.push_back(dims[static_cast<std::size_t>(p)]);
    for (int p : cut.right()) right_dims.push_back(dims[static_cast<std::size_t>(p)]);
    PartyIndexer full(std::vector<int>(dims.begin(), dims.end()));
    PartyIndexer left_ix(left_dims);
    PartyIndexer right_ix(right_dims);

    // Coefficient matrix M[l, r] so that rho_left = M M^dagger.
    const auto nl = static_cast<Eigen::Index>(left_ix.total());
    const auto nr = static_cast<Eigen::Index>(right_ix.total());
    ComplexMatrix m(nl, nr);
    std::vector<int> dig(dims.size());
    std::vector<int> ld(left_dims.size());
    std::vector<int> rd(right_dims.size());
    for (Eigen::Index l = 0; l < nl; ++l) {
        left_ix.digits(static_cast<std::size_t>(l), ld);
        for (std::size_t k = 0; k < ld.size(); ++k) dig[static_cast<std::size_t>(cut.left()[k])] = ld[k];
        for (Eigen::Index r = 0; r < nr; ++r) {
            right_ix.digits(static_cast<std::size_t>(r), rd);
            for (std::size_t k = 0; k < rd.size(); ++k) dig[static_cast<std::size_t>(cut.right()[k])] = rd[k];
            m(l, r) = state.amplitudes()[static_cast<Eigen::Index>(full.flat(dig))];
        }
    }
    const double purity = (nl <= nr) ? (m * m.adjoint()).squaredNorm() : (m.adjoint() * m).squaredNorm();
    return normalized_linear_entropy(purity, static_cast<int>(std::min(nl, nr)));
}

double linear_entropy(const FourPartyState &state, const Cut &cut) {
    return linear_entropy(state.state(), cut);
}

double entropy_of_operator(const Unitary &u) {
    return linear_entropy(vectorize(u), cut_12_34());
}

double entropy_trace_formula(const Unitary &u) {
    const int d = u.d();
    require_local_dim(d, kMaxFourPartyDim);
    const ComplexMatrix k = kron(u.matrix(), u.matrix());
    const int dims[4] = {d, d, d, d};
    const Permutation s13 = party_swap_permutation(dims, 0, 2);
    const Eigen::Index n = k.rows();

    // X = (K S13) K^dagger with (K S13)[i, m] = K[i, s13(m)]; Tr(X S13) = sum_i X[i, s13(i)].
    Complex tr = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index si = s13(static_cast<int>(i));
        Complex acc = 0.0;
        for (Eigen::Index m = 0; m < n; ++m) {
            acc += k(i, s13(static_cast<int>(m))) * std::conj(k(si, m));
        }
        tr += acc;
    }
    const double d2 = static_cast<double>(d) * d;
    const double purity = tr.real() / (d2 * d2);
    return normalized_linear_entropy(purity, d * d);
}

}  // namespace entpower
