// Copyright 2026 The shadowkit Authors
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

#include "shadowkit/dense.h"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace shadowkit {

using cd = std::complex<double>;

void require_dense(size_t n, size_t cap, std::string_view what) {
    if (n > cap) {
        throw std::invalid_argument(
            std::string(what) + ": " + std::to_string(n) + " qubits exceeds the dense cap of " + std::to_string(cap));
    }
}

Matrix2 single_qubit_pauli(Pauli p) {
    Matrix2 m;
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

Matrix2 basis_rotation(Pauli basis) {
    const double r = 1.0 / std::sqrt(2.0);
    Matrix2 h;
    h << r, r, r, -r;
    Matrix2 s_dag;
    s_dag << 1, 0, 0, cd(0, -1);
    switch (basis) {
        case Pauli::X:
            return h;
        case Pauli::Y:
            return h * s_dag;
        case Pauli::Z:
            return Matrix2::Identity();
        default:
            throw std::invalid_argument("basis_rotation: measurement basis must be X, Y or Z");
    }
}

Matrix2 basis_projector(Pauli basis, uint8_t bit) {
    double s = bit ? -1.0 : 1.0;
    return 0.5 * (Matrix2::Identity() + s * single_qubit_pauli(basis));
}

CMatrix kron_qubits(std::span<const Matrix2> factors) {
    size_t n = factors.size();
    size_t dim = size_t{1} << n;
    CMatrix out(dim, dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            cd v = 1;
            for (size_t q = 0; q < n && v != cd(0); q++) {
                v *= factors[q]((r >> q) & 1, (c >> q) & 1);
            }
            out(r, c) = v;
        }
    }
    return out;
}

CMatrix pauli_matrix(const PauliString &p) {
    std::vector<Matrix2> f;
    f.reserve(p.size());
    for (size_t q = 0; q < p.size(); q++) {
        f.push_back(single_qubit_pauli(p[q]));
    }
    return kron_qubits(f);
}

CMatrix pauli_matrix(const PackedPauli &p) {
    CMatrix m = pauli_matrix(p.unsigned_string());
    return p.sign ? CMatrix(-m) : m;
}

CVector apply_pauli(const PackedPauli &p, const CVector &v) {
    uint64_t x = 0;
    uint64_t z = 0;
    if (p.num_qubits > 63) {
        throw std::invalid_argument("apply_pauli: too many qubits for a dense vector");
    }
    if (p.num_qubits > 0) {
        x = p.xs[0];
        z = p.zs[0];
    }
    // Y = i X Z, so the Pauli acts as |k> -> (-1)^(sign + |k & z|) i^|x & z| |k ^ x>.
    static const cd kIPow[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    cd global = kIPow[std::popcount(x & z) & 3] * (p.sign ? -1.0 : 1.0);
    CVector out(v.size());
    for (Eigen::Index k = 0; k < v.size(); k++) {
        auto uk = static_cast<uint64_t>(k);
        double s = (std::popcount(uk & z) & 1) ? -1.0 : 1.0;
        out(static_cast<Eigen::Index>(uk ^ x)) = global * s * v(k);
    }
    return out;
}

void apply_single_qubit(CVector &v, size_t q, const Matrix2 &u) {
    auto stride = static_cast<Eigen::Index>(uint64_t{1} << q);
    for (Eigen::Index k = 0; k < v.size(); k++) {
        if (k & stride) {
            continue;
        }
        cd a = v(k);
        cd b = v(k | stride);
        v(k) = u(0, 0) * a + u(0, 1) * b;
        v(k | stride) = u(1, 0) * a + u(1, 1) * b;
    }
}

CVector stabilizer_statevector(const StabilizerState &s, size_t cap) {
    size_t n = s.num_qubits();
    require_dense(n, cap, "stabilizer_statevector");
    // Find one basis state in the support by forcing every random outcome to 0.
    CliffordTableau t = s.tableau();
    uint64_t seed_index = 0;
    for (size_t q = 0; q < n; q++) {
        auto [bit, was_random] = measure_z_inplace(t, q, nullptr, uint8_t{0});
        (void)was_random;
        if (bit) {
            seed_index |= uint64_t{1} << q;
        }
    }
    CVector v = CVector::Zero(static_cast<Eigen::Index>(uint64_t{1} << n));
    v(static_cast<Eigen::Index>(seed_index)) = 1;
    for (size_t i = 0; i < n; i++) {
        v = 0.5 * (v + apply_pauli(s.stabilizer(i), v));
    }
    double norm = v.norm();
    if (norm < 1e-12) {
        throw std::logic_error("stabilizer_statevector: projected onto zero vector");
    }
    return v / norm;
}

CMatrix partial_trace(const CMatrix &rho, size_t n, std::span<const size_t> keep) {
    size_t k = keep.size();
    uint64_t keep_mask = 0;
    for (size_t q : keep) {
        if (q >= n) {
            throw std::invalid_argument("partial_trace: qubit index out of range");
        }
        keep_mask |= uint64_t{1} << q;
    }
    auto compress = [&](uint64_t idx) {
        uint64_t out = 0;
        for (size_t j = 0; j < k; j++) {
            out |= ((idx >> keep[j]) & 1) << j;
        }
        return out;
    };
    size_t dim = size_t{1} << n;
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(size_t{1} << k), static_cast<Eigen::Index>(size_t{1} << k));
    for (uint64_t r = 0; r < dim; r++) {
        for (uint64_t c = 0; c < dim; c++) {
            if ((r & ~keep_mask) != (c & ~keep_mask)) {
                continue;
            }
            out(static_cast<Eigen::Index>(compress(r)), static_cast<Eigen::Index>(compress(c))) +=
                rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

Matrix2 haar_unitary_2x2(RngStream &rng) {
    Eigen::Vector2cd a(cd(rng.normal(), rng.normal()), cd(rng.normal(), rng.normal()));
    Eigen::Vector2cd b(cd(rng.normal(), rng.normal()), cd(rng.normal(), rng.normal()));
    a.normalize();
    b -= a.dot(b) * a;
    b.normalize();
    Matrix2 u;
    u.col(0) = a;
    u.col(1) = b;
    return u;
}

}  // namespace shadowkit
