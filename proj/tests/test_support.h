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

// Independent reference machinery shared by the unit tests and the acceptance
// binary. Nothing here calls the estimators under test; dense objects are built
// straight from gate matrices.

#ifndef SHADOWKIT_TESTS_TEST_SUPPORT_H
#define SHADOWKIT_TESTS_TEST_SUPPORT_H

#include <cmath>
#include <complex>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "shadowkit/dense.h"
#include "shadowkit/rng.h"
#include "shadowkit/tableau.h"

namespace shadowkit::oracle {

struct GateOp {
    char kind;  // 'H', 'S', 'C' (CX a -> b)
    size_t a;
    size_t b;
};

inline void apply_gate(CliffordTableau &t, const GateOp &g) {
    switch (g.kind) {
        case 'H':
            t.apply_h(g.a);
            break;
        case 'S':
            t.apply_s(g.a);
            break;
        default:
            t.apply_cx(g.a, g.b);
            break;
    }
}

inline void apply_gate(CVector &v, const GateOp &g) {
    const double r = 1.0 / std::sqrt(2.0);
    if (g.kind == 'H') {
        Matrix2 h;
        h << r, r, r, -r;
        apply_single_qubit(v, g.a, h);
    } else if (g.kind == 'S') {
        Matrix2 s;
        s << 1, 0, 0, std::complex<double>(0, 1);
        apply_single_qubit(v, g.a, s);
    } else {
        CVector out = v;
        for (Eigen::Index k = 0; k < v.size(); k++) {
            auto uk = static_cast<uint64_t>(k);
            uint64_t dst = ((uk >> g.a) & 1) ? (uk ^ (uint64_t{1} << g.b)) : uk;
            out(static_cast<Eigen::Index>(dst)) = v(k);
        }
        v = out;
    }
}

inline void apply_gate(CMatrix &u, const GateOp &g) {
    for (Eigen::Index c = 0; c < u.cols(); c++) {
        CVector col = u.col(c);
        apply_gate(col, g);
        u.col(c) = col;
    }
}

inline std::vector<GateOp> random_circuit(size_t n, size_t depth, RngStream &rng) {
    std::vector<GateOp> ops;
    for (size_t d = 0; d < depth; d++) {
        uint64_t pick = rng.below(n > 1 ? 3 : 2);
        size_t a = rng.below(n);
        if (pick == 0) {
            ops.push_back({'H', a, 0});
        } else if (pick == 1) {
            ops.push_back({'S', a, 0});
        } else {
            size_t b = rng.below(n - 1);
            if (b >= a) {
                b++;
            }
            ops.push_back({'C', a, b});
        }
    }
    return ops;
}

inline CMatrix circuit_unitary(size_t n, const std::vector<GateOp> &ops) {
    CMatrix u = CMatrix::Identity(1 << n, 1 << n);
    for (const auto &g : ops) {
        apply_gate(u, g);
    }
    return u;
}

inline CVector circuit_state(size_t n, const std::vector<GateOp> &ops) {
    CVector v = CVector::Zero(1 << n);
    v(0) = 1;
    for (const auto &g : ops) {
        apply_gate(v, g);
    }
    return v;
}

struct CliffordElement {
    CliffordTableau tableau;
    CMatrix unitary;
};

/// Whole Clifford group modulo phase by breadth-first closure under H, S and CX,
/// tracking each element's tableau and its dense unitary side by side.
inline std::vector<CliffordElement> enumerate_clifford_group(size_t n) {
    std::vector<GateOp> gens;
    for (size_t q = 0; q < n; q++) {
        gens.push_back({'H', q, 0});
        gens.push_back({'S', q, 0});
        for (size_t t = 0; t < n; t++) {
            if (t != q) {
                gens.push_back({'C', q, t});
            }
        }
    }
    std::vector<CliffordElement> out;
    std::unordered_map<std::string, size_t> seen;
    out.push_back({CliffordTableau(n), CMatrix::Identity(1 << n, 1 << n)});
    seen.emplace(out[0].tableau.to_text(), 0);
    for (size_t i = 0; i < out.size(); i++) {
        for (const auto &g : gens) {
            CliffordTableau t = out[i].tableau;
            apply_gate(t, g);
            std::string key = t.to_text();
            if (seen.count(key)) {
                continue;
            }
            CMatrix u = out[i].unitary;
            apply_gate(u, g);
            seen.emplace(std::move(key), out.size());
            out.push_back({std::move(t), std::move(u)});
        }
    }
    return out;
}

/// Max entrywise distance between two matrices after removing a global phase.
inline double phase_insensitive_distance(const CMatrix &a, const CMatrix &b) {
    Eigen::Index r0 = 0;
    Eigen::Index c0 = 0;
    a.cwiseAbs().maxCoeff(&r0, &c0);
    std::complex<double> pa = a(r0, c0) / std::abs(a(r0, c0));
    std::complex<double> pb = b(r0, c0);
    if (std::abs(pb) < 1e-12) {
        return 1e9;
    }
    pb /= std::abs(pb);
    return ((a / pa) - (b / pb)).cwiseAbs().maxCoeff();
}

inline CMatrix random_hermitian(size_t dim, RngStream &rng) {
    CMatrix m(dim, dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            m(r, c) = std::complex<double>(rng.normal(), rng.normal());
        }
    }
    return 0.5 * (m + m.adjoint());
}

inline CVector random_state_vector(size_t n, RngStream &rng) {
    CVector v(1 << n);
    for (Eigen::Index k = 0; k < v.size(); k++) {
        v(k) = std::complex<double>(rng.normal(), rng.normal());
    }
    return v / v.norm();
}

/// Product-basis Born distribution of rho, built from explicit rotation matrices:
/// H for X and H S^dag for Y.
inline std::vector<double> born_distribution(const CMatrix &rho, size_t n, const std::vector<Pauli> &bases) {
    const double r = 1 / std::sqrt(2.0);
    const std::complex<double> i1(0, 1);
    CMatrix u = CMatrix::Identity(1, 1);
    for (size_t q = 0; q < n; q++) {
        CMatrix m(2, 2);
        if (bases[q] == Pauli::X) {
            m << r, r, r, -r;
        } else if (bases[q] == Pauli::Y) {
            m << r, -i1 * r, r, i1 * r;
        } else {
            m << 1, 0, 0, 1;
        }
        CMatrix next(u.rows() * 2, u.cols() * 2);
        // Qubit q is bit q, so each new factor is more significant.
        for (Eigen::Index a = 0; a < 2; a++) {
            for (Eigen::Index b = 0; b < 2; b++) {
                next.block(a * u.rows(), b * u.cols(), u.rows(), u.cols()) = m(a, b) * u;
            }
        }
        u = next;
    }
    CMatrix rotated = u * rho * u.adjoint();
    std::vector<double> p(size_t{1} << n);
    for (size_t k = 0; k < p.size(); k++) {
        p[k] = rotated(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real();
    }
    return p;
}

inline size_t pack_bits(const std::vector<uint8_t> &bits) {
    size_t k = 0;
    for (size_t q = 0; q < bits.size(); q++) {
        k |= size_t{bits[q]} << q;
    }
    return k;
}

inline double total_variation(const std::vector<double> &p, const std::vector<double> &q) {
    double d = 0;
    for (size_t k = 0; k < p.size(); k++) {
        d += std::abs(p[k] - q[k]);
    }
    return d / 2;
}

}  // namespace shadowkit::oracle

#endif
