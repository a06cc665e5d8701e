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

#include "shadowkit/clifford_sampler.h"

#include <stdexcept>
#include <vector>

namespace shadowkit {

namespace {

bool omega(const PackedPauli &a, const PackedPauli &b) {
    return !a.commutes_with(b);
}

void xor_into(PackedPauli &dst, const PackedPauli &src) {
    for (size_t k = 0; k < dst.xs.size(); k++) {
        dst.xs[k] ^= src.xs[k];
        dst.zs[k] ^= src.zs[k];
    }
}

/// v <- v + omega(v, b) a + omega(v, a) b, removing the span{a, b} component of v
/// when omega(a, b) = 1.
void project_out(PackedPauli &v, const PackedPauli &a, const PackedPauli &b) {
    bool wa = omega(v, a);
    bool wb = omega(v, b);
    if (wb) {
        xor_into(v, a);
    }
    if (wa) {
        xor_into(v, b);
    }
}

PackedPauli random_combination(const std::vector<PackedPauli> &basis, size_t n, RngStream &rng) {
    PackedPauli out(n);
    for (const auto &v : basis) {
        if (rng.bit()) {
            xor_into(out, v);
        }
    }
    return out;
}

}  // namespace

CliffordTableau random_clifford(size_t n, RngStream &rng) {
    if (n == 0) {
        throw std::invalid_argument("random_clifford: n must be positive");
    }
    // Spanning set of the current symplectic subspace, kept as a list of 2m vectors
    // organized in hyperbolic pairs (basis[2k], basis[2k+1]).
    std::vector<PackedPauli> basis;
    basis.reserve(2 * n);
    for (size_t q = 0; q < n; q++) {
        PackedPauli x(n);
        x.set(q, Pauli::X);
        PackedPauli z(n);
        z.set(q, Pauli::Z);
        basis.push_back(std::move(x));
        basis.push_back(std::move(z));
    }

    CliffordTableau out(n);
    for (size_t i = 0; i < n; i++) {
        PackedPauli p = random_combination(basis, n, rng);
        while (p.is_identity()) {
            p = random_combination(basis, n, rng);
        }
        PackedPauli q = random_combination(basis, n, rng);
        while (!omega(p, q)) {
            q = random_combination(basis, n, rng);
        }

        std::vector<PackedPauli> pool;
        pool.reserve(basis.size());
        for (auto &v : basis) {
            project_out(v, p, q);
            if (!v.is_identity()) {
                pool.push_back(std::move(v));
            }
        }
        // Symplectic Gram-Schmidt back into hyperbolic pairs.
        basis.clear();
        while (!pool.empty()) {
            PackedPauli a = std::move(pool.back());
            pool.pop_back();
            if (a.is_identity()) {
                continue;
            }
            size_t partner = pool.size();
            for (size_t j = 0; j < pool.size(); j++) {
                if (omega(a, pool[j])) {
                    partner = j;
                    break;
                }
            }
            if (partner == pool.size()) {
                throw std::logic_error("random_clifford: degenerate subspace");
            }
            PackedPauli b = std::move(pool[partner]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
            for (auto &v : pool) {
                project_out(v, a, b);
            }
            basis.push_back(std::move(a));
            basis.push_back(std::move(b));
        }
        if (basis.size() != 2 * (n - i - 1)) {
            throw std::logic_error("random_clifford: subspace dimension drifted");
        }

        p.sign = rng.bit();
        q.sign = rng.bit();
        out.set_row(i, p);
        out.set_row(n + i, q);
    }
    return out;
}

}  // namespace shadowkit
