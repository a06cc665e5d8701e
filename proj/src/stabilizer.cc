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

#include "shadowkit/stabilizer.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace shadowkit {

namespace {

/// Symplectic product of two packed Paulis (1 when they anticommute).
bool symplectic(const PackedPauli &a, const PackedPauli &b) {
    return !a.commutes_with(b);
}

struct Gf2Row {
    std::vector<uint64_t> bits;
    explicit Gf2Row(size_t n) : bits(words_for_bits(n), 0) {
    }
    bool get(size_t i) const {
        return (bits[i >> 6] >> (i & 63)) & 1;
    }
    void flip(size_t i) {
        bits[i >> 6] ^= uint64_t{1} << (i & 63);
    }
    void xor_with(const Gf2Row &o) {
        for (size_t k = 0; k < bits.size(); k++) {
            bits[k] ^= o.bits[k];
        }
    }
};

}  // namespace

StabilizerState StabilizerState::from_generators(std::span<const PackedPauli> stabilizers) {
    size_t n = stabilizers.size();
    if (n == 0) {
        throw std::invalid_argument("from_generators: no generators");
    }
    for (const auto &s : stabilizers) {
        if (s.num_qubits != n) {
            throw std::invalid_argument(
                "from_generators: need exactly n generators on n qubits, got " + std::to_string(n) +
                " generators on " + std::to_string(s.num_qubits) + " qubits");
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (symplectic(stabilizers[i], stabilizers[j])) {
                throw std::invalid_argument(
                    "from_generators: generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute");
            }
        }
    }

    // Destabilizer d_i solves omega(d_i, s_j) = delta_ij. With columns laid out as
    // (x_0..x_{n-1}, z_0..z_{n-1}) for d, the coefficient row for s_j is (z(s_j), x(s_j)).
    std::vector<Gf2Row> m;
    std::vector<Gf2Row> aug;
    for (size_t j = 0; j < n; j++) {
        Gf2Row row(2 * n);
        for (size_t q = 0; q < n; q++) {
            if (stabilizers[j].z(q)) {
                row.flip(q);
            }
            if (stabilizers[j].x(q)) {
                row.flip(n + q);
            }
        }
        m.push_back(std::move(row));
        Gf2Row a(n);
        a.flip(j);
        aug.push_back(std::move(a));
    }
    std::vector<size_t> pivot_col(n);
    size_t rank = 0;
    for (size_t col = 0; col < 2 * n && rank < n; col++) {
        size_t pivot = rank;
        while (pivot < n && !m[pivot].get(col)) {
            pivot++;
        }
        if (pivot == n) {
            continue;
        }
        std::swap(m[pivot], m[rank]);
        std::swap(aug[pivot], aug[rank]);
        for (size_t r = 0; r < n; r++) {
            if (r != rank && m[r].get(col)) {
                m[r].xor_with(m[rank]);
                aug[r].xor_with(aug[rank]);
            }
        }
        pivot_col[rank] = col;
        rank++;
    }
    if (rank < n) {
        throw std::invalid_argument("from_generators: generators are not independent");
    }

    std::vector<PackedPauli> destab(n, PackedPauli(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t r = 0; r < n; r++) {
            if (!aug[r].get(i)) {
                continue;
            }
            size_t c = pivot_col[r];
            if (c < n) {
                destab[i].xs[c >> 6] ^= uint64_t{1} << (c & 63);
            } else {
                destab[i].zs[(c - n) >> 6] ^= uint64_t{1} << ((c - n) & 63);
            }
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < i; j++) {
            if (symplectic(destab[i], destab[j])) {
                for (size_t k = 0; k < destab[i].xs.size(); k++) {
                    destab[i].xs[k] ^= stabilizers[j].xs[k];
                    destab[i].zs[k] ^= stabilizers[j].zs[k];
                }
            }
        }
    }

    CliffordTableau t(n);
    for (size_t i = 0; i < n; i++) {
        t.set_row(i, destab[i]);
        t.set_row(n + i, stabilizers[i]);
    }
    if (!t.is_symplectic()) {
        throw std::logic_error("from_generators: destabilizer construction failed");
    }
    return StabilizerState(std::move(t));
}

StabilizerState apply_clifford(const StabilizerState &state, const CliffordTableau &u) {
    if (state.num_qubits() != u.num_qubits()) {
        throw std::invalid_argument(
            "apply_clifford: state has " + std::to_string(state.num_qubits()) + " qubits, unitary has " +
            std::to_string(u.num_qubits()));
    }
    return StabilizerState(state.tableau().then(u));
}

std::pair<uint8_t, bool> measure_z_inplace(CliffordTableau &t, size_t q, RngStream *rng, std::optional<uint8_t> forced) {
    size_t n = t.num_qubits();
    size_t p = 2 * n;
    for (size_t r = n; r < 2 * n; r++) {
        if (t.x_bit(r, q)) {
            p = r;
            break;
        }
    }
    if (p < 2 * n) {
        for (size_t r = 0; r < 2 * n; r++) {
            if (r != p && t.x_bit(r, q)) {
                t.row_mul(r, p);
            }
        }
        t.set_row(p - n, t.row(p));
        uint8_t outcome = forced.has_value() ? *forced : static_cast<uint8_t>(rng->bit());
        PackedPauli zq(n);
        zq.zs[q >> 6] |= uint64_t{1} << (q & 63);
        zq.sign = outcome != 0;
        t.set_row(p, zq);
        return {outcome, true};
    }
    PackedPauli scratch(n);
    unsigned log_i = 0;
    for (size_t i = 0; i < n; i++) {
        if (t.x_bit(i, q)) {
            log_i += pauli_mul_inplace(scratch.xs, scratch.zs, t.row_xs(n + i), t.row_zs(n + i));
            log_i += t.sign(n + i) ? 2 : 0;
        }
    }
    return {static_cast<uint8_t>((log_i & 2) ? 1 : 0), false};
}

std::vector<uint8_t> measure_all_z(StabilizerState &&state, RngStream &rng) {
    size_t n = state.num_qubits();
    std::vector<uint8_t> out(n);
    for (size_t q = 0; q < n; q++) {
        out[q] = measure_z_inplace(state.tableau(), q, &rng).first;
    }
    return out;
}

double outcome_probability(const StabilizerState &state, std::span<const uint8_t> bits) {
    size_t n = state.num_qubits();
    if (bits.size() != n) {
        throw std::invalid_argument("outcome_probability: bitstring length mismatch");
    }
    CliffordTableau t = state.tableau();
    int random_count = 0;
    for (size_t q = 0; q < n; q++) {
        auto [outcome, was_random] = measure_z_inplace(t, q, nullptr, bits[q]);
        if (was_random) {
            random_count++;
        } else if (outcome != bits[q]) {
            return 0.0;
        }
    }
    return std::ldexp(1.0, -random_count);
}

double stabilizer_overlap_sq(const StabilizerState &a, const StabilizerState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("stabilizer_overlap_sq: size mismatch");
    }
    // |<a|b>|^2 = |<0|C_a^dag C_b|0>|^2.
    StabilizerState rotated(b.tableau().then(a.tableau().inverse()));
    std::vector<uint8_t> zeros(a.num_qubits(), 0);
    return outcome_probability(rotated, zeros);
}

int pauli_expectation(const StabilizerState &state, const PackedPauli &p) {
    size_t n = state.num_qubits();
    if (p.num_qubits != n) {
        throw std::invalid_argument("pauli_expectation: size mismatch");
    }
    const CliffordTableau &t = state.tableau();
    PackedPauli product(n);
    unsigned log_i = 0;
    for (size_t i = 0; i < n; i++) {
        PackedPauli s = t.row(n + i);
        if (!p.commutes_with(s)) {
            return 0;
        }
        if (!p.commutes_with(t.row(i))) {
            log_i += pauli_mul_inplace(product.xs, product.zs, s.xs, s.zs) + (s.sign ? 2 : 0);
        }
    }
    if (product.xs != p.xs || product.zs != p.zs) {
        throw std::logic_error("pauli_expectation: tableau is not a valid stabilizer state");
    }
    bool negative = ((log_i & 2) != 0) != p.sign;
    return negative ? -1 : 1;
}

StabilizerState ghz_state(size_t n, bool minus) {
    if (n < 1) {
        throw std::invalid_argument("ghz_state: n must be positive");
    }
    StabilizerState s(n);
    CliffordTableau &t = s.tableau();
    t.apply_h(0);
    for (size_t i = 0; i + 1 < n; i++) {
        t.apply_cx(i, i + 1);
    }
    if (minus) {
        t.apply_z(0);
    }
    return s;
}

StabilizerState toric_code_state(size_t lx, size_t ly) {
    if (lx < 2 || ly < 2) {
        throw std::invalid_argument("toric_code_state: both side lengths must be at least 2");
    }
    size_t n = 2 * lx * ly;
    auto h = [&](size_t x, size_t y) {
        return (y % ly) * lx + (x % lx);
    };
    auto v = [&](size_t x, size_t y) {
        return lx * ly + (y % ly) * lx + (x % lx);
    };
    std::vector<PackedPauli> gens;
    for (size_t y = 0; y < ly; y++) {
        for (size_t x = 0; x < lx; x++) {
            if (x + 1 == lx && y + 1 == ly) {
                continue;
            }
            PackedPauli star(n);
            for (size_t q : {h(x, y), h(x + lx - 1, y), v(x, y), v(x, y + ly - 1)}) {
                star.set(q, Pauli::X);
            }
            gens.push_back(std::move(star));
        }
    }
    for (size_t y = 0; y < ly; y++) {
        for (size_t x = 0; x < lx; x++) {
            if (x + 1 == lx && y + 1 == ly) {
                continue;
            }
            PackedPauli plaquette(n);
            for (size_t q : {h(x, y), h(x, y + 1), v(x, y), v(x + 1, y)}) {
                plaquette.set(q, Pauli::Z);
            }
            gens.push_back(std::move(plaquette));
        }
    }
    PackedPauli loop_h(n);
    for (size_t x = 0; x < lx; x++) {
        loop_h.set(h(x, 0), Pauli::Z);
    }
    gens.push_back(std::move(loop_h));
    PackedPauli loop_v(n);
    for (size_t y = 0; y < ly; y++) {
        loop_v.set(v(0, y), Pauli::Z);
    }
    gens.push_back(std::move(loop_v));
    return StabilizerState::from_generators(gens);
}

}  // namespace shadowkit
