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

#include "shadowkit/oracle.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace shadowkit {

namespace {

/// Samples a basis index from |v_k|^2.
uint64_t sample_index(const CVector &v, RngStream &rng) {
    double u = rng.uniform();
    double acc = 0;
    Eigen::Index last_nonzero = 0;
    for (Eigen::Index k = 0; k < v.size(); k++) {
        double p = std::norm(v(k));
        if (p > 0) {
            last_nonzero = k;
        }
        acc += p;
        if (u < acc) {
            return static_cast<uint64_t>(k);
        }
    }
    // Rounding left u beyond the accumulated total.
    return static_cast<uint64_t>(last_nonzero);
}

std::vector<uint8_t> unpack(uint64_t k, size_t n) {
    std::vector<uint8_t> bits(n);
    for (size_t q = 0; q < n; q++) {
        bits[q] = (k >> q) & 1;
    }
    return bits;
}

void check_bases(std::span<const Pauli> bases, size_t n) {
    if (bases.size() != n) {
        throw std::invalid_argument(
            "measure_in_bases: " + std::to_string(bases.size()) + " bases for " + std::to_string(n) + " qubits");
    }
    for (Pauli b : bases) {
        if (b == Pauli::I) {
            throw std::invalid_argument("measure_in_bases: basis letters must be X, Y or Z");
        }
    }
}

void rotate_into_basis(CliffordTableau &t, size_t q, Pauli basis) {
    if (basis == Pauli::X) {
        t.apply_h(q);
    } else if (basis == Pauli::Y) {
        t.apply_s_dag(q);
        t.apply_h(q);
    }
}

CVector singlet_vector() {
    CVector v = CVector::Zero(4);
    // index bit 0 is the first qubit of the pair.
    v(2) = 1.0 / std::sqrt(2.0);
    v(1) = -1.0 / std::sqrt(2.0);
    return v;
}

CVector ghz3_vector() {
    CVector v = CVector::Zero(8);
    v(0) = 1.0 / std::sqrt(2.0);
    v(7) = 1.0 / std::sqrt(2.0);
    return v;
}

}  // namespace

StateOracle StateOracle::stabilizer(StabilizerState state) {
    StateOracle o;
    o.kind_ = OracleKind::stabilizer;
    o.n_ = state.num_qubits();
    o.stabilizer_ = std::move(state);
    return o;
}

StateOracle StateOracle::dense(CVector amplitudes, size_t cap) {
    auto dim = static_cast<uint64_t>(amplitudes.size());
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("dense state: amplitude count must be a power of two");
    }
    size_t n = static_cast<size_t>(std::countr_zero(dim));
    require_dense(n, cap, "dense state");
    double norm_sq = amplitudes.squaredNorm();
    if (std::abs(norm_sq - 1.0) > 1e-10) {
        throw std::invalid_argument("dense state: amplitudes are not normalized (sum |a|^2 = " + std::to_string(norm_sq) + ")");
    }
    StateOracle o;
    o.kind_ = OracleKind::dense;
    o.n_ = n;
    o.cap_ = cap;
    o.amplitudes_ = std::move(amplitudes);
    return o;
}

StateOracle StateOracle::mixture(std::vector<std::pair<double, StateOracle>> components) {
    if (components.empty()) {
        throw std::invalid_argument("mixture: no components");
    }
    StateOracle o;
    o.kind_ = OracleKind::mixture;
    o.n_ = components.front().second.num_qubits();
    double total = 0;
    for (auto &[w, c] : components) {
        if (!(w >= 0)) {
            throw std::invalid_argument("mixture: negative probability");
        }
        if (c.num_qubits() != o.n_) {
            throw std::invalid_argument("mixture: components disagree on qubit count");
        }
        total += w;
        o.weights_.push_back(w);
        o.components_.push_back(std::move(c));
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw std::invalid_argument("mixture: probabilities sum to " + std::to_string(total));
    }
    return o;
}

StateOracle StateOracle::singlet_chain(size_t n, std::vector<std::pair<size_t, size_t>> pairing) {
    if (n == 0 || n % 2 != 0) {
        throw std::invalid_argument("singlet_chain: n must be even and positive");
    }
    std::vector<bool> used(n, false);
    if (pairing.size() != n / 2) {
        throw std::invalid_argument("singlet_chain: pairing is not a perfect matching");
    }
    std::vector<PackedPauli> gens;
    for (auto [a, b] : pairing) {
        if (a >= n || b >= n || a == b || used[a] || used[b]) {
            throw std::invalid_argument("singlet_chain: pairing is not a perfect matching");
        }
        used[a] = used[b] = true;
        PackedPauli xx(n);
        xx.set(a, Pauli::X);
        xx.set(b, Pauli::X);
        xx.sign = true;
        PackedPauli zz(n);
        zz.set(a, Pauli::Z);
        zz.set(b, Pauli::Z);
        zz.sign = true;
        gens.push_back(std::move(xx));
        gens.push_back(std::move(zz));
    }
    StateOracle o;
    o.kind_ = OracleKind::singlet_chain;
    o.n_ = n;
    o.stabilizer_ = StabilizerState::from_generators(gens);
    o.pairing_ = std::move(pairing);
    return o;
}

size_t StateOracle::sample_component(RngStream &rng) const {
    double u = rng.uniform();
    double acc = 0;
    for (size_t i = 0; i < weights_.size(); i++) {
        acc += weights_[i];
        if (u < acc) {
            return i;
        }
    }
    size_t last = weights_.size() - 1;
    while (last > 0 && weights_[last] == 0) {
        last--;
    }
    return last;
}

StateOracle noisy_ghz(size_t n, double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("noisy_ghz: p must lie in [0, 1]");
    }
    if (n < 2) {
        throw std::invalid_argument("noisy_ghz: n must be at least 2");
    }
    std::vector<std::pair<double, StateOracle>> parts;
    parts.emplace_back(1 - p, StateOracle::stabilizer(ghz_state(n, false)));
    parts.emplace_back(p, StateOracle::stabilizer(ghz_state(n, true)));
    return StateOracle::mixture(std::move(parts));
}

StateOracle singlet_chain(size_t n) {
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t q = 0; q + 1 < n; q += 2) {
        pairs.emplace_back(q, q + 1);
    }
    return StateOracle::singlet_chain(n, std::move(pairs));
}

std::vector<uint8_t> measure_in_bases(const StateOracle &state, std::span<const Pauli> bases, RngStream &rng) {
    size_t n = state.num_qubits();
    check_bases(bases, n);
    switch (state.kind()) {
        case OracleKind::stabilizer: {
            StabilizerState s = state.stabilizer_state();
            for (size_t q = 0; q < n; q++) {
                rotate_into_basis(s.tableau(), q, bases[q]);
            }
            return measure_all_z(std::move(s), rng);
        }
        case OracleKind::dense: {
            require_dense(n, state.dense_cap(), "measure_in_bases");
            CVector v = state.amplitudes();
            for (size_t q = 0; q < n; q++) {
                if (bases[q] != Pauli::Z) {
                    apply_single_qubit(v, q, basis_rotation(bases[q]));
                }
            }
            return unpack(sample_index(v, rng), n);
        }
        case OracleKind::mixture: {
            size_t c = state.sample_component(rng);
            return measure_in_bases(state.components()[c], bases, rng);
        }
        case OracleKind::singlet_chain: {
            std::vector<uint8_t> bits(n);
            const CVector singlet = singlet_vector();
            for (auto [a, b] : state.pairing()) {
                CVector v = singlet;
                apply_single_qubit(v, 0, basis_rotation(bases[a]));
                apply_single_qubit(v, 1, basis_rotation(bases[b]));
                uint64_t k = sample_index(v, rng);
                bits[a] = k & 1;
                bits[b] = (k >> 1) & 1;
            }
            return bits;
        }
    }
    throw std::logic_error("measure_in_bases: unknown oracle kind");
}

std::vector<uint8_t> measure_after_clifford(const StateOracle &state, const CliffordTableau &u, RngStream &rng) {
    size_t n = state.num_qubits();
    if (u.num_qubits() != n) {
        throw std::invalid_argument("measure_after_clifford: unitary size does not match the state");
    }
    switch (state.kind()) {
        case OracleKind::stabilizer:
        case OracleKind::singlet_chain:
            return measure_all_z(apply_clifford(state.stabilizer_state(), u), rng);
        case OracleKind::mixture: {
            size_t c = state.sample_component(rng);
            return measure_after_clifford(state.components()[c], u, rng);
        }
        case OracleKind::dense: {
            require_dense(n, state.dense_cap(), "measure_after_clifford");
            // Chain rule over the commuting projectors (I +- U^dag Z_q U) / 2.
            CliffordTableau inv = u.inverse();
            CVector v = state.amplitudes();
            std::vector<uint8_t> bits(n);
            for (size_t q = 0; q < n; q++) {
                CVector qv = apply_pauli(inv.z_image(q), v);
                CVector plus = 0.5 * (v + qv);
                double p0 = plus.squaredNorm();
                if (rng.uniform() < p0) {
                    bits[q] = 0;
                    v = plus / std::sqrt(p0);
                } else {
                    bits[q] = 1;
                    CVector minus = 0.5 * (v - qv);
                    v = minus / minus.norm();
                }
            }
            return bits;
        }
    }
    throw std::logic_error("measure_after_clifford: unknown oracle kind");
}

CMatrix density_matrix(const StateOracle &state, size_t cap) {
    size_t n = state.num_qubits();
    require_dense(n, cap, "density_matrix");
    switch (state.kind()) {
        case OracleKind::stabilizer:
        case OracleKind::singlet_chain: {
            CVector v = stabilizer_statevector(state.stabilizer_state(), cap);
            return v * v.adjoint();
        }
        case OracleKind::dense:
            return state.amplitudes() * state.amplitudes().adjoint();
        case OracleKind::mixture: {
            auto dim = static_cast<Eigen::Index>(size_t{1} << n);
            CMatrix rho = CMatrix::Zero(dim, dim);
            for (size_t i = 0; i < state.weights().size(); i++) {
                if (state.weights()[i] > 0) {
                    rho += state.weights()[i] * density_matrix(state.components()[i], cap);
                }
            }
            return rho;
        }
    }
    throw std::logic_error("density_matrix: unknown oracle kind");
}

void validate_witness(const WitnessSpec &w) {
    for (const auto &v : w.rotations) {
        if ((v.adjoint() * v - Matrix2::Identity()).cwiseAbs().maxCoeff() > 1e-10) {
            throw std::invalid_argument("witness rotation is not unitary");
        }
    }
}

CVector witness_vector(const WitnessSpec &w) {
    validate_witness(w);
    return kron_qubits(w.rotations) * ghz3_vector();
}

CMatrix witness_operator(const WitnessSpec &w) {
    CVector v = witness_vector(w);
    return v * v.adjoint();
}

double witness_value(const WitnessSpec &w, const StateOracle &state) {
    if (state.num_qubits() != 3) {
        throw std::invalid_argument("witness_value: witnesses act on three qubits");
    }
    CVector v = witness_vector(w);
    return (v.adjoint() * density_matrix(state) * v)(0, 0).real();
}

StateOracle rotated_ghz_state(const WitnessSpec &rotations) {
    CVector v = witness_vector(rotations);
    return StateOracle::dense(v / v.norm());
}

std::pair<StateOracle, WitnessSpec> rotated_ghz_witness(RngStream &rng) {
    WitnessSpec state_rot;
    for (auto &u : state_rot.rotations) {
        u = haar_unitary_2x2(rng);
    }
    WitnessSpec witness;
    for (auto &v : witness.rotations) {
        v = haar_unitary_2x2(rng);
    }
    return {rotated_ghz_state(state_rot), witness};
}

}  // namespace shadowkit
