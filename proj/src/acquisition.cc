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

#include "shadowkit/acquisition.h"

#include <stdexcept>

#include "parallel.h"
#include "shadowkit/clifford_sampler.h"

namespace shadowkit {

std::string_view primitive_name(Primitive p) {
    return p == Primitive::pauli ? "pauli" : "clifford";
}

Primitive parse_primitive(std::string_view text) {
    if (text == "pauli") {
        return Primitive::pauli;
    }
    if (text == "clifford") {
        return Primitive::clifford;
    }
    throw std::invalid_argument("unknown primitive '" + std::string(text) + "' (expected pauli or clifford)");
}

bool ShadowDataset::grouped() const {
    if (header.kind != Primitive::pauli || pauli.empty()) {
        return false;
    }
    for (const auto &s : pauli) {
        if (s.group < 0) {
            return false;
        }
    }
    return true;
}

namespace {

DatasetHeader make_header(Primitive kind, const StateOracle &state, uint64_t seed, const AcquireOptions &opts) {
    DatasetHeader h;
    h.kind = kind;
    h.num_qubits = state.num_qubits();
    h.seed = seed;
    h.state = opts.state_descriptor;
    return h;
}

}  // namespace

ShadowDataset acquire_pauli(const StateOracle &state, size_t shots, uint64_t seed, const AcquireOptions &opts) {
    if (shots == 0) {
        throw std::invalid_argument("acquire_pauli: need at least one shot");
    }
    size_t n = state.num_qubits();
    ShadowDataset ds;
    ds.header = make_header(Primitive::pauli, state, seed, opts);
    ds.pauli.resize(shots);
    internal::for_each_index(shots, opts.parallel, [&](size_t shot) {
        RngStream basis_rng(seed, kBasisStream, shot);
        PauliSnapshot &s = ds.pauli[shot];
        s.bases.resize(n);
        for (size_t q = 0; q < n; q++) {
            s.bases[q] = kMeasurementBases[basis_rng.below(3)];
        }
        RngStream outcome_rng(seed, kOutcomeStream, shot);
        s.bits = measure_in_bases(state, s.bases, outcome_rng);
    });
    return ds;
}

ShadowDataset acquire_clifford(const StateOracle &state, size_t shots, uint64_t seed, const AcquireOptions &opts) {
    if (shots == 0) {
        throw std::invalid_argument("acquire_clifford: need at least one shot");
    }
    size_t n = state.num_qubits();
    ShadowDataset ds;
    ds.header = make_header(Primitive::clifford, state, seed, opts);
    ds.clifford.resize(shots);
    internal::for_each_index(shots, opts.parallel, [&](size_t shot) {
        CliffordSnapshot &s = ds.clifford[shot];
        if (opts.clifford_override) {
            s.unitary = opts.clifford_override(shot, n);
        } else {
            RngStream unitary_rng(seed, kCliffordStream, shot);
            s.unitary = random_clifford(n, unitary_rng);
        }
        RngStream outcome_rng(seed, kOutcomeStream, shot);
        s.bits = measure_after_clifford(state, s.unitary, outcome_rng);
    });
    return ds;
}

ShadowDataset acquire_scheme(
    const StateOracle &state, const MeasurementScheme &scheme, uint64_t seed, const AcquireOptions &opts) {
    size_t n = state.num_qubits();
    if (scheme.rows.empty()) {
        throw std::invalid_argument("acquire_scheme: scheme has no rows");
    }
    if (scheme.repetitions == 0) {
        throw std::invalid_argument("acquire_scheme: repetitions must be at least 1");
    }
    for (size_t r = 0; r < scheme.rows.size(); r++) {
        if (scheme.rows[r].size() != n) {
            throw std::invalid_argument(
                "acquire_scheme: row " + std::to_string(r) + " has " + std::to_string(scheme.rows[r].size()) +
                " letters, state has " + std::to_string(n) + " qubits");
        }
    }
    size_t reps = scheme.repetitions;
    size_t total = scheme.rows.size() * reps;
    ShadowDataset ds;
    ds.header = make_header(Primitive::pauli, state, seed, opts);
    ds.pauli.resize(total);
    internal::for_each_index(total, opts.parallel, [&](size_t i) {
        size_t row = i / reps;
        PauliSnapshot &s = ds.pauli[i];
        s.bases = scheme.rows[row];
        s.group = static_cast<int64_t>(row);
        RngStream outcome_rng(seed, kOutcomeStream, i);
        s.bits = measure_in_bases(state, s.bases, outcome_rng);
    });
    return ds;
}

MeasurementScheme random_scheme(size_t n, size_t rows, size_t repetitions, uint64_t seed) {
    if (n == 0 || rows == 0 || repetitions == 0) {
        throw std::invalid_argument("random_scheme: n, rows and repetitions must be positive");
    }
    MeasurementScheme scheme;
    scheme.num_qubits = n;
    scheme.repetitions = repetitions;
    scheme.rows.resize(rows);
    for (size_t r = 0; r < rows; r++) {
        RngStream rng(seed, kSchemeStream, r);
        scheme.rows[r].resize(n);
        for (size_t q = 0; q < n; q++) {
            scheme.rows[r][q] = kMeasurementBases[rng.below(3)];
        }
    }
    return scheme;
}

}  // namespace shadowkit
