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

#ifndef SHADOWKIT_DERANDOMIZER_H
#define SHADOWKIT_DERANDOMIZER_H

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "shadowkit/dataset.h"
#include "shadowkit/pauli.h"

namespace shadowkit {

/// nu = 1 - exp(-eps^2 / 2).
double derandomization_nu(double epsilon);
/// The epsilon that gives nu = 0.1, used when only a hit target is given.
double default_hit_target_epsilon();

/// Greedy state while a measurement row is being filled in. Row letters are
/// Pauli::I where still unassigned.
struct DerandState {
    std::vector<PauliString> observables;
    std::vector<size_t> hits;
    std::vector<Pauli> row;
    double nu = 0.1;
};

/// sum_j (1 - nu)^h_j g_j with g_j = 1 when O_j is broken by an assigned letter,
/// else 1 - nu 3^-u_j where u_j counts its unassigned support sites.
double cost(const DerandState &state);

/// Whether the completed row measures every non-identity site of p.
bool row_hits(std::span<const Pauli> row, const PauliString &p);

/// One greedy letter choice, reported before the choice is applied.
struct DerandStep {
    size_t row_index = 0;
    size_t qubit = 0;
    Pauli choice = Pauli::X;
    /// Cost of the state with the qubit set to X, Y and Z.
    std::array<double, 3> candidate_costs{};
    /// Cost with the qubit still unassigned.
    double before = 0;
};

struct DerandOptions {
    double epsilon = 0;
    /// Exactly one of the two stopping rules must be set.
    std::optional<size_t> budget;
    std::optional<size_t> hit_target;
    /// Safety cap on rows in hit-target mode.
    size_t max_rows = 1000000;
    /// Called with the pre-choice state for every letter choice.
    std::function<void(const DerandState &, const DerandStep &)> trace;
};

/// Builds rows one qubit at a time, each letter minimizing the cost with ties
/// broken X < Y < Z. Throws on empty or inconsistent observable lists, or when the
/// stopping rule is ill-specified.
MeasurementScheme derandomize(std::span<const PauliString> observables, const DerandOptions &opts);

/// Per-observable hit counts of a scheme (repetitions ignored).
std::vector<size_t> hit_counts(std::span<const PauliString> observables, const MeasurementScheme &scheme);
size_t min_hits(std::span<const PauliString> observables, const MeasurementScheme &scheme);

/// Number of uniformly random rows needed before every observable has been hit
/// `target` times. Rows come from RngStream(seed, "random-rows", i).
size_t random_rows_to_hit_target(
    std::span<const PauliString> observables, size_t target, uint64_t seed, size_t max_rows = 10000000);

/// Min hit count after `rows` uniformly random rows.
size_t random_rows_min_hits(std::span<const PauliString> observables, size_t rows, uint64_t seed);

/// The lattice Schwinger-model benchmark set on N sites (0-based qubits): the
/// anticommutator families XXYY, XXZZ, XXZ, YYZZ, YYZ with their window
/// constraints, plus the Hamiltonian's XX and YY neighbours, single Z and ZZ
/// pairs. Deduplicated and sorted. Throws for N < 4 or odd N.
std::vector<PauliString> schwinger_observables(size_t n_sites);

}  // namespace shadowkit

#endif
