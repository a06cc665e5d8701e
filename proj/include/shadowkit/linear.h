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

#ifndef SHADOWKIT_LINEAR_H
#define SHADOWKIT_LINEAR_H

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "shadowkit/dataset.h"
#include "shadowkit/dense.h"
#include "shadowkit/median.h"
#include "shadowkit/stabilizer.h"

namespace shadowkit {

/// Dense observable acting on the listed qubits; matrix bit j is qubits[j].
struct DenseObservable {
    std::vector<size_t> qubits;
    CMatrix matrix;
};

/// Targets O of tr(O rho): a Pauli sum, a stabilizer projector |psi><psi|, or a
/// small dense matrix.
using LinearTarget = std::variant<WeightedPauliSum, StabilizerState, DenseObservable>;

std::string_view target_kind_name(const LinearTarget &t);

/// tr(P rho_hat) for the product inverse 3 U^dag|b><b|U - I: 0 on any basis
/// mismatch, else 3^k prod (-1)^b over the support.
double snapshot_pauli_estimate(const PauliSnapshot &s, const PauliString &p);
double snapshot_pauli_estimate(const PauliSnapshot &s, const WeightedPauliSum &o);

/// tr(O rho_hat) for rho_hat = (2^n + 1) U^dag|b><b|U - I.
double snapshot_clifford_estimate(const CliffordSnapshot &s, const LinearTarget &target, size_t cap = kDefaultDenseCap);

/// Per-snapshot values of tr(O rho_hat_i), in snapshot order. Throws on a target
/// that the dataset kind cannot evaluate.
std::vector<double> snapshot_estimates(
    const ShadowDataset &ds, const LinearTarget &target, bool parallel = true, size_t cap = kDefaultDenseCap);

/// The inverted single-snapshot matrix restricted to `subsystem`
/// (tensor product of 3 U_q^dag|b_q><b_q|U_q - I).
CMatrix inverted_pauli_snapshot(const PauliSnapshot &s, std::span<const size_t> subsystem);
/// (2^n + 1) U^dag|b><b|U - I as a dense matrix.
CMatrix inverted_clifford_snapshot(const CliffordSnapshot &s, size_t cap = kDefaultDenseCap);
/// U^dag|b> as a stabilizer state.
StabilizerState snapshot_state(const CliffordSnapshot &s);

struct TargetEstimate {
    std::string id;
    std::string kind;
    double estimate = 0;
    size_t k = 0;
    size_t n_per_batch = 0;
    size_t shots_used = 0;
};

struct EstimationReport {
    DatasetHeader header;
    std::vector<TargetEstimate> rows;
};

/// Median of means over per-snapshot estimates, one row per target. `ids`
/// defaults to t0, t1, ...
EstimationReport predict_linear(
    const ShadowDataset &ds,
    std::span<const LinearTarget> targets,
    size_t k,
    std::span<const std::string> ids = {},
    bool parallel = true);

/// Entrywise median of means of the inverted snapshots on `subsystem`, real and
/// imaginary parts separately, then Hermitized and trace-normalized.
CMatrix reduced_density_matrix(
    const ShadowDataset &ds, std::span<const size_t> subsystem, size_t k, size_t cap = kDefaultDenseCap);

}  // namespace shadowkit

#endif
