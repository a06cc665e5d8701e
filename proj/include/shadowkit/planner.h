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

#ifndef SHADOWKIT_PLANNER_H
#define SHADOWKIT_PLANNER_H

#include <span>
#include <string_view>
#include <vector>

#include "shadowkit/dataset.h"
#include "shadowkit/linear.h"

namespace shadowkit {

enum class BoundKind {
    /// 3^k, exact for a single Pauli string under Pauli measurements.
    exact_3k,
    /// 4^k ||O||_inf^2 with ||O||_inf evaluated densely.
    pauli_4k_dense,
    /// 4^k (sum |w|)^2, used when the dense norm is unavailable.
    pauli_4k_l1,
    /// 3 tr(O_0^2) for Clifford measurements.
    clifford_hs,
    /// 4^k ||O||_inf^2 for a two-copy observable under Pauli measurements.
    quadratic_pauli_4k,
    /// sqrt(9 + 6/2^n) tr(O^2) for a two-copy observable under Clifford measurements.
    quadratic_clifford,
};

std::string_view bound_kind_name(BoundKind k);

struct ShadowNormBound {
    double value = 0;
    BoundKind kind = BoundKind::exact_3k;
};

/// Upper bound on the squared shadow norm of the traceless part of a target.
/// `system_qubits` is the total qubit count, needed for dense targets under
/// Clifford measurements (0 means the target's own qubits). Pauli sums whose
/// support is at most `cap` get a dense operator norm, larger ones sum |w|.
/// Throws for stabilizer projectors under Pauli measurements.
ShadowNormBound shadow_norm_bound(
    const LinearTarget &target, Primitive primitive, size_t system_qubits = 0, size_t cap = 10);

struct SamplePlan {
    size_t k = 0;
    size_t n_per_batch = 0;
    size_t n_total = 0;
    double max_bound = 0;
    BoundKind bound_kind = BoundKind::exact_3k;
    std::vector<ShadowNormBound> bounds;
    double epsilon = 0;
    double delta = 0;
    size_t m = 0;
};

/// K = ceil(2 ln(2M / delta)), N = ceil(34 / eps^2 * max bound).
SamplePlan plan_linear(
    std::span<const LinearTarget> targets, double epsilon, double delta, Primitive primitive, size_t system_qubits = 0);

/// A two-copy target for plan_quadratic: the observable's per-copy locality k and
/// operator norm for Pauli measurements, or its Hilbert-Schmidt norm tr(O^2) and
/// per-copy qubit count for Clifford measurements.
struct QuadraticTarget {
    size_t locality = 0;
    double op_norm = 1;
    double hs_norm_sq = 0;
    size_t num_qubits = 0;
};

/// K as in plan_linear; N = ceil(34 / eps^2 * 8 * max bound).
SamplePlan plan_quadratic(std::span<const QuadraticTarget> targets, double epsilon, double delta, Primitive primitive);

/// ((2^n + 1) / (2^n + 2)) (tr(O_0^2) + 2 ||O_0||_inf^2) for a dense n-qubit O.
double exact_clifford_shadow_norm(const CMatrix &o, size_t cap = kDefaultDenseCap);

/// Largest absolute eigenvalue of a Hermitian matrix.
double operator_norm(const CMatrix &o);

}  // namespace shadowkit

#endif
