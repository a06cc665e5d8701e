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

#ifndef SHADOWKIT_NONLINEAR_H
#define SHADOWKIT_NONLINEAR_H

#include <span>
#include <vector>

#include "shadowkit/dataset.h"
#include "shadowkit/dense.h"

namespace shadowkit {

/// tr(rho_hat_1,A rho_hat_2,A) for two Pauli snapshots: the product over q in A of
/// 5 (same basis, same bit), -4 (same basis, different bit) or 1/2 (different basis).
double pair_purity_factor(const PauliSnapshot &s1, const PauliSnapshot &s2, std::span<const size_t> subsystem);

/// Mean of pair_purity_factor over all ordered pairs i != j of the batch, in
/// O(N 2^|A|) time via Pauli-coefficient sums. Throws for batches smaller than 2.
double purity_u_statistic(std::span<const PauliSnapshot> batch, std::span<const size_t> subsystem);
/// The same mean by the direct O(N^2 |A|) double loop. Reference implementation.
double purity_u_statistic_naive(std::span<const PauliSnapshot> batch, std::span<const size_t> subsystem);

/// Median over K batches of the within-batch purity U-statistic.
double estimate_purity(const ShadowDataset &ds, std::span<const size_t> subsystem, size_t k, bool parallel = true);

/// -log2 of the purity after clamping it to [2^-|A|, 1].
double renyi2_entropy(double purity, size_t subsystem_size);

struct EntropyRow {
    std::vector<size_t> subsystem;
    double purity = 0;
    double entropy_bits = 0;
    size_t k = 0;
    size_t n = 0;
};

std::vector<EntropyRow> estimate_entropies(
    const ShadowDataset &ds, std::span<const std::vector<size_t>> subsystems, size_t k, bool parallel = true);

/// Two-copy swap operator on 2n qubits; copy 1 occupies the low n index bits.
CMatrix swap_operator(size_t n);

/// Median over K batches of the U-statistic of tr(O rho_hat_i (x) rho_hat_j) with
/// dense inverted Clifford snapshots. O acts on two copies (dimension 4^n, copy 1
/// in the low index bits).
double estimate_quadratic_clifford(const ShadowDataset &ds, const CMatrix &o, size_t k, size_t cap = kDefaultDenseCap);
/// Direct pair loop over one batch. Reference implementation.
double quadratic_u_statistic_naive(std::span<const CMatrix> inverted, const CMatrix &o);

/// Repeated-measurement purity estimator: per scheme group,
/// 2^|A| sum_{s,s'} (-2)^{-H(s,s')} [n(s) n(s') - delta_{s,s'} n(s)] / (N_M (N_M - 1)),
/// averaged over groups. Requires a group-tagged Pauli dataset.
double brydges_purity(const ShadowDataset &ds, std::span<const size_t> subsystem);

}  // namespace shadowkit

#endif
