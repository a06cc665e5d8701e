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

#include "shadowkit/linear.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "parallel.h"

namespace shadowkit {

namespace {

void validate_dense_observable(const DenseObservable &o, size_t n) {
    size_t k = o.qubits.size();
    if (k == 0) {
        throw std::invalid_argument("dense observable acts on no qubits");
    }
    std::vector<bool> seen(n, false);
    for (size_t q : o.qubits) {
        if (q >= n) {
            throw std::invalid_argument("dense observable qubit " + std::to_string(q) + " out of range");
        }
        if (seen[q]) {
            throw std::invalid_argument("dense observable lists qubit " + std::to_string(q) + " twice");
        }
        seen[q] = true;
    }
    auto dim = static_cast<Eigen::Index>(size_t{1} << k);
    if (o.matrix.rows() != dim || o.matrix.cols() != dim) {
        throw std::invalid_argument("dense observable matrix size does not match its qubit list");
    }
}

void validate_subsystem(std::span<const size_t> subsystem, size_t n) {
    std::vector<bool> seen(n, false);
    for (size_t q : subsystem) {
        if (q >= n) {
            throw std::invalid_argument(
                "subsystem index " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
        }
        if (seen[q]) {
            throw std::invalid_argument("subsystem lists qubit " + std::to_string(q) + " twice");
        }
        seen[q] = true;
    }
}

uint64_t scatter(uint64_t compact, std::span<const size_t> qubits) {
    uint64_t out = 0;
    for (size_t j = 0; j < qubits.size(); j++) {
        out |= ((compact >> j) & 1) << qubits[j];
    }
    return out;
}

/// <phi| O_Q (x) I |phi>.
double dense_expectation(const CVector &phi, size_t n, const DenseObservable &o) {
    size_t k = o.qubits.size();
    uint64_t qmask = scatter((uint64_t{1} << k) - 1, o.qubits);
    size_t dim_k = size_t{1} << k;
    std::vector<uint64_t> offsets(dim_k);
    for (size_t r = 0; r < dim_k; r++) {
        offsets[r] = scatter(r, o.qubits);
    }
    std::complex<double> total = 0;
    for (uint64_t base = 0; base < (uint64_t{1} << n); base++) {
        if (base & qmask) {
            continue;
        }
        for (size_t r = 0; r < dim_k; r++) {
            std::complex<double> row = 0;
            for (size_t c = 0; c < dim_k; c++) {
                row += o.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *
                       phi(static_cast<Eigen::Index>(base | offsets[c]));
            }
            total += std::conj(phi(static_cast<Eigen::Index>(base | offsets[r]))) * row;
        }
    }
    return total.real();
}

Matrix2 inverted_factor(Pauli basis, uint8_t bit) {
    return 3.0 * basis_projector(basis, bit) - Matrix2::Identity();
}

}  // namespace

std::string_view target_kind_name(const LinearTarget &t) {
    switch (t.index()) {
        case 0:
            return "pauli-sum";
        case 1:
            return "stabilizer";
        default:
            return "dense";
    }
}

double snapshot_pauli_estimate(const PauliSnapshot &s, const PauliString &p) {
    if (p.size() != s.bases.size()) {
        throw std::invalid_argument("snapshot_pauli_estimate: length mismatch");
    }
    double v = 1;
    for (size_t q = 0; q < p.size(); q++) {
        Pauli l = p[q];
        if (l == Pauli::I) {
            continue;
        }
        if (l != s.bases[q]) {
            return 0;
        }
        v *= s.bits[q] ? -3.0 : 3.0;
    }
    return v;
}

double snapshot_pauli_estimate(const PauliSnapshot &s, const WeightedPauliSum &o) {
    double total = 0;
    for (const auto &t : o.terms()) {
        total += t.weight * snapshot_pauli_estimate(s, t.string);
    }
    return total;
}

StabilizerState snapshot_state(const CliffordSnapshot &s) {
    size_t n = s.unitary.num_qubits();
    CliffordTableau flips(n);
    for (size_t q = 0; q < n; q++) {
        if (s.bits[q]) {
            flips.apply_x(q);
        }
    }
    return StabilizerState(flips.then(s.unitary.inverse()));
}

double snapshot_clifford_estimate(const CliffordSnapshot &s, const LinearTarget &target, size_t cap) {
    size_t n = s.unitary.num_qubits();
    double dim_plus_one = std::ldexp(1.0, static_cast<int>(n)) + 1.0;
    if (const auto *sum = std::get_if<WeightedPauliSum>(&target)) {
        if (sum->num_qubits() != n) {
            throw std::invalid_argument("pauli-sum target size does not match the dataset");
        }
        double total = 0;
        for (const auto &t : sum->terms()) {
            if (support(t.string) == 0) {
                // (2^n + 1) * 1 - tr(I).
                total += t.weight;
                continue;
            }
            // <b| U P U^dag |b> is zero unless U P U^dag is diagonal.
            PackedPauli c = s.unitary.conjugate(PackedPauli::from_string(t.string));
            bool diagonal = true;
            for (uint64_t w : c.xs) {
                diagonal = diagonal && w == 0;
            }
            if (!diagonal) {
                continue;
            }
            bool negative = c.sign;
            for (size_t q = 0; q < n; q++) {
                if (s.bits[q] && c.z(q)) {
                    negative = !negative;
                }
            }
            total += t.weight * dim_plus_one * (negative ? -1.0 : 1.0);
        }
        return total;
    }
    if (const auto *psi = std::get_if<StabilizerState>(&target)) {
        if (psi->num_qubits() != n) {
            throw std::invalid_argument("stabilizer target size does not match the dataset");
        }
        // |<psi| U^dag |b>|^2 = |<b| U |psi>|^2.
        double overlap = outcome_probability(apply_clifford(*psi, s.unitary), s.bits);
        return dim_plus_one * overlap - 1.0;
    }
    const auto &dense = std::get<DenseObservable>(target);
    require_dense(n, cap, "dense target on a clifford snapshot");
    validate_dense_observable(dense, n);
    CVector phi = stabilizer_statevector(snapshot_state(s), cap);
    double trace = dense.matrix.trace().real() * std::ldexp(1.0, static_cast<int>(n - dense.qubits.size()));
    return dim_plus_one * dense_expectation(phi, n, dense) - trace;
}

CMatrix inverted_pauli_snapshot(const PauliSnapshot &s, std::span<const size_t> subsystem) {
    std::vector<Matrix2> factors;
    factors.reserve(subsystem.size());
    for (size_t q : subsystem) {
        factors.push_back(inverted_factor(s.bases[q], s.bits[q]));
    }
    return kron_qubits(factors);
}

CMatrix inverted_clifford_snapshot(const CliffordSnapshot &s, size_t cap) {
    size_t n = s.unitary.num_qubits();
    require_dense(n, cap, "inverted_clifford_snapshot");
    CVector phi = stabilizer_statevector(snapshot_state(s), cap);
    auto dim = static_cast<Eigen::Index>(size_t{1} << n);
    return (static_cast<double>(dim) + 1.0) * (phi * phi.adjoint()) - CMatrix::Identity(dim, dim);
}

std::vector<double> snapshot_estimates(const ShadowDataset &ds, const LinearTarget &target, bool parallel, size_t cap) {
    size_t n = ds.header.num_qubits;
    std::vector<double> out(ds.size());
    if (ds.header.kind == Primitive::pauli) {
        if (const auto *sum = std::get_if<WeightedPauliSum>(&target)) {
            if (sum->num_qubits() != n) {
                throw std::invalid_argument("pauli-sum target size does not match the dataset");
            }
            internal::for_each_index(out.size(), parallel, [&](size_t i) {
                out[i] = snapshot_pauli_estimate(ds.pauli[i], *sum);
            });
            return out;
        }
        if (const auto *dense = std::get_if<DenseObservable>(&target)) {
            validate_dense_observable(*dense, n);
            require_dense(dense->qubits.size(), cap, "dense target");
            internal::for_each_index(out.size(), parallel, [&](size_t i) {
                CMatrix rho_hat = inverted_pauli_snapshot(ds.pauli[i], dense->qubits);
                out[i] = (dense->matrix * rho_hat).trace().real();
            });
            return out;
        }
        throw std::invalid_argument("stabilizer-state targets require a clifford dataset");
    }
    internal::for_each_index(out.size(), parallel, [&](size_t i) {
        out[i] = snapshot_clifford_estimate(ds.clifford[i], target, cap);
    });
    return out;
}

EstimationReport predict_linear(
    const ShadowDataset &ds, std::span<const LinearTarget> targets, size_t k, std::span<const std::string> ids, bool parallel) {
    if (!ids.empty() && ids.size() != targets.size()) {
        throw std::invalid_argument("predict_linear: one id per target required");
    }
    if (k == 0 || ds.size() < k) {
        throw std::invalid_argument(
            "predict_linear: " + std::to_string(ds.size()) + " snapshots cannot fill K=" + std::to_string(k) + " batches");
    }
    EstimationReport report;
    report.header = ds.header;
    for (size_t i = 0; i < targets.size(); i++) {
        std::vector<double> values = snapshot_estimates(ds, targets[i], parallel);
        TargetEstimate row;
        row.id = ids.empty() ? "t" + std::to_string(i) : ids[i];
        row.kind = std::string(target_kind_name(targets[i]));
        row.estimate = median_of_means(values, k);
        row.k = k;
        row.n_per_batch = values.size() / k;
        row.shots_used = row.k * row.n_per_batch;
        report.rows.push_back(std::move(row));
    }
    return report;
}

CMatrix reduced_density_matrix(const ShadowDataset &ds, std::span<const size_t> subsystem, size_t k, size_t cap) {
    if (ds.header.kind != Primitive::pauli) {
        throw std::invalid_argument("reduced_density_matrix: pauli dataset required");
    }
    validate_subsystem(subsystem, ds.header.num_qubits);
    require_dense(subsystem.size(), cap, "reduced_density_matrix");
    if (subsystem.empty()) {
        throw std::invalid_argument("reduced_density_matrix: empty subsystem");
    }
    if (k == 0 || ds.size() < k) {
        throw std::invalid_argument("reduced_density_matrix: not enough snapshots for K batches");
    }
    size_t per = ds.size() / k;
    auto dim = static_cast<Eigen::Index>(size_t{1} << subsystem.size());
    std::vector<CMatrix> means(k);
    internal::for_each_index(k, true, [&](size_t b) {
        CMatrix acc = CMatrix::Zero(dim, dim);
        for (size_t i = b * per; i < (b + 1) * per; i++) {
            acc += inverted_pauli_snapshot(ds.pauli[i], subsystem);
        }
        means[b] = acc / static_cast<double>(per);
    });
    CMatrix out(dim, dim);
    std::vector<double> re(k);
    std::vector<double> im(k);
    for (Eigen::Index r = 0; r < dim; r++) {
        for (Eigen::Index c = 0; c < dim; c++) {
            for (size_t b = 0; b < k; b++) {
                re[b] = means[b](r, c).real();
                im[b] = means[b](r, c).imag();
            }
            out(r, c) = std::complex<double>(median(re), median(im));
        }
    }
    CMatrix herm = 0.5 * (out + out.adjoint());
    double tr = herm.trace().real();
    if (std::abs(tr) < 1e-300) {
        throw std::runtime_error("reduced_density_matrix: median estimate has zero trace");
    }
    return herm / tr;
}

}  // namespace shadowkit
