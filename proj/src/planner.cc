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

#include "shadowkit/planner.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace shadowkit {

std::string_view bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::exact_3k:
            return "exact-3^k";
        case BoundKind::pauli_4k_dense:
            return "pauli-4^k";
        case BoundKind::pauli_4k_l1:
            return "pauli-4^k-l1";
        case BoundKind::clifford_hs:
            return "clifford-hs";
        case BoundKind::quadratic_pauli_4k:
            return "quadratic-pauli-4^k";
        case BoundKind::quadratic_clifford:
            return "quadratic-clifford";
    }
    return "unknown";
}

double operator_norm(const CMatrix &o) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (o + o.adjoint()), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

namespace {

/// Traceless part O - tr(O)/d I.
CMatrix traceless(const CMatrix &o) {
    auto d = o.rows();
    return o - (o.trace() / static_cast<double>(d)) * CMatrix::Identity(d, d);
}

/// Dense matrix of a Pauli sum restricted to its support, or an empty matrix when
/// the support exceeds cap.
CMatrix restricted_matrix(const WeightedPauliSum &o, size_t cap) {
    auto sup = o.support_indices();
    if (sup.size() > cap) {
        return {};
    }
    auto dim = static_cast<Eigen::Index>(size_t{1} << sup.size());
    CMatrix m = CMatrix::Zero(dim, dim);
    for (const auto &t : o.terms()) {
        PauliString r(sup.size());
        for (size_t j = 0; j < sup.size(); j++) {
            r.set(j, t.string[sup[j]]);
        }
        m += t.weight * pauli_matrix(r);
    }
    return m;
}

void check_eps_delta(double epsilon, double delta) {
    if (!(epsilon > 0 && epsilon <= 1)) {
        throw std::invalid_argument("epsilon must lie in (0, 1]");
    }
    if (!(delta > 0 && delta < 1)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
}

size_t batches_for(size_t m, double delta) {
    double k = std::ceil(2.0 * std::log(2.0 * static_cast<double>(m) / delta) - 1e-12);
    return static_cast<size_t>(std::max(1.0, k));
}

size_t ceil_shots(double x) {
    // Guard against 102.00000000000001 style round-up from floating arithmetic.
    double c = std::ceil(x - 1e-9 * std::max(1.0, x));
    return static_cast<size_t>(std::max(1.0, c));
}

}  // namespace

ShadowNormBound shadow_norm_bound(const LinearTarget &target, Primitive primitive, size_t system_qubits, size_t cap) {
    if (primitive == Primitive::pauli) {
        if (const auto *sum = std::get_if<WeightedPauliSum>(&target)) {
            // Identity terms do not contribute to the traceless part.
            std::vector<PauliTerm> nontrivial;
            for (const auto &t : sum->terms()) {
                if (support(t.string) > 0 && t.weight != 0) {
                    nontrivial.push_back(t);
                }
            }
            if (nontrivial.empty()) {
                return {0.0, BoundKind::exact_3k};
            }
            if (nontrivial.size() == 1) {
                double w = nontrivial[0].weight;
                return {w * w * std::pow(3.0, static_cast<double>(support(nontrivial[0].string))), BoundKind::exact_3k};
            }
            WeightedPauliSum o0(sum->num_qubits(), nontrivial);
            double k = static_cast<double>(o0.locality());
            CMatrix dense = restricted_matrix(o0, cap);
            if (dense.size() > 0) {
                double norm = operator_norm(dense);
                return {std::pow(4.0, k) * norm * norm, BoundKind::pauli_4k_dense};
            }
            double l1 = 0;
            for (const auto &t : nontrivial) {
                l1 += std::abs(t.weight);
            }
            return {std::pow(4.0, k) * l1 * l1, BoundKind::pauli_4k_l1};
        }
        if (const auto *dense = std::get_if<DenseObservable>(&target)) {
            double k = static_cast<double>(dense->qubits.size());
            double norm = operator_norm(traceless(dense->matrix));
            return {std::pow(4.0, k) * norm * norm, BoundKind::pauli_4k_dense};
        }
        throw std::invalid_argument("no shadow-norm bound for stabilizer targets under pauli measurements");
    }
    if (const auto *sum = std::get_if<WeightedPauliSum>(&target)) {
        double s = 0;
        for (const auto &t : sum->terms()) {
            if (support(t.string) > 0) {
                s += t.weight * t.weight;
            }
        }
        return {3.0 * std::ldexp(s, static_cast<int>(sum->num_qubits())), BoundKind::clifford_hs};
    }
    if (const auto *psi = std::get_if<StabilizerState>(&target)) {
        // tr(O_0^2) = tr(O^2) - tr(O)^2 / 2^n = 1 - 2^-n for a rank-one projector.
        double t = 1.0 - std::ldexp(1.0, -static_cast<int>(psi->num_qubits()));
        return {3.0 * t, BoundKind::clifford_hs};
    }
    const auto &dense = std::get<DenseObservable>(target);
    CMatrix o0 = traceless(dense.matrix);
    double hs = (o0 * o0).trace().real();
    // Padding with identities on the other n - k qubits scales tr(O_0^2) by 2^(n-k).
    size_t k = dense.qubits.size();
    size_t n = std::max(system_qubits, k);
    return {3.0 * std::ldexp(hs, static_cast<int>(n - k)), BoundKind::clifford_hs};
}

SamplePlan plan_linear(
    std::span<const LinearTarget> targets, double epsilon, double delta, Primitive primitive, size_t system_qubits) {
    check_eps_delta(epsilon, delta);
    if (targets.empty()) {
        throw std::invalid_argument("plan_linear: no targets");
    }
    SamplePlan plan;
    plan.epsilon = epsilon;
    plan.delta = delta;
    plan.m = targets.size();
    plan.k = batches_for(plan.m, delta);
    for (const auto &t : targets) {
        ShadowNormBound b = shadow_norm_bound(t, primitive, system_qubits);
        if (plan.bounds.empty() || b.value > plan.max_bound) {
            plan.max_bound = b.value;
            plan.bound_kind = b.kind;
        }
        plan.bounds.push_back(b);
    }
    plan.n_per_batch = ceil_shots(34.0 / (epsilon * epsilon) * plan.max_bound);
    plan.n_total = plan.k * plan.n_per_batch;
    return plan;
}

SamplePlan plan_quadratic(std::span<const QuadraticTarget> targets, double epsilon, double delta, Primitive primitive) {
    check_eps_delta(epsilon, delta);
    if (targets.empty()) {
        throw std::invalid_argument("plan_quadratic: no targets");
    }
    SamplePlan plan;
    plan.epsilon = epsilon;
    plan.delta = delta;
    plan.m = targets.size();
    plan.k = batches_for(plan.m, delta);
    for (const auto &t : targets) {
        ShadowNormBound b;
        if (primitive == Primitive::pauli) {
            b = {std::pow(4.0, static_cast<double>(t.locality)) * t.op_norm * t.op_norm, BoundKind::quadratic_pauli_4k};
        } else {
            double coefficient = std::sqrt(9.0 + 6.0 * std::ldexp(1.0, -static_cast<int>(t.num_qubits)));
            b = {coefficient * t.hs_norm_sq, BoundKind::quadratic_clifford};
        }
        if (plan.bounds.empty() || b.value > plan.max_bound) {
            plan.max_bound = b.value;
            plan.bound_kind = b.kind;
        }
        plan.bounds.push_back(b);
    }
    plan.n_per_batch = ceil_shots(34.0 / (epsilon * epsilon) * 8.0 * plan.max_bound);
    plan.n_total = plan.k * plan.n_per_batch;
    return plan;
}

double exact_clifford_shadow_norm(const CMatrix &o, size_t cap) {
    auto dim = static_cast<uint64_t>(o.rows());
    if (o.rows() != o.cols() || dim == 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("exact_clifford_shadow_norm: matrix must be square with power-of-two size");
    }
    size_t n = static_cast<size_t>(std::countr_zero(dim));
    require_dense(n, cap, "exact_clifford_shadow_norm");
    CMatrix o0 = traceless(o);
    double hs = (o0 * o0).trace().real();
    double op = operator_norm(o0);
    double d = static_cast<double>(dim);
    return (d + 1.0) / (d + 2.0) * (hs + 2.0 * op * op);
}

}  // namespace shadowkit
