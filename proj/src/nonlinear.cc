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

#include "shadowkit/nonlinear.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "parallel.h"
#include "shadowkit/linear.h"
#include "shadowkit/median.h"

namespace shadowkit {

namespace {

// Above this subsystem size the Pauli-coefficient sums live in a hash map instead
// of a dense 4^|A| array.
constexpr size_t kDenseAccumulatorLimit = 10;

void check_subsystem(std::span<const size_t> subsystem, size_t n) {
    if (subsystem.empty()) {
        throw std::invalid_argument("subsystem is empty");
    }
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
    if (subsystem.size() > 31) {
        throw std::invalid_argument("subsystem too large for the purity accumulator");
    }
}

}  // namespace

double pair_purity_factor(const PauliSnapshot &s1, const PauliSnapshot &s2, std::span<const size_t> subsystem) {
    double v = 1;
    for (size_t q : subsystem) {
        if (s1.bases[q] != s2.bases[q]) {
            v *= 0.5;
        } else if (s1.bits[q] == s2.bits[q]) {
            v *= 5;
        } else {
            v *= -4;
        }
    }
    return v;
}

double purity_u_statistic_naive(std::span<const PauliSnapshot> batch, std::span<const size_t> subsystem) {
    size_t n = batch.size();
    if (n < 2) {
        throw std::invalid_argument("purity U-statistic needs a batch of at least 2 snapshots");
    }
    double total = 0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (i != j) {
                total += pair_purity_factor(batch[i], batch[j], subsystem);
            }
        }
    }
    return total / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double purity_u_statistic(std::span<const PauliSnapshot> batch, std::span<const size_t> subsystem) {
    size_t n = batch.size();
    if (n < 2) {
        throw std::invalid_argument("purity U-statistic needs a batch of at least 2 snapshots");
    }
    size_t a = subsystem.size();
    // rho_hat_A = 2^-|A| sum_P c(P) P with per-qubit coefficient 1 on I and
    // 3 (-1)^b on the measured basis letter, so
    // sum_{i != j} tr(rho_hat_i rho_hat_j) = 2^-|A| sum_P (S_P^2 - Q_P).
    // Strings are indexed base 4 (0 = I, 1..3 = X, Y, Z) over the subsystem.
    size_t subsets = size_t{1} << a;
    std::vector<uint64_t> letter_digit(a);
    std::vector<double> coeff(a);
    auto accumulate = [&](auto &sums, auto &squares) {
        for (const auto &s : batch) {
            for (size_t j = 0; j < a; j++) {
                size_t q = subsystem[j];
                letter_digit[j] = static_cast<uint64_t>(s.bases[q]);
                coeff[j] = s.bits[q] ? -3.0 : 3.0;
            }
            for (size_t mask = 0; mask < subsets; mask++) {
                uint64_t index = 0;
                double c = 1;
                for (size_t j = 0; j < a; j++) {
                    if ((mask >> j) & 1) {
                        index |= letter_digit[j] << (2 * j);
                        c *= coeff[j];
                    }
                }
                sums[index] += c;
                squares[index] += c * c;
            }
        }
    };
    double total = 0;
    if (a <= kDenseAccumulatorLimit) {
        std::vector<double> sums(size_t{1} << (2 * a), 0.0);
        std::vector<double> squares(sums.size(), 0.0);
        accumulate(sums, squares);
        for (size_t p = 0; p < sums.size(); p++) {
            total += sums[p] * sums[p] - squares[p];
        }
    } else {
        std::unordered_map<uint64_t, double> sums;
        std::unordered_map<uint64_t, double> squares;
        accumulate(sums, squares);
        // Sum in key order so the result does not depend on hash iteration order.
        std::map<uint64_t, double> ordered(sums.begin(), sums.end());
        for (const auto &[p, s] : ordered) {
            total += s * s - squares[p];
        }
    }
    return std::ldexp(total, -static_cast<int>(a)) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double estimate_purity(const ShadowDataset &ds, std::span<const size_t> subsystem, size_t k, bool parallel) {
    if (ds.header.kind != Primitive::pauli) {
        throw std::invalid_argument("pauli dataset required");
    }
    check_subsystem(subsystem, ds.header.num_qubits);
    if (k == 0) {
        throw std::invalid_argument("estimate_purity: K must be at least 1");
    }
    size_t per = ds.size() / k;
    if (per < 2) {
        throw std::invalid_argument(
            "estimate_purity: " + std::to_string(ds.size()) + " snapshots give fewer than 2 per batch at K=" +
            std::to_string(k));
    }
    std::vector<double> stats(k);
    std::span<const PauliSnapshot> all(ds.pauli);
    internal::for_each_index(k, parallel, [&](size_t b) {
        stats[b] = purity_u_statistic(all.subspan(b * per, per), subsystem);
    });
    return median(stats);
}

double renyi2_entropy(double purity, size_t subsystem_size) {
    double lo = std::ldexp(1.0, -static_cast<int>(subsystem_size));
    double p = std::clamp(purity, lo, 1.0);
    return -std::log2(p);
}

std::vector<EntropyRow> estimate_entropies(
    const ShadowDataset &ds, std::span<const std::vector<size_t>> subsystems, size_t k, bool parallel) {
    std::vector<EntropyRow> rows;
    for (const auto &a : subsystems) {
        EntropyRow row;
        row.subsystem = a;
        row.purity = estimate_purity(ds, a, k, parallel);
        row.entropy_bits = renyi2_entropy(row.purity, a.size());
        row.k = k;
        row.n = ds.size();
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix swap_operator(size_t n) {
    size_t d = size_t{1} << n;
    auto dim = static_cast<Eigen::Index>(d * d);
    CMatrix s = CMatrix::Zero(dim, dim);
    for (size_t i1 = 0; i1 < d; i1++) {
        for (size_t i2 = 0; i2 < d; i2++) {
            s(static_cast<Eigen::Index>(i2 + d * i1), static_cast<Eigen::Index>(i1 + d * i2)) = 1;
        }
    }
    return s;
}

namespace {

/// T[a2, c2] = sum_{a1, c1} O[(a1, a2), (c1, c2)] A[c1, a1], so that
/// tr(O (A (x) B)) = tr(T B).
CMatrix contract_first_copy(const CMatrix &o, const CMatrix &a) {
    Eigen::Index d = a.rows();
    CMatrix t = CMatrix::Zero(d, d);
    for (Eigen::Index a2 = 0; a2 < d; a2++) {
        for (Eigen::Index c2 = 0; c2 < d; c2++) {
            std::complex<double> v = 0;
            for (Eigen::Index a1 = 0; a1 < d; a1++) {
                for (Eigen::Index c1 = 0; c1 < d; c1++) {
                    v += o(a1 + d * a2, c1 + d * c2) * a(c1, a1);
                }
            }
            t(a2, c2) = v;
        }
    }
    return t;
}

}  // namespace

double quadratic_u_statistic_naive(std::span<const CMatrix> inverted, const CMatrix &o) {
    size_t n = inverted.size();
    if (n < 2) {
        throw std::invalid_argument("quadratic U-statistic needs a batch of at least 2 snapshots");
    }
    double total = 0;
    for (size_t i = 0; i < n; i++) {
        CMatrix t = contract_first_copy(o, inverted[i]);
        for (size_t j = 0; j < n; j++) {
            if (i != j) {
                total += (t * inverted[j]).trace().real();
            }
        }
    }
    return total / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double estimate_quadratic_clifford(const ShadowDataset &ds, const CMatrix &o, size_t k, size_t cap) {
    if (ds.header.kind != Primitive::clifford) {
        throw std::invalid_argument("clifford dataset required");
    }
    size_t n = ds.header.num_qubits;
    require_dense(n, cap, "estimate_quadratic_clifford");
    auto d = static_cast<Eigen::Index>(size_t{1} << n);
    if (o.rows() != d * d || o.cols() != d * d) {
        throw std::invalid_argument("two-copy observable must have dimension 4^n");
    }
    if (k == 0 || ds.size() / k < 2) {
        throw std::invalid_argument("estimate_quadratic_clifford: fewer than 2 snapshots per batch");
    }
    size_t per = ds.size() / k;
    std::vector<double> stats(k);
    internal::for_each_index(k, true, [&](size_t b) {
        // The kernel is bilinear, so sum_{i != j} tr(T_i R_j) =
        // tr((sum_i T_i)(sum_j R_j)) - sum_i tr(T_i R_i).
        CMatrix t_sum = CMatrix::Zero(d, d);
        CMatrix r_sum = CMatrix::Zero(d, d);
        double diagonal = 0;
        for (size_t i = b * per; i < (b + 1) * per; i++) {
            CMatrix r = inverted_clifford_snapshot(ds.clifford[i], cap);
            CMatrix t = contract_first_copy(o, r);
            diagonal += (t * r).trace().real();
            t_sum += t;
            r_sum += r;
        }
        double pairs = (t_sum * r_sum).trace().real() - diagonal;
        stats[b] = pairs / (static_cast<double>(per) * static_cast<double>(per - 1));
    });
    return median(stats);
}

double brydges_purity(const ShadowDataset &ds, std::span<const size_t> subsystem) {
    if (ds.header.kind != Primitive::pauli || !ds.grouped()) {
        throw std::invalid_argument("brydges_purity: group-tagged pauli dataset required");
    }
    check_subsystem(subsystem, ds.header.num_qubits);
    size_t a = subsystem.size();
    std::map<int64_t, std::vector<size_t>> groups;
    for (size_t i = 0; i < ds.pauli.size(); i++) {
        groups[ds.pauli[i].group].push_back(i);
    }
    std::vector<double> weight(a + 1);
    for (size_t h = 0; h <= a; h++) {
        weight[h] = std::pow(-2.0, -static_cast<double>(h));
    }
    size_t outcomes = size_t{1} << a;
    double total = 0;
    for (const auto &[g, members] : groups) {
        size_t m = members.size();
        if (m < 2) {
            throw std::invalid_argument("brydges_purity: group " + std::to_string(g) + " has fewer than 2 repetitions");
        }
        std::vector<double> counts(outcomes, 0.0);
        for (size_t i : members) {
            uint64_t s = 0;
            for (size_t j = 0; j < a; j++) {
                s |= uint64_t{ds.pauli[i].bits[subsystem[j]]} << j;
            }
            counts[s] += 1;
        }
        double acc = 0;
        for (uint64_t s = 0; s < outcomes; s++) {
            if (counts[s] == 0) {
                continue;
            }
            for (uint64_t t = 0; t < outcomes; t++) {
                if (counts[t] == 0) {
                    continue;
                }
                double pair_count = counts[s] * counts[t] - (s == t ? counts[s] : 0.0);
                acc += weight[std::popcount(s ^ t)] * pair_count;
            }
        }
        total += std::ldexp(acc, static_cast<int>(a)) / (static_cast<double>(m) * static_cast<double>(m - 1));
    }
    return total / static_cast<double>(groups.size());
}

}  // namespace shadowkit
