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

#include <gtest/gtest.h>

#include <cmath>

#include "shadowkit/acquisition.h"
#include "shadowkit/median.h"
#include "test_support.h"

using namespace shadowkit;

namespace {

PauliSnapshot snap(std::string_view bases, std::vector<uint8_t> bits) {
    PauliSnapshot s;
    for (char c : bases) {
        s.bases.push_back(pauli_from_char(c));
    }
    s.bits = std::move(bits);
    return s;
}

WeightedPauliSum single(std::string_view p, double w = 1.0) {
    return WeightedPauliSum::single(w, PauliString::from_text(p));
}

struct RandomCliffordSnapshot {
    CliffordSnapshot snapshot;
    CMatrix inverted;
};

/// A snapshot from a random circuit together with its inverse computed from the
/// circuit's dense unitary.
RandomCliffordSnapshot random_clifford_snapshot(size_t n, RngStream &rng) {
    auto ops = oracle::random_circuit(n, 25, rng);
    RandomCliffordSnapshot out;
    out.snapshot.unitary = CliffordTableau(n);
    for (const auto &g : ops) {
        oracle::apply_gate(out.snapshot.unitary, g);
    }
    out.snapshot.bits.resize(n);
    for (auto &b : out.snapshot.bits) {
        b = static_cast<uint8_t>(rng.bit());
    }
    auto dim = static_cast<Eigen::Index>(size_t{1} << n);
    CVector e = CVector::Zero(dim);
    e(static_cast<Eigen::Index>(oracle::pack_bits(out.snapshot.bits))) = 1;
    CVector v = oracle::circuit_unitary(n, ops).adjoint() * e;
    out.inverted = static_cast<double>(dim + 1) * v * v.adjoint() - CMatrix::Identity(dim, dim);
    return out;
}

CMatrix pauli_matrix_sum(const WeightedPauliSum &o) {
    auto dim = static_cast<Eigen::Index>(size_t{1} << o.num_qubits());
    CMatrix m = CMatrix::Zero(dim, dim);
    for (const auto &t : o.terms()) {
        m += t.weight * pauli_matrix(t.string);
    }
    return m;
}

}  // namespace

TEST(median_of_means, documented_examples) {
    std::vector<double> a = {1, 2, 100};
    EXPECT_EQ(median_of_means(a, 3), 2);
    std::vector<double> b = {1, 1, 1, 1};
    EXPECT_EQ(median_of_means(b, 2), 1);
    std::vector<double> c = {0, 2, 0, 2, 50, 50};
    EXPECT_EQ(median_of_means(c, 3), 1);
    std::vector<double> d = {1, 3, 5, 7, 1000};
    // Remainder discarded: chunks (1,3) and (5,7), even K takes the midpoint.
    EXPECT_EQ(median_of_means(d, 2), 4);
    EXPECT_THROW(median_of_means(d, 6), std::invalid_argument);
    EXPECT_THROW(median_of_means(d, 0), std::invalid_argument);
    EXPECT_EQ(median({3, 1, 2}), 2);
    EXPECT_EQ(median({4, 1, 2, 3}), 2.5);
}

TEST(median_of_means, outlier_chunks_do_not_move_the_median) {
    RngStream rng(3);
    for (size_t k : {3, 5, 9, 10}) {
        std::vector<double> v(k * 20, 0.25);
        size_t bad = (k - 1) / 2;
        for (size_t c = 0; c < bad; c++) {
            size_t chunk = rng.below(k);
            v[chunk * 20 + rng.below(20)] = (rng.bit() ? 1 : -1) * 1e9;
        }
        EXPECT_DOUBLE_EQ(median_of_means(v, k), 0.25) << k;
    }
}

TEST(snapshot_pauli_estimate, formula_cases) {
    EXPECT_EQ(snapshot_pauli_estimate(snap("Z", {0}), PauliString::from_text("Z")), 3);
    EXPECT_EQ(snapshot_pauli_estimate(snap("X", {1}), PauliString::from_text("Z")), 0);
    EXPECT_EQ(snapshot_pauli_estimate(snap("ZZ", {0, 1}), PauliString::from_text("ZZ")), -9);
    EXPECT_EQ(snapshot_pauli_estimate(snap("XY", {1, 1}), PauliString::from_text("II")), 1);
    WeightedPauliSum sum(2, {{0.5, PauliString::from_text("ZI")}, {2.0, PauliString::from_text("IY")}});
    EXPECT_EQ(snapshot_pauli_estimate(snap("ZY", {1, 0}), sum), -1.5 + 6.0);
    EXPECT_THROW(snapshot_pauli_estimate(snap("Z", {0}), PauliString::from_text("ZZ")), std::invalid_argument);
}

TEST(snapshot_pauli_estimate, hit_frequency_is_three_to_minus_k) {
    auto ds = acquire_pauli(StateOracle::stabilizer(ghz_state(6)), 30000, 4);
    auto p = PauliString::from_text("XIYZII");
    size_t nonzero = 0;
    for (const auto &s : ds.pauli) {
        double v = snapshot_pauli_estimate(s, p);
        EXPECT_TRUE(v == 0 || std::abs(v) == 27);
        nonzero += v != 0;
    }
    double f = 1.0 / 27;
    double sigma = std::sqrt(f * (1 - f) / ds.size());
    EXPECT_NEAR(static_cast<double>(nonzero) / ds.size(), f, 3 * sigma);
}

TEST(snapshot_clifford_estimate, formula_cases) {
    size_t n = 3;
    CliffordSnapshot s{CliffordTableau(n), {0, 0, 0}};
    LinearTarget zero = StabilizerState(n);
    EXPECT_DOUBLE_EQ(snapshot_clifford_estimate(s, zero), 8);
    s.bits = {1, 0, 0};
    EXPECT_DOUBLE_EQ(snapshot_clifford_estimate(s, zero), -1);
}

TEST(snapshot_clifford_estimate, every_target_kind_matches_dense_trace) {
    RngStream rng(8);
    size_t n = 3;
    auto psi = StabilizerState(n);
    for (const auto &g : oracle::random_circuit(n, 30, rng)) {
        oracle::apply_gate(psi.tableau(), g);
    }
    CVector psi_vec = stabilizer_statevector(psi);
    WeightedPauliSum sum(
        n,
        {{0.7, PauliString::from_text("XZI")},
         {-1.2, PauliString::from_text("YYZ")},
         {0.4, PauliString::from_text("III")},
         {2.0, PauliString::from_text("IIZ")}});
    DenseObservable local{{2, 0}, oracle::random_hermitian(4, rng)};
    // Full matrix of the local observable: bit 0 of its index is qubit 2, bit 1 is qubit 0.
    CMatrix local_full = CMatrix::Zero(8, 8);
    for (Eigen::Index r = 0; r < 8; r++) {
        for (Eigen::Index c = 0; c < 8; c++) {
            if (((r ^ c) & 0b010) != 0) {
                continue;
            }
            auto sub = [](Eigen::Index k) {
                return ((k >> 2) & 1) | (((k >> 0) & 1) << 1);
            };
            local_full(r, c) = local.matrix(sub(r), sub(c));
        }
    }
    for (int trial = 0; trial < 30; trial++) {
        auto rs = random_clifford_snapshot(n, rng);
        EXPECT_NEAR(
            snapshot_clifford_estimate(rs.snapshot, sum), (pauli_matrix_sum(sum) * rs.inverted).trace().real(), 1e-9);
        CMatrix proj = psi_vec * psi_vec.adjoint();
        EXPECT_NEAR(snapshot_clifford_estimate(rs.snapshot, psi), (proj * rs.inverted).trace().real(), 1e-9);
        EXPECT_NEAR(snapshot_clifford_estimate(rs.snapshot, local), (local_full * rs.inverted).trace().real(), 1e-9);
    }
}

TEST(snapshot_estimates, kind_compatibility) {
    auto pauli = acquire_pauli(StateOracle::stabilizer(StabilizerState(2)), 10, 1);
    LinearTarget stab = StabilizerState(2);
    EXPECT_THROW(snapshot_estimates(pauli, stab), std::invalid_argument);
    LinearTarget wrong_size = single("ZZZ");
    EXPECT_THROW(snapshot_estimates(pauli, wrong_size), std::invalid_argument);
    LinearTarget bad_dense = DenseObservable{{0, 5}, CMatrix::Identity(4, 4)};
    EXPECT_THROW(snapshot_estimates(pauli, bad_dense), std::invalid_argument);
}

TEST(snapshot_estimates, dense_target_on_pauli_data_matches_pauli_sum) {
    CMatrix zx = CMatrix::Zero(4, 4);
    zx << 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0;
    auto ds = acquire_pauli(noisy_ghz(3, 0.1), 300, 2);
    LinearTarget dense = DenseObservable{{1, 0}, zx};
    // Matrix bit 0 is qubit 1 and bit 1 is qubit 0, so zx = Z (x) X puts Z on qubit 0.
    LinearTarget sum = single("ZXI");
    auto a = snapshot_estimates(ds, dense);
    auto b = snapshot_estimates(ds, sum);
    for (size_t i = 0; i < a.size(); i++) {
        EXPECT_NEAR(a[i], b[i], 1e-9);
    }
}

TEST(predict_linear, ghz_correlators) {
    auto ds = acquire_pauli(StateOracle::stabilizer(ghz_state(10)), 10000, 11);
    std::vector<LinearTarget> targets = {single("ZZIIIIIIII"), single("IIIIIIIIIX"), single("XXXXXXXXXX")};
    auto report = predict_linear(ds, targets, 10);
    ASSERT_EQ(report.rows.size(), 3u);
    EXPECT_NEAR(report.rows[0].estimate, 1.0, 0.1);
    EXPECT_NEAR(report.rows[1].estimate, 0.0, 0.1);
    EXPECT_EQ(report.rows[0].id, "t0");
    EXPECT_EQ(report.rows[0].kind, "pauli-sum");
    EXPECT_EQ(report.rows[0].k, 10u);
    EXPECT_EQ(report.rows[0].n_per_batch, 1000u);
    EXPECT_EQ(report.rows[0].shots_used, 10000u);
    EXPECT_EQ(report.header, ds.header);

    auto zero = acquire_pauli(StateOracle::stabilizer(StabilizerState(4)), 5000, 3);
    std::vector<LinearTarget> x0 = {single("XIII")};
    std::vector<std::string> ids = {"x0"};
    auto r = predict_linear(zero, x0, 7, ids);
    EXPECT_NEAR(r.rows[0].estimate, 0.0, 0.1);
    EXPECT_EQ(r.rows[0].id, "x0");
    EXPECT_EQ(r.rows[0].n_per_batch, 714u);
    EXPECT_EQ(r.rows[0].shots_used, 4998u);
}

TEST(predict_linear, noisy_ghz_fidelity_with_clifford_shadows) {
    auto ds = acquire_clifford(noisy_ghz(6, 0.5), 20000, 12);
    std::vector<LinearTarget> targets = {ghz_state(6)};
    auto report = predict_linear(ds, targets, 10);
    EXPECT_NEAR(report.rows[0].estimate, 0.5, 0.1);
    EXPECT_EQ(report.rows[0].kind, "stabilizer");
}

TEST(predict_linear, serial_and_parallel_agree) {
    auto ds = acquire_clifford(noisy_ghz(4, 0.2), 2000, 13);
    std::vector<LinearTarget> targets = {ghz_state(4), single("XXXX", 0.5)};
    auto a = predict_linear(ds, targets, 10, {}, false);
    auto b = predict_linear(ds, targets, 10, {}, true);
    for (size_t i = 0; i < targets.size(); i++) {
        EXPECT_EQ(a.rows[i].estimate, b.rows[i].estimate);
    }
}

TEST(reduced_density_matrix, known_marginals) {
    std::vector<size_t> a0 = {0};
    auto singlet = acquire_pauli(singlet_chain(2), 10000, 1);
    CMatrix m = reduced_density_matrix(singlet, a0, 10);
    EXPECT_LT((m - 0.5 * CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 0.05);

    auto ghz = acquire_pauli(StateOracle::stabilizer(ghz_state(6)), 10000, 2);
    std::vector<size_t> a01 = {0, 1};
    CMatrix g = reduced_density_matrix(ghz, a01, 10);
    CMatrix expected = CMatrix::Zero(4, 4);
    expected(0, 0) = expected(3, 3) = 0.5;
    EXPECT_LT((g - expected).cwiseAbs().maxCoeff(), 0.05);
    EXPECT_LT((g - g.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(g.trace().real(), 1.0, 1e-12);

    auto zero = acquire_pauli(StateOracle::stabilizer(StabilizerState(3)), 10000, 3);
    CMatrix z = reduced_density_matrix(zero, a0, 10);
    EXPECT_NEAR(z(0, 0).real(), 1.0, 0.05);
    EXPECT_LT(std::abs(z(0, 1)), 0.05);

    std::vector<size_t> out_of_range = {7};
    EXPECT_THROW(reduced_density_matrix(zero, out_of_range, 10), std::invalid_argument);
    auto cliff = acquire_clifford(StateOracle::stabilizer(StabilizerState(2)), 10, 1);
    EXPECT_THROW(reduced_density_matrix(cliff, a0, 2), std::invalid_argument);
}
