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

#include <gtest/gtest.h>
#include <omp.h>

#include <cmath>

#include "shadowkit/linear.h"
#include "test_support.h"

using namespace shadowkit;

namespace {

StateOracle zero_state(size_t n) {
    return StateOracle::stabilizer(StabilizerState(n));
}

/// 3 R^dag |b><b| R - I per qubit with R built from explicit gate matrices.
CMatrix reference_pauli_inverse(const PauliSnapshot &s) {
    size_t n = s.bases.size();
    CMatrix out = CMatrix::Identity(1, 1);
    for (size_t q = 0; q < n; q++) {
        const double r = 1 / std::sqrt(2.0);
        const std::complex<double> i1(0, 1);
        Eigen::Vector2cd v;
        if (s.bases[q] == Pauli::Z) {
            v = s.bits[q] ? Eigen::Vector2cd(0, 1) : Eigen::Vector2cd(1, 0);
        } else if (s.bases[q] == Pauli::X) {
            v = Eigen::Vector2cd(r, s.bits[q] ? -r : r);
        } else {
            v = Eigen::Vector2cd(r, s.bits[q] ? -i1 * r : i1 * r);
        }
        CMatrix m = 3.0 * v * v.adjoint() - CMatrix::Identity(2, 2);
        CMatrix next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index a = 0; a < 2; a++) {
            for (Eigen::Index b = 0; b < 2; b++) {
                next.block(a * out.rows(), b * out.cols(), out.rows(), out.cols()) = m(a, b) * out;
            }
        }
        out = next;
    }
    return out;
}

}  // namespace

TEST(acquire_pauli, deterministic_and_basis_consistent) {
    auto a = acquire_pauli(zero_state(1), 3, 42);
    auto b = acquire_pauli(zero_state(1), 3, 42);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.size(), 3u);
    EXPECT_EQ(a.header.seed, 42u);
    auto ds = acquire_pauli(zero_state(3), 2000, 1);
    for (const auto &s : ds.pauli) {
        for (size_t q = 0; q < 3; q++) {
            if (s.bases[q] == Pauli::Z) {
                EXPECT_EQ(s.bits[q], 0);
            }
        }
    }
    EXPECT_THROW(acquire_pauli(zero_state(1), 0, 1), std::invalid_argument);
}

TEST(acquire_pauli, basis_frequencies_are_uniform) {
    const size_t shots = 10000;
    auto ds = acquire_pauli(StateOracle::stabilizer(ghz_state(4)), shots, 9);
    double sigma = std::sqrt((1.0 / 3) * (2.0 / 3) / shots);
    for (size_t q = 0; q < 4; q++) {
        std::array<double, 4> counts{};
        for (const auto &s : ds.pauli) {
            counts[static_cast<size_t>(s.bases[q])] += 1.0 / shots;
        }
        for (size_t l = 1; l < 4; l++) {
            EXPECT_NEAR(counts[l], 1.0 / 3, 3 * sigma);
        }
    }
}

TEST(acquisition, serial_and_parallel_runs_are_identical) {
    omp_set_num_threads(4);
    StateOracle g = noisy_ghz(6, 0.3);
    AcquireOptions serial;
    serial.parallel = false;
    AcquireOptions parallel;
    parallel.parallel = true;
    EXPECT_EQ(acquire_pauli(g, 3000, 5, serial), acquire_pauli(g, 3000, 5, parallel));
    EXPECT_EQ(acquire_clifford(g, 500, 5, serial), acquire_clifford(g, 500, 5, parallel));
    auto scheme = random_scheme(6, 20, 7, 3);
    EXPECT_EQ(acquire_scheme(g, scheme, 5, serial), acquire_scheme(g, scheme, 5, parallel));
    EXPECT_NE(acquire_pauli(g, 300, 5, serial), acquire_pauli(g, 300, 6, serial));
}

TEST(acquisition, shot_ranges_match_the_serial_run) {
    // Shot i depends only on (seed, i), so any prefix is the prefix of a longer run.
    StateOracle g = StateOracle::stabilizer(ghz_state(5));
    auto full = acquire_pauli(g, 400, 77);
    auto prefix = acquire_pauli(g, 150, 77);
    for (size_t i = 0; i < 150; i++) {
        EXPECT_EQ(full.pauli[i], prefix.pauli[i]);
    }
}

TEST(acquire_clifford, forced_identity_and_large_states) {
    AcquireOptions opts;
    opts.clifford_override = [](size_t, size_t n) {
        return CliffordTableau(n);
    };
    auto ds = acquire_clifford(zero_state(5), 1, 3, opts);
    EXPECT_EQ(ds.clifford[0].bits, std::vector<uint8_t>(5, 0));
    EXPECT_EQ(ds.clifford[0].unitary, CliffordTableau(5));

    auto big = acquire_clifford(StateOracle::stabilizer(ghz_state(100)), 100, 3);
    EXPECT_EQ(big.size(), 100u);
    EXPECT_EQ(big.header.kind, Primitive::clifford);
    EXPECT_THROW(acquire_clifford(zero_state(2), 0, 1), std::invalid_argument);
}

TEST(acquire_scheme, rows_repetitions_and_groups) {
    MeasurementScheme one;
    one.num_qubits = 3;
    one.rows = {{Pauli::Z, Pauli::Z, Pauli::Z}};
    one.repetitions = 5;
    auto ds = acquire_scheme(zero_state(3), one, 1);
    ASSERT_EQ(ds.size(), 5u);
    for (const auto &s : ds.pauli) {
        EXPECT_EQ(s.bits, std::vector<uint8_t>(3, 0));
        EXPECT_EQ(s.group, 0);
    }
    EXPECT_TRUE(ds.grouped());

    auto grid = random_scheme(4, 10, 100, 8);
    auto g = acquire_scheme(StateOracle::stabilizer(ghz_state(4)), grid, 2);
    ASSERT_EQ(g.size(), 1000u);
    std::vector<size_t> per_group(10, 0);
    for (size_t i = 0; i < g.size(); i++) {
        per_group[static_cast<size_t>(g.pauli[i].group)]++;
        EXPECT_EQ(g.pauli[i].bases, grid.rows[i / 100]);
    }
    EXPECT_EQ(per_group, std::vector<size_t>(10, 100));

    MeasurementScheme bad = one;
    bad.rows.push_back({Pauli::X});
    EXPECT_THROW(acquire_scheme(zero_state(3), bad, 1), std::invalid_argument);
    EXPECT_THROW(acquire_scheme(zero_state(3), MeasurementScheme{}, 1), std::invalid_argument);
    EXPECT_FALSE(acquire_pauli(zero_state(2), 3, 1).grouped());
}

TEST(inverted_snapshots, pauli_inverse_matches_reference) {
    auto ds = acquire_pauli(noisy_ghz(3, 0.2), 50, 4);
    std::vector<size_t> all = {0, 1, 2};
    for (const auto &s : ds.pauli) {
        CMatrix got = inverted_pauli_snapshot(s, all);
        EXPECT_LT((got - reference_pauli_inverse(s)).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(got.trace().real(), 1.0, 1e-12);
    }
}

TEST(inverted_snapshots, clifford_inverse_matches_reference) {
    RngStream rng(6);
    size_t n = 3;
    for (int trial = 0; trial < 20; trial++) {
        auto ops = oracle::random_circuit(n, 20, rng);
        CliffordSnapshot s;
        s.unitary = CliffordTableau(n);
        for (const auto &g : ops) {
            oracle::apply_gate(s.unitary, g);
        }
        s.bits.resize(n);
        for (auto &b : s.bits) {
            b = static_cast<uint8_t>(rng.bit());
        }
        CMatrix u = oracle::circuit_unitary(n, ops);
        CVector e = CVector::Zero(8);
        e(static_cast<Eigen::Index>(oracle::pack_bits(s.bits))) = 1;
        CVector v = u.adjoint() * e;
        CMatrix expected = 9.0 * v * v.adjoint() - CMatrix::Identity(8, 8);
        CMatrix got = inverted_clifford_snapshot(s);
        EXPECT_LT((got - expected).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_NEAR(got.trace().real(), 1.0, 1e-10);
    }
}

TEST(inverted_snapshots, pauli_mean_is_unbiased) {
    RngStream rng(15);
    StateOracle s = StateOracle::dense(oracle::random_state_vector(3, rng));
    CMatrix rho = density_matrix(s);
    auto ds = acquire_pauli(s, 200000, 21);
    std::vector<size_t> all = {0, 1, 2};
    CMatrix mean = CMatrix::Zero(8, 8);
    for (const auto &snap : ds.pauli) {
        mean += inverted_pauli_snapshot(snap, all);
    }
    mean /= static_cast<double>(ds.size());
    EXPECT_LT((mean - rho).cwiseAbs().maxCoeff(), 0.02);
}

TEST(inverted_snapshots, clifford_mean_is_unbiased) {
    StateOracle s = StateOracle::stabilizer(ghz_state(2));
    CMatrix rho = density_matrix(s);
    auto ds = acquire_clifford(s, 100000, 22);
    CMatrix mean = CMatrix::Zero(4, 4);
    for (const auto &snap : ds.clifford) {
        mean += inverted_clifford_snapshot(snap);
    }
    mean /= static_cast<double>(ds.size());
    EXPECT_LT((mean - rho).cwiseAbs().maxCoeff(), 0.02);
}
