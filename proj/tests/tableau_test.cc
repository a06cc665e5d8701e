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

#include "shadowkit/tableau.h"

#include <gtest/gtest.h>

#include "shadowkit/dense.h"
#include "test_support.h"

using namespace shadowkit;

namespace {

PackedPauli random_pauli(size_t n, RngStream &rng) {
    PackedPauli p(n);
    for (size_t q = 0; q < n; q++) {
        p.set(q, static_cast<Pauli>(rng.below(4)));
    }
    p.sign = rng.bit();
    return p;
}

std::vector<PackedPauli> all_signed_paulis(size_t n) {
    std::vector<PackedPauli> out;
    for (size_t code = 0; code < (size_t{1} << (2 * n)); code++) {
        for (int s = 0; s < 2; s++) {
            PackedPauli p(n);
            for (size_t q = 0; q < n; q++) {
                p.set(q, static_cast<Pauli>((code >> (2 * q)) & 3));
            }
            p.sign = s != 0;
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace

TEST(tableau, phase_kernel_matches_scalar_reference) {
    RngStream rng(11);
    for (size_t n : {1, 3, 63, 64, 65, 130, 257}) {
        for (int trial = 0; trial < 200; trial++) {
            PackedPauli a = random_pauli(n, rng);
            PackedPauli b = random_pauli(n, rng);
            uint8_t expected = pauli_mul_phase_reference(a.xs, a.zs, b.xs, b.zs, n);
            PackedPauli c = a;
            uint8_t got = pauli_mul_inplace(c.xs, c.zs, b.xs, b.zs);
            ASSERT_EQ(got, expected) << "n=" << n;
            for (size_t k = 0; k < c.xs.size(); k++) {
                ASSERT_EQ(c.xs[k], a.xs[k] ^ b.xs[k]);
                ASSERT_EQ(c.zs[k], a.zs[k] ^ b.zs[k]);
            }
        }
    }
}

TEST(tableau, phase_kernel_matches_dense_products) {
    // P_a P_b = i^k P_c checked against matrix products for every pair at n = 2.
    const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    auto all = all_signed_paulis(2);
    for (const auto &a : all) {
        for (const auto &b : all) {
            if (a.sign || b.sign) {
                continue;
            }
            PackedPauli c = a;
            uint8_t k = pauli_mul_inplace(c.xs, c.zs, b.xs, b.zs);
            CMatrix lhs = pauli_matrix(a) * pauli_matrix(b);
            CMatrix rhs = ipow[k] * pauli_matrix(c);
            ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12) << a.str() << " * " << b.str();
        }
    }
}

TEST(tableau, packed_pauli_text) {
    PackedPauli p = PackedPauli::from_text("-XYZI");
    EXPECT_TRUE(p.sign);
    EXPECT_EQ(p.letter(1), Pauli::Y);
    EXPECT_EQ(p.str(), "-XYZI");
    EXPECT_EQ(PackedPauli::from_text("ZZ").str(), "+ZZ");
    PackedPauli xx = PackedPauli::from_text("XX");
    PackedPauli zz = PackedPauli::from_text("ZZ");
    EXPECT_TRUE(xx.commutes_with(zz));
    xx.mul_assign(zz);
    EXPECT_EQ(xx.str(), "-YY");
    PackedPauli x = PackedPauli::from_text("X");
    EXPECT_THROW(x.mul_assign(PackedPauli::from_text("Z")), std::invalid_argument);
}

TEST(tableau, identity_is_symplectic) {
    for (size_t n : {1, 2, 5, 64, 70}) {
        CliffordTableau t(n);
        EXPECT_TRUE(t.is_symplectic());
        EXPECT_EQ(t.inverse(), t);
    }
}

TEST(tableau, gates_conjugate_like_dense_unitaries) {
    RngStream rng(5);
    const size_t n = 3;
    auto paulis = all_signed_paulis(n);
    for (int trial = 0; trial < 20; trial++) {
        auto ops = oracle::random_circuit(n, 15, rng);
        CliffordTableau t(n);
        for (const auto &g : ops) {
            oracle::apply_gate(t, g);
        }
        ASSERT_TRUE(t.is_symplectic());
        CMatrix u = oracle::circuit_unitary(n, ops);
        for (const auto &p : paulis) {
            CMatrix expected = u * pauli_matrix(p) * u.adjoint();
            CMatrix got = pauli_matrix(t.conjugate(p));
            ASSERT_LT((expected - got).cwiseAbs().maxCoeff(), 1e-9) << p.str();
        }
    }
}

TEST(tableau, single_qubit_gate_images) {
    CliffordTableau t(1);
    t.apply_h(0);
    EXPECT_EQ(t.x_image(0).str(), "+Z");
    EXPECT_EQ(t.z_image(0).str(), "+X");
    CliffordTableau s(1);
    s.apply_s(0);
    EXPECT_EQ(s.x_image(0).str(), "+Y");
    CliffordTableau sd(1);
    sd.apply_s_dag(0);
    EXPECT_EQ(sd.x_image(0).str(), "-Y");
    CliffordTableau x(1);
    x.apply_x(0);
    EXPECT_EQ(x.z_image(0).str(), "-Z");
    EXPECT_EQ(x.x_image(0).str(), "+X");
    CliffordTableau y(1);
    y.apply_y(0);
    EXPECT_EQ(y.z_image(0).str(), "-Z");
    EXPECT_EQ(y.x_image(0).str(), "-X");
    CliffordTableau z(1);
    z.apply_z(0);
    EXPECT_EQ(z.x_image(0).str(), "-X");
    CliffordTableau cx(2);
    cx.apply_cx(0, 1);
    EXPECT_EQ(cx.x_image(0).str(), "+XX");
    EXPECT_EQ(cx.z_image(1).str(), "+ZZ");
    EXPECT_THROW(cx.apply_cx(1, 1), std::invalid_argument);
}

TEST(tableau, inverse_and_composition_match_dense) {
    RngStream rng(9);
    for (size_t n : {1, 2, 3}) {
        for (int trial = 0; trial < 20; trial++) {
            auto ops_a = oracle::random_circuit(n, 12, rng);
            auto ops_b = oracle::random_circuit(n, 12, rng);
            CliffordTableau a(n);
            CliffordTableau b(n);
            for (const auto &g : ops_a) {
                oracle::apply_gate(a, g);
            }
            for (const auto &g : ops_b) {
                oracle::apply_gate(b, g);
            }
            CMatrix ua = oracle::circuit_unitary(n, ops_a);
            CMatrix ub = oracle::circuit_unitary(n, ops_b);
            CliffordTableau ab = a.then(b);
            CliffordTableau inv = a.inverse();
            EXPECT_TRUE(ab.is_symplectic());
            EXPECT_EQ(a.then(inv), CliffordTableau(n));
            EXPECT_EQ(inv.then(a), CliffordTableau(n));
            for (const auto &p : all_signed_paulis(n)) {
                CMatrix want_ab = (ub * ua) * pauli_matrix(p) * (ub * ua).adjoint();
                ASSERT_LT((want_ab - pauli_matrix(ab.conjugate(p))).cwiseAbs().maxCoeff(), 1e-9);
                CMatrix want_inv = ua.adjoint() * pauli_matrix(p) * ua;
                ASSERT_LT((want_inv - pauli_matrix(inv.conjugate(p))).cwiseAbs().maxCoeff(), 1e-9);
            }
        }
    }
}

TEST(tableau, inverse_large_multiword) {
    RngStream rng(3);
    const size_t n = 70;
    auto ops = oracle::random_circuit(n, 2000, rng);
    CliffordTableau t(n);
    for (const auto &g : ops) {
        oracle::apply_gate(t, g);
    }
    EXPECT_TRUE(t.is_symplectic());
    EXPECT_EQ(t.then(t.inverse()), CliffordTableau(n));
}

TEST(tableau, symplectic_check_detects_corruption) {
    CliffordTableau t(3);
    t.apply_h(1);
    t.apply_cx(1, 2);
    ASSERT_TRUE(t.is_symplectic());
    PackedPauli bad = t.row(0);
    bad.set(2, Pauli::Z);
    t.set_row(0, bad);
    EXPECT_FALSE(t.is_symplectic());
}

TEST(tableau, text_round_trip) {
    RngStream rng(21);
    auto ops = oracle::random_circuit(4, 40, rng);
    CliffordTableau t(4);
    for (const auto &g : ops) {
        oracle::apply_gate(t, g);
    }
    t.apply_y(2);
    std::string text = t.to_text();
    std::vector<std::string> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    ASSERT_EQ(lines.size(), 8u);
    EXPECT_EQ(lines[0].size(), 17u);
    CliffordTableau back = CliffordTableau::from_text_lines(lines);
    EXPECT_EQ(back, t);
    EXPECT_EQ(back.to_text(), text);

    std::vector<std::string> bad = lines;
    bad[3] = "0 1 2 0 0 0 0 0 1";
    EXPECT_THROW(CliffordTableau::from_text_lines(bad), std::invalid_argument);
    bad = lines;
    bad[3] += " 0";
    EXPECT_THROW(CliffordTableau::from_text_lines(bad), std::invalid_argument);
    bad = lines;
    bad[0] = bad[1];
    EXPECT_THROW(CliffordTableau::from_text_lines(bad), std::invalid_argument);
}
