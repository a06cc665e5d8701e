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

#ifndef SHADOWKIT_TABLEAU_H
#define SHADOWKIT_TABLEAU_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shadowkit/pauli.h"

namespace shadowkit {

inline size_t words_for_bits(size_t n) {
    return (n + 63) / 64;
}

/// Multiplies the packed Pauli (rx, rz) into (lx, lz) in place, word-parallel, and
/// returns the power of i picked up by the unsigned product: P_l * P_r = i^k P_new.
/// Convention: bits (x, z) = (1, 1) denote the Hermitian Y.
uint8_t pauli_mul_inplace(
    std::span<uint64_t> lx, std::span<uint64_t> lz, std::span<const uint64_t> rx, std::span<const uint64_t> rz);

/// Scalar per-qubit version of the phase rule above (the textbook g-function sum).
/// Kept for testing the word-parallel kernel.
uint8_t pauli_mul_phase_reference(
    std::span<const uint64_t> lx,
    std::span<const uint64_t> lz,
    std::span<const uint64_t> rx,
    std::span<const uint64_t> rz,
    size_t num_qubits);

/// Signed Pauli string (-1)^sign prod_q P(x_q, z_q), bit-packed.
struct PackedPauli {
    size_t num_qubits = 0;
    std::vector<uint64_t> xs;
    std::vector<uint64_t> zs;
    bool sign = false;

    PackedPauli() = default;
    explicit PackedPauli(size_t n) : num_qubits(n), xs(words_for_bits(n), 0), zs(words_for_bits(n), 0) {
    }
    static PackedPauli from_string(const PauliString &p, bool negative = false);
    /// Parses "+XIZ" / "-YY" / "XZ".
    static PackedPauli from_text(std::string_view text);

    bool x(size_t q) const {
        return (xs[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs[q >> 6] >> (q & 63)) & 1;
    }
    Pauli letter(size_t q) const;
    void set(size_t q, Pauli p);
    bool is_identity() const;
    PauliString unsigned_string() const;
    /// True when the two strings commute (symplectic product zero).
    bool commutes_with(const PackedPauli &other) const;
    /// Multiplies other into this (this <- this * other). Throws if the result would
    /// carry an imaginary phase, i.e. the factors anticommute.
    void mul_assign(const PackedPauli &other);
    std::string str() const;

    bool operator==(const PackedPauli &) const = default;
};

/// Tableau of an n-qubit Clifford U modulo global phase.
///
/// Row q (0 <= q < n) holds U X_q U^dag and row n + q holds U Z_q U^dag, each as a
/// signed packed Pauli. Rows are stored in two flat word arrays (x part and z part)
/// so row products are word-parallel XOR/AND.
///
/// The same layout doubles as the CHP representation of the stabilizer state U|0^n>:
/// rows [0, n) are destabilizers and rows [n, 2n) are stabilizers.
class CliffordTableau {
   public:
    CliffordTableau() = default;
    /// Identity tableau.
    explicit CliffordTableau(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }
    size_t words() const {
        return w_;
    }
    size_t num_rows() const {
        return 2 * n_;
    }

    std::span<uint64_t> row_xs(size_t row) {
        return {xs_.data() + row * w_, w_};
    }
    std::span<const uint64_t> row_xs(size_t row) const {
        return {xs_.data() + row * w_, w_};
    }
    std::span<uint64_t> row_zs(size_t row) {
        return {zs_.data() + row * w_, w_};
    }
    std::span<const uint64_t> row_zs(size_t row) const {
        return {zs_.data() + row * w_, w_};
    }
    bool x_bit(size_t row, size_t q) const {
        return (xs_[row * w_ + (q >> 6)] >> (q & 63)) & 1;
    }
    bool z_bit(size_t row, size_t q) const {
        return (zs_[row * w_ + (q >> 6)] >> (q & 63)) & 1;
    }
    bool sign(size_t row) const {
        return signs_[row] != 0;
    }
    void set_sign(size_t row, bool s) {
        signs_[row] = s ? 1 : 0;
    }

    PackedPauli row(size_t r) const;
    void set_row(size_t r, const PackedPauli &p);
    PackedPauli x_image(size_t q) const {
        return row(q);
    }
    PackedPauli z_image(size_t q) const {
        return row(n_ + q);
    }

    /// Row r <- row r * row src, tracking the sign. Both rows must commute for the
    /// resulting sign to be meaningful.
    void row_mul(size_t r, size_t src);

    // Gates. Each replaces U by G U (the gate acts after U).
    void apply_h(size_t q);
    void apply_s(size_t q);
    void apply_s_dag(size_t q);
    void apply_x(size_t q);
    void apply_y(size_t q);
    void apply_z(size_t q);
    void apply_cx(size_t control, size_t target);

    /// U P U^dag.
    PackedPauli conjugate(const PackedPauli &p) const;
    /// Tableau of `after` composed with this one (apply this first, then `after`).
    CliffordTableau then(const CliffordTableau &after) const;
    CliffordTableau inverse() const;
    /// Checks that the rows satisfy the canonical commutation relations of the
    /// X_q, Z_q generators. O(n^3 / 64).
    bool is_symplectic() const;

    /// 2n lines of 2n + 1 space-separated bits: x part, z part, sign.
    std::string to_text() const;
    static CliffordTableau from_text_lines(std::span<const std::string> lines);

    bool operator==(const CliffordTableau &) const = default;

   private:
    size_t n_ = 0;
    size_t w_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> signs_;
};

}  // namespace shadowkit

#endif
