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

#include <bit>
#include <sstream>
#include <stdexcept>

namespace shadowkit {

uint8_t pauli_mul_inplace(
    std::span<uint64_t> lx, std::span<uint64_t> lz, std::span<const uint64_t> rx, std::span<const uint64_t> rz) {
    // Each bit lane holds a 2-bit counter (cnt1 low, cnt2 high) of the per-qubit
    // power of i; the lanes are summed at the end.
    uint64_t cnt1 = 0;
    uint64_t cnt2 = 0;
    for (size_t k = 0; k < lx.size(); k++) {
        uint64_t x1 = lx[k];
        uint64_t z1 = lz[k];
        uint64_t x2 = rx[k];
        uint64_t z2 = rz[k];
        uint64_t nx = x1 ^ x2;
        uint64_t nz = z1 ^ z2;
        uint64_t x1z2 = x1 & z2;
        uint64_t anti = (x2 & z1) ^ x1z2;
        cnt2 ^= (cnt1 ^ nx ^ nz ^ x1z2) & anti;
        cnt1 ^= anti;
        lx[k] = nx;
        lz[k] = nz;
    }
    return static_cast<uint8_t>((std::popcount(cnt1) + 2 * std::popcount(cnt2)) & 3);
}

uint8_t pauli_mul_phase_reference(
    std::span<const uint64_t> lx,
    std::span<const uint64_t> lz,
    std::span<const uint64_t> rx,
    std::span<const uint64_t> rz,
    size_t num_qubits) {
    int total = 0;
    for (size_t q = 0; q < num_qubits; q++) {
        int x1 = (lx[q >> 6] >> (q & 63)) & 1;
        int z1 = (lz[q >> 6] >> (q & 63)) & 1;
        int x2 = (rx[q >> 6] >> (q & 63)) & 1;
        int z2 = (rz[q >> 6] >> (q & 63)) & 1;
        if (x1 == 1 && z1 == 1) {
            total += z2 - x2;
        } else if (x1 == 1) {
            total += z2 * (2 * x2 - 1);
        } else if (z1 == 1) {
            total += x2 * (1 - 2 * z2);
        }
    }
    return static_cast<uint8_t>(((total % 4) + 4) % 4);
}

PackedPauli PackedPauli::from_string(const PauliString &p, bool negative) {
    PackedPauli out(p.size());
    for (size_t q = 0; q < p.size(); q++) {
        out.set(q, p[q]);
    }
    out.sign = negative;
    return out;
}

PackedPauli PackedPauli::from_text(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    return from_string(PauliString::from_text(text), negative);
}

Pauli PackedPauli::letter(size_t q) const {
    bool bx = x(q);
    bool bz = z(q);
    if (bx) {
        return bz ? Pauli::Y : Pauli::X;
    }
    return bz ? Pauli::Z : Pauli::I;
}

void PackedPauli::set(size_t q, Pauli p) {
    uint64_t mask = uint64_t{1} << (q & 63);
    bool bx = p == Pauli::X || p == Pauli::Y;
    bool bz = p == Pauli::Z || p == Pauli::Y;
    xs[q >> 6] = bx ? (xs[q >> 6] | mask) : (xs[q >> 6] & ~mask);
    zs[q >> 6] = bz ? (zs[q >> 6] | mask) : (zs[q >> 6] & ~mask);
}

bool PackedPauli::is_identity() const {
    for (size_t k = 0; k < xs.size(); k++) {
        if (xs[k] | zs[k]) {
            return false;
        }
    }
    return true;
}

PauliString PackedPauli::unsigned_string() const {
    PauliString out(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        out.set(q, letter(q));
    }
    return out;
}

bool PackedPauli::commutes_with(const PackedPauli &other) const {
    uint64_t acc = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        acc ^= (xs[k] & other.zs[k]) ^ (zs[k] & other.xs[k]);
    }
    return (std::popcount(acc) & 1) == 0;
}

void PackedPauli::mul_assign(const PackedPauli &other) {
    if (other.num_qubits != num_qubits) {
        throw std::invalid_argument("PackedPauli::mul_assign: size mismatch");
    }
    uint8_t log_i = pauli_mul_inplace(xs, zs, other.xs, other.zs);
    log_i = static_cast<uint8_t>((log_i + (sign ? 2 : 0) + (other.sign ? 2 : 0)) & 3);
    if (log_i & 1) {
        throw std::invalid_argument("PackedPauli::mul_assign: factors anticommute");
    }
    sign = log_i == 2;
}

std::string PackedPauli::str() const {
    std::string out(1, sign ? '-' : '+');
    for (size_t q = 0; q < num_qubits; q++) {
        out.push_back(pauli_char(letter(q)));
    }
    return out;
}

CliffordTableau::CliffordTableau(size_t num_qubits)
    : n_(num_qubits),
      w_(words_for_bits(num_qubits)),
      xs_(2 * num_qubits * w_, 0),
      zs_(2 * num_qubits * w_, 0),
      signs_(2 * num_qubits, 0) {
    for (size_t q = 0; q < n_; q++) {
        xs_[q * w_ + (q >> 6)] |= uint64_t{1} << (q & 63);
        zs_[(n_ + q) * w_ + (q >> 6)] |= uint64_t{1} << (q & 63);
    }
}

PackedPauli CliffordTableau::row(size_t r) const {
    PackedPauli out(n_);
    auto rx = row_xs(r);
    auto rz = row_zs(r);
    std::copy(rx.begin(), rx.end(), out.xs.begin());
    std::copy(rz.begin(), rz.end(), out.zs.begin());
    out.sign = sign(r);
    return out;
}

void CliffordTableau::set_row(size_t r, const PackedPauli &p) {
    if (p.num_qubits != n_) {
        throw std::invalid_argument("CliffordTableau::set_row: size mismatch");
    }
    std::copy(p.xs.begin(), p.xs.end(), row_xs(r).begin());
    std::copy(p.zs.begin(), p.zs.end(), row_zs(r).begin());
    set_sign(r, p.sign);
}

void CliffordTableau::row_mul(size_t r, size_t src) {
    uint8_t log_i = pauli_mul_inplace(row_xs(r), row_zs(r), row_xs(src), row_zs(src));
    log_i = static_cast<uint8_t>((log_i + (sign(r) ? 2 : 0) + (sign(src) ? 2 : 0)) & 3);
    set_sign(r, (log_i & 2) != 0);
}

void CliffordTableau::apply_h(size_t q) {
    size_t k = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t &x = xs_[r * w_ + k];
        uint64_t &z = zs_[r * w_ + k];
        uint64_t bx = x & m;
        uint64_t bz = z & m;
        if (bx && bz) {
            signs_[r] ^= 1;
        }
        x = (x & ~m) | bz;
        z = (z & ~m) | bx;
    }
}

void CliffordTableau::apply_s(size_t q) {
    size_t k = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t x = xs_[r * w_ + k] & m;
        uint64_t &z = zs_[r * w_ + k];
        if (x && (z & m)) {
            signs_[r] ^= 1;
        }
        z ^= x;
    }
}

void CliffordTableau::apply_s_dag(size_t q) {
    apply_s(q);
    apply_z(q);
}

void CliffordTableau::apply_x(size_t q) {
    size_t k = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        if (zs_[r * w_ + k] & m) {
            signs_[r] ^= 1;
        }
    }
}

void CliffordTableau::apply_y(size_t q) {
    size_t k = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        if ((xs_[r * w_ + k] ^ zs_[r * w_ + k]) & m) {
            signs_[r] ^= 1;
        }
    }
}

void CliffordTableau::apply_z(size_t q) {
    size_t k = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        if (xs_[r * w_ + k] & m) {
            signs_[r] ^= 1;
        }
    }
}

void CliffordTableau::apply_cx(size_t control, size_t target) {
    if (control == target) {
        throw std::invalid_argument("apply_cx: control equals target");
    }
    for (size_t r = 0; r < 2 * n_; r++) {
        bool xc = x_bit(r, control);
        bool zc = z_bit(r, control);
        bool xt = x_bit(r, target);
        bool zt = z_bit(r, target);
        if (xc && zt && (xt == zc)) {
            signs_[r] ^= 1;
        }
        if (xc) {
            xs_[r * w_ + (target >> 6)] ^= uint64_t{1} << (target & 63);
        }
        if (zt) {
            zs_[r * w_ + (control >> 6)] ^= uint64_t{1} << (control & 63);
        }
    }
}

PackedPauli CliffordTableau::conjugate(const PackedPauli &p) const {
    if (p.num_qubits != n_) {
        throw std::invalid_argument("CliffordTableau::conjugate: size mismatch");
    }
    PackedPauli acc(n_);
    unsigned log_i = p.sign ? 2 : 0;
    for (size_t k = 0; k < w_; k++) {
        uint64_t bits = p.xs[k] | p.zs[k];
        while (bits) {
            size_t q = (k << 6) + static_cast<size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            bool bx = p.x(q);
            bool bz = p.z(q);
            if (bx) {
                log_i += pauli_mul_inplace(acc.xs, acc.zs, row_xs(q), row_zs(q)) + (sign(q) ? 2 : 0);
            }
            if (bz) {
                log_i += pauli_mul_inplace(acc.xs, acc.zs, row_xs(n_ + q), row_zs(n_ + q)) + (sign(n_ + q) ? 2 : 0);
            }
            if (bx && bz) {
                // Y = i X Z.
                log_i += 1;
            }
        }
    }
    if (log_i & 1) {
        throw std::logic_error("CliffordTableau::conjugate: tableau is not symplectic");
    }
    acc.sign = (log_i & 2) != 0;
    return acc;
}

CliffordTableau CliffordTableau::then(const CliffordTableau &after) const {
    if (after.n_ != n_) {
        throw std::invalid_argument("CliffordTableau::then: size mismatch");
    }
    CliffordTableau out(n_);
    for (size_t r = 0; r < 2 * n_; r++) {
        out.set_row(r, after.conjugate(row(r)));
    }
    return out;
}

CliffordTableau CliffordTableau::inverse() const {
    CliffordTableau out(n_);
    for (size_t j = 0; j < n_; j++) {
        PackedPauli inv_x(n_);
        PackedPauli inv_z(n_);
        for (size_t i = 0; i < n_; i++) {
            uint64_t m = uint64_t{1} << (i & 63);
            if (z_bit(n_ + i, j)) {
                inv_x.xs[i >> 6] |= m;
            }
            if (z_bit(i, j)) {
                inv_x.zs[i >> 6] |= m;
            }
            if (x_bit(n_ + i, j)) {
                inv_z.xs[i >> 6] |= m;
            }
            if (x_bit(i, j)) {
                inv_z.zs[i >> 6] |= m;
            }
        }
        // The candidate maps to +-X_j (resp. +-Z_j) under U; the sign of that image
        // is the sign the inverse image needs.
        inv_x.sign = conjugate(inv_x).sign;
        inv_z.sign = conjugate(inv_z).sign;
        out.set_row(j, inv_x);
        out.set_row(n_ + j, inv_z);
    }
    return out;
}

bool CliffordTableau::is_symplectic() const {
    for (size_t a = 0; a < 2 * n_; a++) {
        for (size_t b = a + 1; b < 2 * n_; b++) {
            uint64_t acc = 0;
            for (size_t k = 0; k < w_; k++) {
                acc ^= (xs_[a * w_ + k] & zs_[b * w_ + k]) ^ (zs_[a * w_ + k] & xs_[b * w_ + k]);
            }
            bool anti = (std::popcount(acc) & 1) != 0;
            bool want = a < n_ && b == a + n_;
            if (anti != want) {
                return false;
            }
        }
    }
    return true;
}

std::string CliffordTableau::to_text() const {
    std::string out;
    out.reserve(2 * n_ * (4 * n_ + 3));
    for (size_t r = 0; r < 2 * n_; r++) {
        for (size_t q = 0; q < n_; q++) {
            out.push_back(x_bit(r, q) ? '1' : '0');
            out.push_back(' ');
        }
        for (size_t q = 0; q < n_; q++) {
            out.push_back(z_bit(r, q) ? '1' : '0');
            out.push_back(' ');
        }
        out.push_back(sign(r) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

CliffordTableau CliffordTableau::from_text_lines(std::span<const std::string> lines) {
    if (lines.size() % 2 != 0) {
        throw std::invalid_argument("tableau: odd number of rows");
    }
    size_t n = lines.size() / 2;
    CliffordTableau out(n);
    for (size_t r = 0; r < 2 * n; r++) {
        const std::string &line = lines[r];
        std::vector<bool> bits;
        bits.reserve(2 * n + 1);
        size_t pos = 0;
        while (pos < line.size()) {
            char c = line[pos];
            if (c == ' ' || c == '\t' || c == '\r') {
                pos++;
                continue;
            }
            bool is_bit = c == '0' || c == '1';
            bool ends = pos + 1 == line.size() || line[pos + 1] == ' ' || line[pos + 1] == '\t' || line[pos + 1] == '\r';
            if (!is_bit || !ends) {
                throw std::invalid_argument("tableau row " + std::to_string(r) + ": malformed bit token");
            }
            bits.push_back(c == '1');
            pos++;
        }
        if (bits.size() != 2 * n + 1) {
            throw std::invalid_argument(
                "tableau row " + std::to_string(r) + ": expected " + std::to_string(2 * n + 1) + " bits, got " +
                std::to_string(bits.size()));
        }
        PackedPauli p(n);
        for (size_t q = 0; q < n; q++) {
            uint64_t m = uint64_t{1} << (q & 63);
            if (bits[q]) {
                p.xs[q >> 6] |= m;
            }
            if (bits[n + q]) {
                p.zs[q >> 6] |= m;
            }
        }
        p.sign = bits[2 * n];
        out.set_row(r, p);
    }
    if (!out.is_symplectic()) {
        throw std::invalid_argument("tableau: rows violate the symplectic relations");
    }
    return out;
}

}  // namespace shadowkit
