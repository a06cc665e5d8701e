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

#ifndef SHADOWKIT_DENSE_H
#define SHADOWKIT_DENSE_H

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string_view>

#include "shadowkit/pauli.h"
#include "shadowkit/rng.h"
#include "shadowkit/stabilizer.h"

namespace shadowkit {

// Dense conventions: qubit q is bit q of the basis-state index (little endian), so
// kron_qubits places factor 0 in the least significant position.

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr size_t kDefaultDenseCap = 14;

/// Throws std::invalid_argument naming `what` when n exceeds cap.
void require_dense(size_t n, size_t cap, std::string_view what);

Matrix2 single_qubit_pauli(Pauli p);
/// Unitary R_B with R_B B R_B^dag = Z: I for Z, H for X, H S^dag for Y. Measuring
/// Z after R_B measures B.
Matrix2 basis_rotation(Pauli basis);
/// Eigenprojector (I + (-1)^bit B) / 2.
Matrix2 basis_projector(Pauli basis, uint8_t bit);

CMatrix kron_qubits(std::span<const Matrix2> factors);
CMatrix pauli_matrix(const PauliString &p);
CMatrix pauli_matrix(const PackedPauli &p);
CVector apply_pauli(const PackedPauli &p, const CVector &v);
/// In-place single-qubit gate on an n-qubit statevector.
void apply_single_qubit(CVector &v, size_t q, const Matrix2 &u);

/// Amplitudes of a stabilizer state (global phase arbitrary). Throws above cap.
CVector stabilizer_statevector(const StabilizerState &s, size_t cap = kDefaultDenseCap);

/// Reduced density matrix on `keep`; output bit j corresponds to qubit keep[j].
CMatrix partial_trace(const CMatrix &rho, size_t n, std::span<const size_t> keep);

/// Haar-random 2x2 unitary: Gram-Schmidt on a complex Gaussian matrix.
Matrix2 haar_unitary_2x2(RngStream &rng);

}  // namespace shadowkit

#endif
