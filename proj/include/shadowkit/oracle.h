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

#ifndef SHADOWKIT_ORACLE_H
#define SHADOWKIT_ORACLE_H

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "shadowkit/dense.h"
#include "shadowkit/rng.h"
#include "shadowkit/stabilizer.h"

namespace shadowkit {

enum class OracleKind { stabilizer, dense, mixture, singlet_chain };

/// Stand-in for an unknown quantum state. Sampling is the only way estimators
/// touch it; density_matrix() exists for tests and small-n reference values.
class StateOracle {
   public:
    static StateOracle stabilizer(StabilizerState state);
    /// Normalized amplitude vector (checked to 1e-10); n must not exceed cap.
    static StateOracle dense(CVector amplitudes, size_t cap = kDefaultDenseCap);
    /// Probabilities must be nonnegative and sum to 1 within 1e-10; components
    /// must share n.
    static StateOracle mixture(std::vector<std::pair<double, StateOracle>> components);
    /// Product of singlets (|01> - |10>)/sqrt(2) on the given pairs, which must be a
    /// perfect matching of {0..n-1}.
    static StateOracle singlet_chain(size_t n, std::vector<std::pair<size_t, size_t>> pairing);

    OracleKind kind() const {
        return kind_;
    }
    size_t num_qubits() const {
        return n_;
    }
    size_t dense_cap() const {
        return cap_;
    }
    /// Stabilizer payload; also populated for singlet chains.
    const StabilizerState &stabilizer_state() const {
        return stabilizer_;
    }
    const CVector &amplitudes() const {
        return amplitudes_;
    }
    std::span<const double> weights() const {
        return weights_;
    }
    std::span<const StateOracle> components() const {
        return components_;
    }
    std::span<const std::pair<size_t, size_t>> pairing() const {
        return pairing_;
    }
    /// Index of a mixture component drawn with the mixture weights.
    size_t sample_component(RngStream &rng) const;

   private:
    OracleKind kind_ = OracleKind::stabilizer;
    size_t n_ = 0;
    size_t cap_ = kDefaultDenseCap;
    StabilizerState stabilizer_;
    CVector amplitudes_;
    std::vector<double> weights_;
    std::vector<StateOracle> components_;
    std::vector<std::pair<size_t, size_t>> pairing_;
};

/// (1 - p) GHZ+ + p GHZ-, both as stabilizer states.
StateOracle noisy_ghz(size_t n, double p);
/// Singlets on (0,1), (2,3), ...
StateOracle singlet_chain(size_t n);

/// Measures qubit q in basis bases[q]; bit 0 is the +1 eigenvalue.
std::vector<uint8_t> measure_in_bases(const StateOracle &state, std::span<const Pauli> bases, RngStream &rng);
/// Applies u and measures all qubits in the Z basis.
std::vector<uint8_t> measure_after_clifford(const StateOracle &state, const CliffordTableau &u, RngStream &rng);
/// Dense density matrix. Throws when n exceeds the cap.
CMatrix density_matrix(const StateOracle &state, size_t cap = kDefaultDenseCap);

/// Candidate witness V_A (x) V_B (x) V_C |GHZ+><GHZ+| (...)^dag on three qubits.
struct WitnessSpec {
    std::array<Matrix2, 3> rotations;
};

/// Throws unless each rotation is unitary within 1e-10.
void validate_witness(const WitnessSpec &w);
CVector witness_vector(const WitnessSpec &w);
CMatrix witness_operator(const WitnessSpec &w);
/// tr(O rho), evaluated densely.
double witness_value(const WitnessSpec &w, const StateOracle &state);
/// A GHZ+ state rotated by three independent Haar single-qubit unitaries, and an
/// independently drawn witness. The state is returned in dense form.
std::pair<StateOracle, WitnessSpec> rotated_ghz_witness(RngStream &rng);
/// The dense state V_A (x) V_B (x) V_C |GHZ+>.
StateOracle rotated_ghz_state(const WitnessSpec &rotations);

}  // namespace shadowkit

#endif
