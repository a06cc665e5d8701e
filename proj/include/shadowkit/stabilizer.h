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

#ifndef SHADOWKIT_STABILIZER_H
#define SHADOWKIT_STABILIZER_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shadowkit/rng.h"
#include "shadowkit/tableau.h"

namespace shadowkit {

/// Stabilizer state C|0^n> in CHP form: destabilizers are the tableau rows [0, n)
/// and stabilizers the rows [n, 2n).
class StabilizerState {
   public:
    StabilizerState() = default;
    /// |0^n>.
    explicit StabilizerState(size_t num_qubits) : tableau_(num_qubits) {
    }
    explicit StabilizerState(CliffordTableau preparation) : tableau_(std::move(preparation)) {
    }

    /// Builds a state from n independent commuting signed generators, constructing
    /// matching destabilizers. Throws std::invalid_argument on dependent,
    /// anticommuting or wrongly sized generators, or on a set containing -I.
    static StabilizerState from_generators(std::span<const PackedPauli> stabilizers);

    size_t num_qubits() const {
        return tableau_.num_qubits();
    }
    const CliffordTableau &tableau() const {
        return tableau_;
    }
    CliffordTableau &tableau() {
        return tableau_;
    }
    PackedPauli stabilizer(size_t i) const {
        return tableau_.row(num_qubits() + i);
    }
    PackedPauli destabilizer(size_t i) const {
        return tableau_.row(i);
    }
    /// Stabilizers commute pairwise, destabilizer i anticommutes exactly with
    /// stabilizer i, destabilizers commute pairwise.
    bool is_valid() const {
        return tableau_.is_symplectic();
    }

   private:
    CliffordTableau tableau_;
};

/// Returns u|psi>. Throws on size mismatch.
StabilizerState apply_clifford(const StabilizerState &state, const CliffordTableau &u);

/// Z-basis measurement of qubit q on a CHP tableau, updating it to the post-
/// measurement state. When `forced` is set a random outcome takes that value;
/// otherwise it is drawn from rng. Returns (outcome, was_random).
std::pair<uint8_t, bool> measure_z_inplace(
    CliffordTableau &t, size_t q, RngStream *rng, std::optional<uint8_t> forced = std::nullopt);

/// Samples all n qubits in the Z basis; bit q of the result is qubit q.
std::vector<uint8_t> measure_all_z(StabilizerState &&state, RngStream &rng);

/// |<b|psi>|^2 for a computational basis state b.
double outcome_probability(const StabilizerState &state, std::span<const uint8_t> bits);

/// |<a|b>|^2. Either 0 or 2^-s.
double stabilizer_overlap_sq(const StabilizerState &a, const StabilizerState &b);

/// <psi|P|psi> in {-1, 0, +1}.
int pauli_expectation(const StabilizerState &state, const PackedPauli &p);

/// (|0..0> + |1..1>)/sqrt(2), or with a minus sign when `minus` is set.
StabilizerState ghz_state(size_t n, bool minus = false);

/// Toric code ground state on an Lx x Ly torus with 2 Lx Ly edge qubits.
/// Edge (x, y) horizontal has index y Lx + x, vertical Lx Ly + y Lx + x.
/// Stabilized by all but one star (X) and all but one plaquette (Z), plus the two
/// Z loops along row y = 0 (horizontal edges) and column x = 0 (vertical edges).
StabilizerState toric_code_state(size_t lx, size_t ly);

}  // namespace shadowkit

#endif
