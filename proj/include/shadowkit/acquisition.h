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

#ifndef SHADOWKIT_ACQUISITION_H
#define SHADOWKIT_ACQUISITION_H

#include <cstdint>
#include <functional>
#include <string>

#include "shadowkit/dataset.h"
#include "shadowkit/oracle.h"

namespace shadowkit {

// Stream labels. Shot i draws its randomness from RngStream(seed, label, i), so a
// shot's record does not depend on which thread produced it or in which order.
inline constexpr uint64_t kBasisStream = stream_label("basis");
inline constexpr uint64_t kCliffordStream = stream_label("clifford");
inline constexpr uint64_t kOutcomeStream = stream_label("outcome");
inline constexpr uint64_t kSchemeStream = stream_label("scheme");

struct AcquireOptions {
    /// Run the shot loop with OpenMP. The serial path is the reference; both
    /// produce identical datasets.
    bool parallel = true;
    /// Copied into the dataset header.
    std::string state_descriptor;
    /// Test hook: when set, replaces the random Clifford of each shot.
    std::function<CliffordTableau(size_t shot, size_t n)> clifford_override;
};

/// N snapshots with i.i.d. uniform bases per qubit (drawn qubit-major).
ShadowDataset acquire_pauli(const StateOracle &state, size_t shots, uint64_t seed, const AcquireOptions &opts = {});

/// N snapshots with uniformly random n-qubit Cliffords.
ShadowDataset acquire_clifford(const StateOracle &state, size_t shots, uint64_t seed, const AcquireOptions &opts = {});

/// rows x repetitions Pauli snapshots, each tagged with its row index and stored
/// row-major (all repetitions of row 0 first).
ShadowDataset acquire_scheme(
    const StateOracle &state, const MeasurementScheme &scheme, uint64_t seed, const AcquireOptions &opts = {});

/// Scheme with `rows` uniformly random basis rows, each repeated `repetitions`
/// times (the N_U x N_M grid of the repeated-measurement protocol).
MeasurementScheme random_scheme(size_t n, size_t rows, size_t repetitions, uint64_t seed);

}  // namespace shadowkit

#endif
