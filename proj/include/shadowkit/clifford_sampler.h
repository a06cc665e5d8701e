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

#ifndef SHADOWKIT_CLIFFORD_SAMPLER_H
#define SHADOWKIT_CLIFFORD_SAMPLER_H

#include "shadowkit/rng.h"
#include "shadowkit/tableau.h"

namespace shadowkit {

/// Uniformly random n-qubit Clifford modulo global phase.
///
/// Builds the symplectic part one generator pair at a time: X_i maps to a uniform
/// nonzero vector P of the remaining symplectic subspace and Z_i to a uniform vector
/// Q in that subspace with omega(P, Q) = 1. The subspace then shrinks to the
/// symplectic complement of span{P, Q}. Signs are independent fair bits. Every
/// tableau has probability 1 / |Sp(2n)| / 2^(2n).
CliffordTableau random_clifford(size_t n, RngStream &rng);

}  // namespace shadowkit

#endif
