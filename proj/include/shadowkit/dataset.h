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

#ifndef SHADOWKIT_DATASET_H
#define SHADOWKIT_DATASET_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "shadowkit/pauli.h"
#include "shadowkit/tableau.h"

namespace shadowkit {

enum class Primitive { pauli, clifford };

std::string_view primitive_name(Primitive p);
/// Accepts "pauli" or "clifford".
Primitive parse_primitive(std::string_view text);

/// One random-Pauli record: the basis letter and outcome bit of every qubit.
/// `group` is the scheme row that produced it, or -1 for i.i.d. bases.
struct PauliSnapshot {
    std::vector<Pauli> bases;
    std::vector<uint8_t> bits;
    int64_t group = -1;

    bool operator==(const PauliSnapshot &) const = default;
};

/// One random-Clifford record, stored before channel inversion.
struct CliffordSnapshot {
    CliffordTableau unitary;
    std::vector<uint8_t> bits;

    bool operator==(const CliffordSnapshot &) const = default;
};

struct DatasetHeader {
    Primitive kind = Primitive::pauli;
    size_t num_qubits = 0;
    uint64_t seed = 0;
    std::string state;
    /// Command line that produced the data; empty when not recorded.
    std::string config;

    bool operator==(const DatasetHeader &) const = default;
};

/// A classical shadow. Exactly one of the two snapshot lists is used, according to
/// header.kind.
struct ShadowDataset {
    DatasetHeader header;
    std::vector<PauliSnapshot> pauli;
    std::vector<CliffordSnapshot> clifford;

    size_t size() const {
        return header.kind == Primitive::pauli ? pauli.size() : clifford.size();
    }
    /// True when every Pauli snapshot carries a scheme row tag.
    bool grouped() const;

    bool operator==(const ShadowDataset &) const = default;
};

/// Fixed list of Pauli basis assignments, each measured `repetitions` times.
struct MeasurementScheme {
    size_t num_qubits = 0;
    std::vector<std::vector<Pauli>> rows;
    size_t repetitions = 1;

    bool operator==(const MeasurementScheme &) const = default;
};

}  // namespace shadowkit

#endif
