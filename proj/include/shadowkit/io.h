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

#ifndef SHADOWKIT_IO_H
#define SHADOWKIT_IO_H

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shadowkit/dataset.h"
#include "shadowkit/linear.h"
#include "shadowkit/nonlinear.h"
#include "shadowkit/oracle.h"
#include "shadowkit/planner.h"

namespace shadowkit {

/// Malformed input. `line` is 1-based, or 0 when the problem is not tied to a line.
class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, const std::string &message);
    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

/// File system failure (missing input, unwritable output).
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

// Shadow files.
//   # shadow v1 kind=<pauli|clifford> n=<n> seed=<u64> state=<descriptor>
//   # config <command line>            (optional)
// then per Pauli snapshot one line "[g=<row> ]X0 Z1 Y1", or per Clifford snapshot
// "b <bits>" followed by the 2n tableau lines.
std::string serialize_shadow(const ShadowDataset &ds);
ShadowDataset parse_shadow(std::string_view text);

/// Observables file: "# observables v1 n=<n>", then one term per line
/// "<weight> <k> <L1> <q1> ... <Lk> <qk>". Terms keep file order and are not merged.
struct ObservableList {
    size_t num_qubits = 0;
    std::vector<PauliTerm> terms;
    bool operator==(const ObservableList &) const = default;
};
std::string serialize_observables(const ObservableList &obs);
ObservableList parse_observables(std::string_view text);

/// Scheme file: "# scheme v1 n=<n>" with an optional " reps=<R>", then one row of n
/// space-separated letters per line.
std::string serialize_scheme(const MeasurementScheme &scheme);
MeasurementScheme parse_scheme(std::string_view text);

/// Subsystem file: "# subsystems v1 n=<n>", then one line of qubit indices each.
struct SubsystemList {
    size_t num_qubits = 0;
    std::vector<std::vector<size_t>> subsystems;
    bool operator==(const SubsystemList &) const = default;
};
std::string serialize_subsystems(const SubsystemList &list);
SubsystemList parse_subsystems(std::string_view text);

/// Dense state file: "# state v1 n=<n>", then 2^n lines "<re> <im>".
std::string serialize_dense_state(const CVector &amplitudes);
CVector parse_dense_state(std::string_view text);

/// Builds an oracle from `ghz:<n>`, `ghz-noisy:<n>:<p>`, `toric:<Lx>x<Ly>`,
/// `singlets:<n>`, `zero:<n>` or `dense:<path>`.
StateOracle parse_state_descriptor(std::string_view descriptor, size_t dense_cap = kDefaultDenseCap);
/// The projector onto a pure descriptor state, as a fidelity target: stabilizer
/// states stay symbolic, `dense:` states become a dense projector. Throws for mixed
/// states.
LinearTarget target_from_descriptor(std::string_view descriptor, size_t dense_cap = kDefaultDenseCap);

// Reports. Each comes as key=value records and a CSV twin.
std::string linear_report_text(const EstimationReport &report);
std::string linear_report_csv(const EstimationReport &report);
std::string entropy_report_text(const DatasetHeader &header, std::span<const EntropyRow> rows);
std::string entropy_report_csv(std::span<const EntropyRow> rows);
std::string plan_report_text(const SamplePlan &plan);

/// Inserts "# config <config>" after the header line of a serialized file. The
/// observables, scheme and subsystem parsers skip such a line.
std::string with_config_line(std::string_view text, std::string_view config);

std::string read_file(const std::filesystem::path &path);
/// Writes to a temporary sibling, then renames over the destination.
void write_file_atomic(const std::filesystem::path &path, std::string_view content);

}  // namespace shadowkit

#endif
