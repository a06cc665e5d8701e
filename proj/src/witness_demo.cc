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

#include "shadowkit/witness_demo.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "shadowkit/acquisition.h"
#include "shadowkit/io.h"
#include "shadowkit/linear.h"
#include "shadowkit/oracle.h"

namespace shadowkit {

size_t direct_witness_shots(size_t witnesses, double epsilon, double delta) {
    if (witnesses == 0 || !(epsilon > 0) || !(delta > 0 && delta < 1)) {
        throw std::invalid_argument("direct_witness_shots: need M >= 1, epsilon > 0 and 0 < delta < 1");
    }
    double m = static_cast<double>(witnesses);
    return static_cast<size_t>(std::ceil(std::log(2 * m / delta) / (2 * epsilon * epsilon) - 1e-12));
}

WitnessDemoResult run_witness_demo(const WitnessDemoOptions &options) {
    if (options.witnesses == 0 || options.shots == 0 || options.k == 0) {
        throw std::invalid_argument("witness demo: witnesses, shots and K must be positive");
    }
    if (options.k > options.shots) {
        throw std::invalid_argument("witness demo: K exceeds the number of shots");
    }
    RngStream rng(options.seed, stream_label("witness"), 0);
    std::vector<WitnessSpec> specs;
    std::optional<StateOracle> state;
    for (size_t i = 0; i < options.witnesses; i++) {
        auto [s, w] = rotated_ghz_witness(rng);
        if (!state) {
            state = std::move(s);
        }
        specs.push_back(w);
    }

    std::vector<LinearTarget> targets;
    for (const auto &w : specs) {
        targets.push_back(DenseObservable{{0, 1, 2}, witness_operator(w)});
    }
    AcquireOptions acq;
    acq.parallel = options.parallel;
    acq.state_descriptor = "rotated-ghz:3";
    ShadowDataset ds = acquire_clifford(*state, options.shots, options.seed, acq);
    EstimationReport report = predict_linear(ds, targets, options.k, {}, options.parallel);

    WitnessDemoResult result;
    result.options = options;
    for (size_t i = 0; i < specs.size(); i++) {
        WitnessRow row{i, witness_value(specs[i], *state), report.rows[i].estimate};
        result.max_abs_error = std::max(result.max_abs_error, std::abs(row.estimate - row.truth));
        result.rows.push_back(row);
    }
    result.direct_shots_per_witness = direct_witness_shots(options.witnesses, options.epsilon, options.delta);
    result.direct_shots_total = result.direct_shots_per_witness * options.witnesses;
    result.shadow_shots_total = options.shots;
    return result;
}

std::string witness_report_text(const WitnessDemoResult &r, const std::string &config) {
    const auto &o = r.options;
    std::string out = "# report v1 kind=witness seed=" + std::to_string(o.seed) + "\n";
    if (!config.empty()) {
        out += "# config " + config + "\n";
    }
    out += "M=" + std::to_string(o.witnesses) + "\n";
    out += "K=" + std::to_string(o.k) + "\n";
    out += "epsilon=" + format_double(o.epsilon) + "\n";
    out += "delta=" + format_double(o.delta) + "\n";
    out += "shadow_shots_total=" + std::to_string(r.shadow_shots_total) + "\n";
    out += "direct_shots_per_witness=" + std::to_string(r.direct_shots_per_witness) + "\n";
    out += "direct_shots_total=" + std::to_string(r.direct_shots_total) + "\n";
    out += "max_abs_error=" + format_double(r.max_abs_error) + "\n";
    for (const auto &row : r.rows) {
        out += "witness=" + std::to_string(row.index) + " truth=" + format_double(row.truth) +
               " estimate=" + format_double(row.estimate) + "\n";
    }
    return out;
}

std::string witness_report_csv(const WitnessDemoResult &r) {
    std::string out = "witness,truth,estimate,abs_error,shadow_shots_total,direct_shots_total\n";
    for (const auto &row : r.rows) {
        out += std::to_string(row.index) + "," + format_double(row.truth) + "," + format_double(row.estimate) + "," +
               format_double(std::abs(row.estimate - row.truth)) + "," + std::to_string(r.shadow_shots_total) + "," +
               std::to_string(r.direct_shots_total) + "\n";
    }
    return out;
}

}  // namespace shadowkit
