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

#ifndef SHADOWKIT_WITNESS_DEMO_H
#define SHADOWKIT_WITNESS_DEMO_H

#include <cstdint>
#include <string>
#include <vector>

namespace shadowkit {

struct WitnessDemoOptions {
    uint64_t seed = 0;
    size_t witnesses = 50;
    size_t shots = 5000;
    size_t k = 10;
    /// Accuracy and failure probability that the direct-measurement baseline must match.
    double epsilon = 0.1;
    double delta = 0.05;
    bool parallel = true;
};

struct WitnessRow {
    size_t index = 0;
    double truth = 0;
    double estimate = 0;
};

struct WitnessDemoResult {
    WitnessDemoOptions options;
    std::vector<WitnessRow> rows;
    /// Shots for one witness measured directly as a two-outcome POVM {O, I - O}.
    size_t direct_shots_per_witness = 0;
    size_t direct_shots_total = 0;
    size_t shadow_shots_total = 0;
    double max_abs_error = 0;
};

/// Hoeffding count for estimating M Bernoulli means to within epsilon, all at once
/// with probability 1 - delta: ceil(ln(2M / delta) / (2 epsilon^2)) per witness.
size_t direct_witness_shots(size_t witnesses, double epsilon, double delta);

/// Draws one locally rotated 3-qubit GHZ state and `witnesses` rotated-GHZ
/// projectors, estimates every witness from a single Clifford shadow, and
/// compares with the dense values and with the direct-measurement shot budget.
WitnessDemoResult run_witness_demo(const WitnessDemoOptions &options);

/// Key=value summary followed by one "witness=..." line per witness.
std::string witness_report_text(const WitnessDemoResult &result, const std::string &config);
std::string witness_report_csv(const WitnessDemoResult &result);

}  // namespace shadowkit

#endif
