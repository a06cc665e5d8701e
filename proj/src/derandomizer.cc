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

#include "shadowkit/derandomizer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "shadowkit/rng.h"

namespace shadowkit {

double derandomization_nu(double epsilon) {
    return 1.0 - std::exp(-epsilon * epsilon / 2.0);
}

double default_hit_target_epsilon() {
    // 1 - exp(-eps^2 / 2) = 0.1.
    return std::sqrt(-2.0 * std::log(0.9));
}

double cost(const DerandState &state) {
    double total = 0;
    for (size_t j = 0; j < state.observables.size(); j++) {
        const PauliString &o = state.observables[j];
        bool broken = false;
        int unassigned = 0;
        for (size_t q = 0; q < o.size(); q++) {
            if (o[q] == Pauli::I) {
                continue;
            }
            if (state.row[q] == Pauli::I) {
                unassigned++;
            } else if (state.row[q] != o[q]) {
                broken = true;
            }
        }
        double g = broken ? 1.0 : 1.0 - state.nu * std::pow(3.0, -unassigned);
        total += std::pow(1.0 - state.nu, static_cast<double>(state.hits[j])) * g;
    }
    return total;
}

bool row_hits(std::span<const Pauli> row, const PauliString &p) {
    for (size_t q = 0; q < p.size(); q++) {
        if (p[q] != Pauli::I && row[q] != p[q]) {
            return false;
        }
    }
    return true;
}

namespace {

size_t validate_observables(std::span<const PauliString> observables) {
    if (observables.empty()) {
        throw std::invalid_argument("derandomize: empty observable list");
    }
    size_t n = observables.front().size();
    if (n == 0) {
        throw std::invalid_argument("derandomize: observables act on zero qubits");
    }
    for (const auto &o : observables) {
        if (o.size() != n) {
            throw std::invalid_argument("derandomize: observables disagree on qubit count");
        }
    }
    return n;
}

}  // namespace

MeasurementScheme derandomize(std::span<const PauliString> observables, const DerandOptions &opts) {
    size_t n = validate_observables(observables);
    if (opts.budget.has_value() == opts.hit_target.has_value()) {
        throw std::invalid_argument("derandomize: give exactly one of a measurement budget or a hit target");
    }
    if (!(opts.epsilon > 0)) {
        throw std::invalid_argument("derandomize: epsilon must be positive");
    }
    double nu = derandomization_nu(opts.epsilon);
    size_t m = observables.size();

    // Incidence lists: the observables (and their letters) touching each qubit.
    std::vector<std::vector<std::pair<size_t, Pauli>>> touching(n);
    for (size_t j = 0; j < m; j++) {
        for (size_t q = 0; q < n; q++) {
            if (observables[j][q] != Pauli::I) {
                touching[q].emplace_back(j, observables[j][q]);
            }
        }
    }
    std::vector<int> support_size(m);
    for (size_t j = 0; j < m; j++) {
        support_size[j] = static_cast<int>(support(observables[j]));
    }

    DerandState state;
    if (opts.trace) {
        state.observables.assign(observables.begin(), observables.end());
        state.nu = nu;
    }
    std::vector<size_t> hits(m, 0);
    std::vector<double> decay(m);
    std::vector<uint8_t> broken(m);
    std::vector<int> unassigned(m);
    std::vector<double> pow3(n + 1);
    for (size_t u = 0; u <= n; u++) {
        pow3[u] = std::pow(3.0, -static_cast<double>(u));
    }

    MeasurementScheme scheme;
    scheme.num_qubits = n;
    auto done = [&]() {
        if (opts.budget) {
            return scheme.rows.size() >= *opts.budget;
        }
        return *std::min_element(hits.begin(), hits.end()) >= *opts.hit_target;
    };
    while (!done()) {
        if (scheme.rows.size() >= opts.max_rows) {
            throw std::runtime_error("derandomize: hit target not reached within the row limit");
        }
        for (size_t j = 0; j < m; j++) {
            decay[j] = std::pow(1.0 - nu, static_cast<double>(hits[j]));
            broken[j] = 0;
            unassigned[j] = support_size[j];
        }
        std::vector<Pauli> row(n, Pauli::I);
        double running = 0;
        if (opts.trace) {
            for (size_t j = 0; j < m; j++) {
                running += decay[j] * (1.0 - nu * pow3[unassigned[j]]);
            }
        }
        for (size_t q = 0; q < n; q++) {
            // Cost change of each letter, restricted to the observables on q.
            std::array<double, 3> delta{};
            for (size_t c = 0; c < 3; c++) {
                Pauli letter = kMeasurementBases[c];
                double d = 0;
                for (auto [j, want] : touching[q]) {
                    if (broken[j]) {
                        continue;
                    }
                    double old_g = 1.0 - nu * pow3[unassigned[j]];
                    double new_g = want == letter ? 1.0 - nu * pow3[unassigned[j] - 1] : 1.0;
                    d += decay[j] * (new_g - old_g);
                }
                delta[c] = d;
            }
            size_t best = 0;
            for (size_t c = 1; c < 3; c++) {
                if (delta[c] < delta[best]) {
                    best = c;
                }
            }
            if (opts.trace) {
                state.hits = hits;
                state.row = row;
                DerandStep step;
                step.row_index = scheme.rows.size();
                step.qubit = q;
                step.choice = kMeasurementBases[best];
                step.before = running;
                for (size_t c = 0; c < 3; c++) {
                    step.candidate_costs[c] = running + delta[c];
                }
                opts.trace(state, step);
                running += delta[best];
            }
            Pauli letter = kMeasurementBases[best];
            row[q] = letter;
            for (auto [j, want] : touching[q]) {
                if (broken[j]) {
                    continue;
                }
                if (want == letter) {
                    unassigned[j]--;
                } else {
                    broken[j] = 1;
                }
            }
        }
        for (size_t j = 0; j < m; j++) {
            if (!broken[j]) {
                hits[j]++;
            }
        }
        scheme.rows.push_back(std::move(row));
    }
    return scheme;
}

std::vector<size_t> hit_counts(std::span<const PauliString> observables, const MeasurementScheme &scheme) {
    std::vector<size_t> hits(observables.size(), 0);
    for (const auto &row : scheme.rows) {
        for (size_t j = 0; j < observables.size(); j++) {
            if (row_hits(row, observables[j])) {
                hits[j]++;
            }
        }
    }
    return hits;
}

size_t min_hits(std::span<const PauliString> observables, const MeasurementScheme &scheme) {
    auto h = hit_counts(observables, scheme);
    return h.empty() ? 0 : *std::min_element(h.begin(), h.end());
}

namespace {

constexpr uint64_t kRandomRowsStream = stream_label("random-rows");

std::vector<Pauli> random_row(size_t n, uint64_t seed, size_t index) {
    RngStream rng(seed, kRandomRowsStream, index);
    std::vector<Pauli> row(n);
    for (size_t q = 0; q < n; q++) {
        row[q] = kMeasurementBases[rng.below(3)];
    }
    return row;
}

}  // namespace

size_t random_rows_to_hit_target(std::span<const PauliString> observables, size_t target, uint64_t seed, size_t max_rows) {
    size_t n = validate_observables(observables);
    std::vector<size_t> hits(observables.size(), 0);
    size_t rows = 0;
    while (*std::min_element(hits.begin(), hits.end()) < target) {
        if (rows >= max_rows) {
            throw std::runtime_error("random_rows_to_hit_target: row limit reached");
        }
        auto row = random_row(n, seed, rows);
        for (size_t j = 0; j < observables.size(); j++) {
            if (row_hits(row, observables[j])) {
                hits[j]++;
            }
        }
        rows++;
    }
    return rows;
}

size_t random_rows_min_hits(std::span<const PauliString> observables, size_t rows, uint64_t seed) {
    size_t n = validate_observables(observables);
    MeasurementScheme scheme;
    scheme.num_qubits = n;
    for (size_t i = 0; i < rows; i++) {
        scheme.rows.push_back(random_row(n, seed, i));
    }
    return min_hits(observables, scheme);
}

std::vector<PauliString> schwinger_observables(size_t n_sites) {
    if (n_sites < 4 || n_sites % 2 != 0) {
        throw std::invalid_argument("schwinger_observables: need an even number of sites, at least 4");
    }
    size_t big_n = n_sites;
    std::set<PauliString> out;
    // Indices below are 1-based as in the model definition; qubit = index - 1.
    auto make = [&](std::initializer_list<std::pair<size_t, Pauli>> sites) {
        PauliString p(big_n);
        for (auto [j, l] : sites) {
            p.set(j - 1, l);
        }
        out.insert(p);
    };
    const Pauli X = Pauli::X;
    const Pauli Y = Pauli::Y;
    const Pauli Z = Pauli::Z;
    for (size_t j = 1; j <= big_n - 1; j++) {
        for (size_t jp = 1; jp <= big_n - 1; jp++) {
            if (j != jp && j != jp + 1 && j + 1 != jp) {
                make({{j, X}, {j + 1, X}, {jp, Y}, {jp + 1, Y}});
            }
            if (j != jp && j + 1 != jp) {
                make({{j, X}, {j + 1, X}, {jp, Z}});
                make({{j, Y}, {j + 1, Y}, {jp, Z}});
            }
            for (size_t jpp = jp + 1; jpp <= big_n - 1; jpp++) {
                if (j != jp && j != jpp && j + 1 != jp && j + 1 != jpp) {
                    make({{j, X}, {j + 1, X}, {jp, Z}, {jpp, Z}});
                    make({{j, Y}, {j + 1, Y}, {jp, Z}, {jpp, Z}});
                }
            }
        }
    }
    for (size_t j = 1; j <= big_n - 1; j++) {
        make({{j, X}, {j + 1, X}});
        make({{j, Y}, {j + 1, Y}});
    }
    for (size_t j = 1; j <= big_n; j++) {
        make({{j, Z}});
    }
    for (size_t j = 1; j <= big_n - 2; j++) {
        for (size_t jp = j + 1; jp <= big_n - 1; jp++) {
            make({{j, Z}, {jp, Z}});
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace shadowkit
