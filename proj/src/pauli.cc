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

#include "shadowkit/pauli.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace shadowkit {

char pauli_char(Pauli p) {
    static constexpr char kChars[4] = {'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<uint8_t>(p)];
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
    }
}

PauliString PauliString::from_text(std::string_view text) {
    std::vector<Pauli> letters;
    letters.reserve(text.size());
    for (char c : text) {
        letters.push_back(pauli_from_char(c));
    }
    return PauliString(std::move(letters));
}

std::vector<size_t> PauliString::support_indices() const {
    std::vector<size_t> out;
    for (size_t q = 0; q < letters_.size(); q++) {
        if (letters_[q] != Pauli::I) {
            out.push_back(q);
        }
    }
    return out;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Pauli p : letters_) {
        out.push_back(pauli_char(p));
    }
    return out;
}

size_t support(const PauliString &p) {
    return static_cast<size_t>(std::count_if(p.letters().begin(), p.letters().end(), [](Pauli l) {
        return l != Pauli::I;
    }));
}

uint64_t match_factor(const PauliString &p, const PauliString &q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("match_factor: length mismatch");
    }
    uint64_t factor = 1;
    for (size_t i = 0; i < p.size(); i++) {
        if (p[i] == Pauli::I || q[i] == Pauli::I) {
            continue;
        }
        if (p[i] != q[i]) {
            return 0;
        }
        factor *= 3;
    }
    return factor;
}

WeightedPauliSum::WeightedPauliSum(size_t num_qubits, std::vector<PauliTerm> terms) : num_qubits_(num_qubits) {
    std::map<PauliString, double> merged;
    for (auto &t : terms) {
        if (t.string.size() != num_qubits) {
            throw std::invalid_argument(
                "pauli term has " + std::to_string(t.string.size()) + " letters, expected " +
                std::to_string(num_qubits));
        }
        merged[t.string] += t.weight;
    }
    terms_.reserve(merged.size());
    for (auto &[s, w] : merged) {
        terms_.push_back({w, s});
    }
}

WeightedPauliSum WeightedPauliSum::single(double weight, PauliString string) {
    size_t n = string.size();
    return WeightedPauliSum(n, {{weight, std::move(string)}});
}

size_t WeightedPauliSum::locality() const {
    size_t k = 0;
    for (const auto &t : terms_) {
        k = std::max(k, support(t.string));
    }
    return k;
}

std::vector<size_t> WeightedPauliSum::support_indices() const {
    std::vector<bool> used(num_qubits_, false);
    for (const auto &t : terms_) {
        for (size_t q : t.string.support_indices()) {
            used[q] = true;
        }
    }
    std::vector<size_t> out;
    for (size_t q = 0; q < num_qubits_; q++) {
        if (used[q]) {
            out.push_back(q);
        }
    }
    return out;
}

double WeightedPauliSum::hs_norm_sq() const {
    double s = 0;
    for (const auto &t : terms_) {
        s += t.weight * t.weight;
    }
    return std::ldexp(s, static_cast<int>(num_qubits_));
}

double WeightedPauliSum::identity_weight() const {
    for (const auto &t : terms_) {
        if (support(t.string) == 0) {
            return t.weight;
        }
    }
    return 0.0;
}

double pauli_sum_avg_variance(const WeightedPauliSum &o) {
    double total = 0;
    for (const auto &t : o.terms()) {
        total += t.weight * t.weight * std::pow(3.0, static_cast<double>(support(t.string)));
    }
    return total;
}

}  // namespace shadowkit
