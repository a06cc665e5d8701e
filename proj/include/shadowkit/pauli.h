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

#ifndef SHADOWKIT_PAULI_H
#define SHADOWKIT_PAULI_H

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shadowkit {

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr Pauli kMeasurementBases[3] = {Pauli::X, Pauli::Y, Pauli::Z};

char pauli_char(Pauli p);
/// Accepts I, X, Y, Z (upper case only). Throws std::invalid_argument otherwise.
Pauli pauli_from_char(char c);

/// Phase-free tensor product of single-qubit Paulis. Signs live in the weights of
/// WeightedPauliSum, never in the string itself.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits) : letters_(num_qubits, Pauli::I) {
    }
    explicit PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {
    }

    /// Parses dense text such as "XIZI".
    static PauliString from_text(std::string_view text);

    size_t size() const {
        return letters_.size();
    }
    Pauli operator[](size_t q) const {
        return letters_[q];
    }
    void set(size_t q, Pauli p) {
        letters_[q] = p;
    }
    std::span<const Pauli> letters() const {
        return letters_;
    }
    /// Qubit indices carrying a non-identity letter, ascending.
    std::vector<size_t> support_indices() const;
    std::string str() const;

    auto operator<=>(const PauliString &) const = default;
    bool operator==(const PauliString &) const = default;

   private:
    std::vector<Pauli> letters_;
};

/// Number of non-identity letters.
size_t support(const PauliString &p);

/// Combinatorial factor of the single-qubit Pauli-basis second moment: 0 when some
/// site carries two distinct non-identity letters, otherwise 3^s where s counts the
/// sites with equal non-identity letters. Throws on length mismatch.
uint64_t match_factor(const PauliString &p, const PauliString &q);

struct PauliTerm {
    double weight = 0.0;
    PauliString string;
    bool operator==(const PauliTerm &) const = default;
};

/// Real-weighted sum of Pauli strings on a fixed number of qubits. Duplicate strings
/// are merged at construction, so term strings are unique and sorted.
class WeightedPauliSum {
   public:
    WeightedPauliSum() = default;
    WeightedPauliSum(size_t num_qubits, std::vector<PauliTerm> terms);
    static WeightedPauliSum single(double weight, PauliString string);

    size_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const PauliTerm> terms() const {
        return terms_;
    }
    /// Largest support among the terms (0 for an empty sum).
    size_t locality() const;
    /// Union of the supports of all terms.
    std::vector<size_t> support_indices() const;
    /// tr(O^2) = 2^n sum w^2.
    double hs_norm_sq() const;
    /// Weight of the identity string, 0 if absent.
    double identity_weight() const;

   private:
    size_t num_qubits_ = 0;
    std::vector<PauliTerm> terms_;
};

/// sum_p w_p^2 3^{support(p)}: the single-snapshot second moment of the Pauli-basis
/// estimator on the maximally mixed state. Diagnostic only.
double pauli_sum_avg_variance(const WeightedPauliSum &o);

}  // namespace shadowkit

#endif
