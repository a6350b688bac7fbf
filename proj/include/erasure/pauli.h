// Copyright 2026 The Erasure Threshold Authors
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

#ifndef ERASURE_PAULI_H
#define ERASURE_PAULI_H

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace erasure {

constexpr int kNumQubits = 7;

/// Bit mask over the 7 qubits. Qubit q (1-based, leftmost tensor factor is
/// qubit 1) is bit q-1.
using QubitSet = std::uint8_t;

constexpr QubitSet kAllQubits = 0x7F;

constexpr QubitSet qubit_bit(int qubit) {
    return static_cast<QubitSet>(1u << (qubit - 1));
}

int popcount(QubitSet s);
/// Parses "{1,2,3}" style lists or a bare "123".
QubitSet qubit_set_from_string(std::string_view text);
std::string qubit_set_to_string(QubitSet s);

/// 7-qubit Pauli operator in binary-symplectic form, phase dropped.
struct Pauli {
    QubitSet x = 0;
    QubitSet z = 0;

    static Pauli from_string(std::string_view text);
    std::string str() const;

    QubitSet support() const {
        return x | z;
    }
    int weight() const {
        return popcount(support());
    }
    bool is_identity() const {
        return support() == 0;
    }
    bool is_x_type() const {
        return z == 0;
    }
    bool is_z_type() const {
        return x == 0;
    }

    Pauli operator*(const Pauli &other) const {
        return {static_cast<QubitSet>(x ^ other.x), static_cast<QubitSet>(z ^ other.z)};
    }
    bool operator==(const Pauli &) const = default;
};

/// 0 iff p and q commute.
int symplectic_product(const Pauli &p, const Pauli &q);

enum class PauliType { XType, ZType };

class StabilizerGroup {
   public:
    /// Throws std::invalid_argument if two generators anticommute.
    explicit StabilizerGroup(std::vector<Pauli> generators);

    const std::vector<Pauli> &generators() const {
        return generators_;
    }
    /// All products of generator subsets, deduplicated, identity first.
    const std::vector<Pauli> &elements() const {
        return elements_;
    }
    bool contains(const Pauli &p) const;

   private:
    std::vector<Pauli> generators_;
    std::vector<Pauli> elements_;
};

/// The six generators M1..M6 of the [[7,1,3]] code, X-type first.
const StabilizerGroup &steane_stabilizers();

/// The transversal logical X (or Z) times every stabilizer element of the
/// same type: the 8 pure-type logical representatives.
std::vector<Pauli> logical_coset(PauliType type);

/// Pure-type operators commuting with every stabilizer generator (16 each:
/// the 8 same-type stabilizers and the 8 logicals).
std::vector<Pauli> type_normalizer(PauliType type);

/// True iff some X-type or Z-type logical operator is supported inside `support`.
bool supports_logical(QubitSet support);

struct NoCoveringStabilizer : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The X-type and Z-type stabilizer elements whose support is exactly the
/// given 4-qubit set.
std::pair<Pauli, Pauli> covering_stabilizer_pair(QubitSet support);

/// Supports of the seven weight-4 stabilizer elements, in ascending
/// lexicographic order of their sorted qubit lists.
const std::vector<QubitSet> &stabilizer_supports_weight4();

/// A qubit relabelling; perm[q-1] is the image of qubit q.
using Permutation = std::array<int, kNumQubits>;

QubitSet permute(const Permutation &perm, QubitSet s);

/// The 168 qubit permutations mapping the stabilizer group onto itself.
const std::vector<Permutation> &code_automorphisms();

}  // namespace erasure

#endif
