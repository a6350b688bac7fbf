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

#include "erasure/pauli.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

namespace erasure {

int popcount(QubitSet s) {
    return std::popcount(static_cast<unsigned>(s));
}

QubitSet qubit_set_from_string(std::string_view text) {
    QubitSet s = 0;
    for (char c : text) {
        if (c == '{' || c == '}' || c == ',' || c == ' ') {
            continue;
        }
        if (c < '1' || c > '7') {
            throw std::invalid_argument("qubit index out of range 1..7 in '" + std::string(text) + "'");
        }
        s |= qubit_bit(c - '0');
    }
    return s;
}

std::string qubit_set_to_string(QubitSet s) {
    std::string out = "{";
    for (int q = 1; q <= kNumQubits; q++) {
        if (s & qubit_bit(q)) {
            if (out.size() > 1) {
                out += ",";
            }
            out += std::to_string(q);
        }
    }
    return out + "}";
}

Pauli Pauli::from_string(std::string_view text) {
    if (text.size() != kNumQubits) {
        throw std::invalid_argument("Pauli string must have 7 characters: '" + std::string(text) + "'");
    }
    Pauli p;
    for (int k = 0; k < kNumQubits; k++) {
        QubitSet bit = qubit_bit(k + 1);
        switch (std::toupper(static_cast<unsigned char>(text[k]))) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.x |= bit;
                break;
            case 'Y':
                p.x |= bit;
                p.z |= bit;
                break;
            case 'Z':
                p.z |= bit;
                break;
            default:
                throw std::invalid_argument("bad Pauli character in '" + std::string(text) + "'");
        }
    }
    return p;
}

std::string Pauli::str() const {
    std::string out(kNumQubits, 'I');
    for (int k = 0; k < kNumQubits; k++) {
        bool xb = x & qubit_bit(k + 1);
        bool zb = z & qubit_bit(k + 1);
        out[k] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return out;
}

int symplectic_product(const Pauli &p, const Pauli &q) {
    return (popcount(p.x & q.z) + popcount(p.z & q.x)) & 1;
}

StabilizerGroup::StabilizerGroup(std::vector<Pauli> generators) : generators_(std::move(generators)) {
    for (size_t a = 0; a < generators_.size(); a++) {
        for (size_t b = a + 1; b < generators_.size(); b++) {
            if (symplectic_product(generators_[a], generators_[b])) {
                throw std::invalid_argument(
                    "stabilizer generators anticommute: " + generators_[a].str() + " " + generators_[b].str());
            }
        }
    }
    elements_.push_back(Pauli{});
    for (const auto &g : generators_) {
        if (contains(g)) {
            continue;
        }
        size_t n = elements_.size();
        for (size_t k = 0; k < n; k++) {
            elements_.push_back(elements_[k] * g);
        }
    }
}

bool StabilizerGroup::contains(const Pauli &p) const {
    return std::find(elements_.begin(), elements_.end(), p) != elements_.end();
}

const StabilizerGroup &steane_stabilizers() {
    static const StabilizerGroup group({
        Pauli::from_string("XXXXIII"),
        Pauli::from_string("XXIIXXI"),
        Pauli::from_string("XIXIXIX"),
        Pauli::from_string("ZZZZIII"),
        Pauli::from_string("ZZIIZZI"),
        Pauli::from_string("ZIZIZIZ"),
    });
    return group;
}

namespace {

Pauli of_type(PauliType type, QubitSet s) {
    return type == PauliType::XType ? Pauli{s, 0} : Pauli{0, s};
}

bool has_type(const Pauli &p, PauliType type) {
    return type == PauliType::XType ? p.is_x_type() : p.is_z_type();
}

}  // namespace

std::vector<Pauli> logical_coset(PauliType type) {
    Pauli transversal = of_type(type, kAllQubits);
    std::vector<Pauli> out;
    for (const auto &s : steane_stabilizers().elements()) {
        if (has_type(s, type)) {
            out.push_back(transversal * s);
        }
    }
    return out;
}

std::vector<Pauli> type_normalizer(PauliType type) {
    std::vector<Pauli> out;
    for (unsigned s = 0; s <= kAllQubits; s++) {
        Pauli p = of_type(type, static_cast<QubitSet>(s));
        bool commutes = std::all_of(steane_stabilizers().generators().begin(),
                                    steane_stabilizers().generators().end(),
                                    [&](const Pauli &g) { return symplectic_product(p, g) == 0; });
        if (commutes) {
            out.push_back(p);
        }
    }
    return out;
}

bool supports_logical(QubitSet support) {
    static const std::vector<QubitSet> logical_supports = [] {
        std::vector<QubitSet> out;
        for (auto type : {PauliType::XType, PauliType::ZType}) {
            for (const auto &p : logical_coset(type)) {
                out.push_back(p.support());
            }
        }
        return out;
    }();
    return std::any_of(logical_supports.begin(), logical_supports.end(), [&](QubitSet l) {
        return (l & support) == l;
    });
}

std::pair<Pauli, Pauli> covering_stabilizer_pair(QubitSet support) {
    if (popcount(support) != 4) {
        throw std::invalid_argument("covering stabilizer needs a 4-qubit set, got " + qubit_set_to_string(support));
    }
    const auto &elements = steane_stabilizers().elements();
    auto find = [&](PauliType type) -> const Pauli * {
        for (const auto &s : elements) {
            if (has_type(s, type) && s.support() == support) {
                return &s;
            }
        }
        return nullptr;
    };
    const Pauli *xs = find(PauliType::XType);
    const Pauli *zs = find(PauliType::ZType);
    if (xs == nullptr || zs == nullptr) {
        throw NoCoveringStabilizer("no stabilizer element is supported on " + qubit_set_to_string(support));
    }
    return {*xs, *zs};
}

namespace {

/// Sorted qubit list used as the lexicographic key of a set.
std::vector<int> sorted_qubits(QubitSet s) {
    std::vector<int> out;
    for (int q = 1; q <= kNumQubits; q++) {
        if (s & qubit_bit(q)) {
            out.push_back(q);
        }
    }
    return out;
}

}  // namespace

const std::vector<QubitSet> &stabilizer_supports_weight4() {
    static const std::vector<QubitSet> supports = [] {
        std::vector<QubitSet> out;
        for (const auto &s : steane_stabilizers().elements()) {
            if (s.is_x_type() && s.weight() == 4) {
                out.push_back(s.support());
            }
        }
        std::sort(out.begin(), out.end(), [](QubitSet a, QubitSet b) {
            return sorted_qubits(a) < sorted_qubits(b);
        });
        return out;
    }();
    return supports;
}

QubitSet permute(const Permutation &perm, QubitSet s) {
    QubitSet out = 0;
    for (int q = 1; q <= kNumQubits; q++) {
        if (s & qubit_bit(q)) {
            out |= qubit_bit(perm[q - 1]);
        }
    }
    return out;
}

const std::vector<Permutation> &code_automorphisms() {
    static const std::vector<Permutation> autos = [] {
        const auto &supports = stabilizer_supports_weight4();
        std::vector<Permutation> out;
        Permutation perm;
        std::iota(perm.begin(), perm.end(), 1);
        do {
            bool preserves = std::all_of(supports.begin(), supports.end(), [&](QubitSet s) {
                return std::find(supports.begin(), supports.end(), permute(perm, s)) != supports.end();
            });
            if (preserves) {
                out.push_back(perm);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }();
    return autos;
}

}  // namespace erasure
