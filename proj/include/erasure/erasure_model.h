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

#ifndef ERASURE_ERASURE_MODEL_H
#define ERASURE_ERASURE_MODEL_H

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "erasure/pauli.h"
#include "erasure/poly.h"

namespace erasure {

/// Which limiting error model is in force. Ideal hardware only produces
/// flagged Z measurements; lossy hardware only produces Z erasures and full
/// erasures.
enum class Model { Ideal, Lossy };

std::string model_name(Model m);
Model parse_model(std::string_view name);

enum class ErasureStatus : std::uint8_t {
    Intact = 0,
    ZMeasured = 1,
    ZErased = 2,
    FullyErased = 3,
};

char status_char(ErasureStatus s);

/// Per-qubit erasure status of one 7-qubit block. Text form uses one
/// character per qubit: '.' intact, 'M' Z measured, 'Z' Z erased,
/// 'E' fully erased.
class ErasurePattern {
   public:
    ErasurePattern() {
        status_.fill(ErasureStatus::Intact);
    }

    static ErasurePattern from_string(std::string_view text);
    /// Every qubit in status s.
    static ErasurePattern uniform(ErasureStatus s);
    std::string str() const;

    ErasureStatus at(int qubit) const {
        return status_[qubit - 1];
    }
    void set(int qubit, ErasureStatus s) {
        status_[qubit - 1] = s;
    }

    int weight() const;
    QubitSet support() const;
    QubitSet positions(ErasureStatus s) const;
    int count(ErasureStatus s) const;

    /// The model whose alphabet this pattern uses; an all-intact pattern
    /// belongs to both and reports `fallback`. Throws if M is mixed with Z/E.
    Model model_of(Model fallback) const;

    /// Dense 14-bit key (two bits per qubit), unique across both alphabets.
    std::uint16_t key() const;

    ErasurePattern permuted(const Permutation &perm) const;

    bool operator==(const ErasurePattern &) const = default;
    auto operator<=>(const ErasurePattern &other) const {
        return key() <=> other.key();
    }

   private:
    std::array<ErasureStatus, kNumQubits> status_;
};

/// Whether the correction procedure can handle a pattern at all.
enum class Correctability { Correctable, ProcedureFail };

/// Weight <= 2 is always correctable, weight 3 is correctable unless it covers
/// a logical operator, and weight >= 4 is treated as a failure.
Correctability classify(const ErasurePattern &pattern);

/// All patterns of a model in index order: 2^7 for Ideal, 3^7 for Lossy.
const std::vector<ErasurePattern> &all_patterns(Model model);
/// Position of `pattern` inside all_patterns(model).
size_t pattern_index(Model model, const ErasurePattern &pattern);

/// The absorbing encoded-failure pattern: every qubit erased in the model's
/// strongest way ("MMMMMMM" or "EEEEEEE").
ErasurePattern failure_sink(Model model);

/// Number of full erasures and number of Z-type erasures (Z erased or Z
/// measured), i.e. the [m,n] label of the lossy chain.
std::pair<int, int> composition(const ErasurePattern &pattern);

struct PatternCensus {
    size_t total = 0;
    std::array<size_t, kNumQubits + 1> by_weight{};
    std::map<std::pair<int, int>, size_t> by_composition;
    size_t correctable = 0;
    size_t procedure_fail = 0;
};

PatternCensus enumerate_patterns(Model model);

/// Error probabilities feeding one attempt. Both fields are polynomials so
/// the same engine serves symbolic series (eps, delta as variables) and
/// numeric evaluation (constants).
struct ModelParams {
    Model model = Model::Ideal;
    Poly eps;
    Poly delta;

    /// eps and (for Lossy) delta as free variables.
    static ModelParams symbolic(Model model);
    /// Numeric point. Throws std::invalid_argument if Ideal with delta != 0
    /// or if either value is outside [0,1].
    static ModelParams at(Model model, const Rational &eps, const Rational &delta = Rational(0));
};

/// Probability of each pattern (indexed like all_patterns) right after one
/// transversal encoded gate: every qubit independently erased with
/// probability eps. Lossy erasures split evenly between full and Z erasure.
std::vector<Poly> initial_distribution(const ModelParams &params);

}  // namespace erasure

#endif
