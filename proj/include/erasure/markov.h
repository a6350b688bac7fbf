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

#ifndef ERASURE_MARKOV_H
#define ERASURE_MARKOV_H

#include <map>
#include <optional>
#include <vector>

#include "erasure/circuits.h"
#include "erasure/classes.h"
#include "json.hpp"

namespace erasure {

/// One correction attempt as a stochastic map between classes.
struct TransitionMatrix {
    ClassTable classes;
    /// rows[c] maps destination class -> probability; only nonzero entries.
    std::vector<std::map<int, Poly>> rows;

    Model model() const {
        return classes.model();
    }
    int done_id() const {
        return classes.done_id();
    }
    int fail_id() const {
        return classes.fail_id();
    }
    Poly entry(int from, int to) const;
    Poly row_sum(int from) const;
};

/// Throws ClassUnsound if members of a class disagree on their outcomes.
TransitionMatrix build_chain(const ClassTable &classes, const ModelParams &params, const CircuitConfig &config = {});

struct ChainResult {
    /// Mass absorbed into the failure class.
    Rational encoded_failure;
    /// Attempts performed; nullopt when solved to absorption.
    std::optional<unsigned> attempts_used;
    /// Mass neither corrected nor failed after the last attempt.
    Rational residual_mass;
};

/// Numeric evaluation of a (symbolic or numeric) chain at (eps, delta).
/// With max_attempts the initial distribution is pushed through that many
/// attempts; without it the absorbing chain is solved exactly.
ChainResult run_to_absorption(const TransitionMatrix &chain,
                              const std::vector<Poly> &initial,
                              const Rational &eps,
                              const Rational &delta,
                              std::optional<unsigned> max_attempts = std::nullopt);

/// Encoded failure probability as a power series in eps, truncated at
/// `order`. Lossy chains are evaluated on the diagonal delta = eps.
Poly encoded_failure_series(const TransitionMatrix &chain, const std::vector<Poly> &initial, unsigned order);

/// Reduced symbolic chain of one model together with its initial
/// distribution; the object every threshold computation runs on.
class EncodedChain {
   public:
    EncodedChain(Model model, const CircuitConfig &config = {}, bool reduce = true);

    Model model() const {
        return chain_.model();
    }
    const CircuitConfig &config() const {
        return config_;
    }
    const TransitionMatrix &chain() const {
        return chain_;
    }
    const std::vector<Poly> &initial() const {
        return initial_;
    }

    Rational encoded_failure(const Rational &eps, const Rational &delta) const;
    /// delta = 0 for the ideal model, delta = eps for the lossy model.
    Rational encoded_failure_on_diagonal(const Rational &eps) const;
    ChainResult run(const Rational &eps,
                    const Rational &delta,
                    std::optional<unsigned> max_attempts = std::nullopt) const;
    Poly series(unsigned order) const;

   private:
    CircuitConfig config_;
    TransitionMatrix chain_;
    std::vector<Poly> initial_;
};

/// Truncated recursion series of a model (reduced chain, delta = eps for lossy).
Poly recursion_series(Model model, unsigned order, const CircuitConfig &config = {});

nlohmann::json chain_to_json(const TransitionMatrix &chain);

}  // namespace erasure

#endif
