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

#ifndef ERASURE_CIRCUITS_H
#define ERASURE_CIRCUITS_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "erasure/erasure_model.h"
#include "json.hpp"

namespace erasure {

/// Fault-location inventory of the two correction circuits. Defaults are the
/// minimal inventory: one detector per readout and per helper teleportation,
/// four cat-state ancilla detectors, and one coupling gate per helper.
struct CircuitConfig {
    struct ZRecovery {
        /// Detectors in the explicit Z readout of a Z-erased target.
        unsigned readout_detectors = 1;
        /// Intrinsic teleportation failures per helper (ideal model).
        unsigned ideal_failures_per_helper = 1;
        /// Detectors whose loss breaks one helper teleportation (lossy model).
        unsigned detectors_per_helper = 1;
        ErasureStatus lossy_helper_effect = ErasureStatus::FullyErased;
        ErasureStatus lossy_control_effect = ErasureStatus::ZErased;

        bool operator==(const ZRecovery &) const = default;
    } z_recovery;

    struct FullToZ {
        unsigned ancilla_detectors = 4;
        unsigned couplings_per_helper = 1;
        /// What a failed coupling gate leaves on its data qubit; nullopt = nothing.
        std::optional<ErasureStatus> coupling_effect = ErasureStatus::ZErased;
        /// Whether a failed coupling also invalidates the stabilizer readout.
        bool coupling_spoils_measurement = false;

        bool operator==(const FullToZ &) const = default;
    } full_to_z;

    nlohmann::json to_json() const;
    /// Missing keys keep their defaults; unknown keys or bad tags throw.
    static CircuitConfig from_json(const nlohmann::json &j);
    static CircuitConfig load(const std::string &path);
    /// FNV-1a 64 of the canonical JSON dump, as 16 hex digits.
    std::string hash() const;

    bool operator==(const CircuitConfig &) const = default;
};

enum class StepKind { FullErasureToZ, ZRecovery };

struct CorrectionStep {
    StepKind kind;
    int target;
    QubitSet helpers;

    bool operator==(const CorrectionStep &) const = default;
};

struct StepDone {
    bool operator==(const StepDone &) const = default;
};
struct StepAbort {
    bool operator==(const StepAbort &) const = default;
};
using StepChoice = std::variant<StepDone, StepAbort, CorrectionStep>;

/// Full erasures first (lowest index), then the lowest-indexed Z erasure or
/// Z measurement. Helpers are the lexicographically smallest triple of intact
/// qubits completing a weight-4 stabilizer support with the target.
StepChoice select_step(const ErasurePattern &pattern);

enum class FaultRole { TargetReadout, HelperTeleport, AncillaDetectors, HelperCoupling };
enum class FaultVariable { Eps, Delta };

/// A group of `multiplicity` independent physical locations sharing one
/// failure probability; the group fires if any member fails.
struct FaultLocation {
    FaultRole role;
    int qubit;  // helper or target qubit; 0 for the ancilla block
    FaultVariable variable;
    unsigned multiplicity;
};

std::vector<FaultLocation> fault_locations(const ErasurePattern &pattern,
                                           const CorrectionStep &step,
                                           Model model,
                                           const CircuitConfig &config);

/// Pattern after the step, given which locations fired (bit k of `fired`
/// refers to locations[k]). Shared by the exact enumeration and the sampler.
ErasurePattern apply_faults(const ErasurePattern &pattern,
                            const CorrectionStep &step,
                            const std::vector<FaultLocation> &locations,
                            std::uint32_t fired,
                            Model model,
                            const CircuitConfig &config);

/// Probability that a location group fires: 1 - (1 - p)^multiplicity.
Poly firing_probability(const FaultLocation &loc, const ModelParams &params);

struct OutcomeDistribution {
    std::map<ErasurePattern, Poly> entries;

    Poly total() const;
    Poly probability_of(const ErasurePattern &p) const;
};

OutcomeDistribution apply_z_recovery(const ErasurePattern &pattern,
                                     const CorrectionStep &step,
                                     const ModelParams &params,
                                     const CircuitConfig &config = {});
OutcomeDistribution apply_full_to_z(const ErasurePattern &pattern,
                                    const CorrectionStep &step,
                                    const ModelParams &params,
                                    const CircuitConfig &config = {});

/// One error-correction attempt. Done maps to itself, Abort to the model's
/// failure sink, each with probability 1.
OutcomeDistribution attempt(const ErasurePattern &pattern, const ModelParams &params, const CircuitConfig &config = {});

}  // namespace erasure

#endif
