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

#include "erasure/circuits.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>

namespace erasure {

namespace {

std::string effect_tag(std::optional<ErasureStatus> s) {
    if (!s) {
        return "none";
    }
    switch (*s) {
        case ErasureStatus::ZErased:
            return "z_erased";
        case ErasureStatus::FullyErased:
            return "full_erasure";
        default:
            break;
    }
    throw std::logic_error("effect outside the lossy alphabet");
}

std::optional<ErasureStatus> parse_effect(const std::string &tag, bool allow_none) {
    if (tag == "z_erased") {
        return ErasureStatus::ZErased;
    }
    if (tag == "full_erasure") {
        return ErasureStatus::FullyErased;
    }
    if (tag == "none" && allow_none) {
        return std::nullopt;
    }
    throw std::invalid_argument("unknown effect tag '" + tag + "'");
}

void reject_unknown_keys(const nlohmann::json &j, const std::set<std::string> &known, const std::string &where) {
    if (!j.is_object()) {
        throw std::invalid_argument(where + " must be a JSON object");
    }
    for (const auto &item : j.items()) {
        if (!known.contains(item.key())) {
            throw std::invalid_argument("unknown key '" + item.key() + "' in " + where);
        }
    }
}

}  // namespace

nlohmann::json CircuitConfig::to_json() const {
    return {
        {"z_recovery",
         {
             {"readout_detectors", z_recovery.readout_detectors},
             {"ideal_failures_per_helper", z_recovery.ideal_failures_per_helper},
             {"detectors_per_helper", z_recovery.detectors_per_helper},
             {"lossy_helper_effect", effect_tag(z_recovery.lossy_helper_effect)},
             {"lossy_control_effect", effect_tag(z_recovery.lossy_control_effect)},
         }},
        {"full_to_z",
         {
             {"ancilla_detectors", full_to_z.ancilla_detectors},
             {"couplings_per_helper", full_to_z.couplings_per_helper},
             {"coupling_effect", effect_tag(full_to_z.coupling_effect)},
             {"coupling_spoils_measurement", full_to_z.coupling_spoils_measurement},
         }},
    };
}

CircuitConfig CircuitConfig::from_json(const nlohmann::json &j) {
    CircuitConfig c;
    reject_unknown_keys(j, {"z_recovery", "full_to_z"}, "circuit config");
    if (j.contains("z_recovery")) {
        const auto &z = j["z_recovery"];
        reject_unknown_keys(z,
                            {"readout_detectors", "ideal_failures_per_helper", "detectors_per_helper",
                             "lossy_helper_effect", "lossy_control_effect"},
                            "z_recovery");
        c.z_recovery.readout_detectors = z.value("readout_detectors", c.z_recovery.readout_detectors);
        c.z_recovery.ideal_failures_per_helper =
            z.value("ideal_failures_per_helper", c.z_recovery.ideal_failures_per_helper);
        c.z_recovery.detectors_per_helper = z.value("detectors_per_helper", c.z_recovery.detectors_per_helper);
        if (z.contains("lossy_helper_effect")) {
            c.z_recovery.lossy_helper_effect = *parse_effect(z["lossy_helper_effect"].get<std::string>(), false);
        }
        if (z.contains("lossy_control_effect")) {
            c.z_recovery.lossy_control_effect = *parse_effect(z["lossy_control_effect"].get<std::string>(), false);
        }
    }
    if (j.contains("full_to_z")) {
        const auto &f = j["full_to_z"];
        reject_unknown_keys(
            f, {"ancilla_detectors", "couplings_per_helper", "coupling_effect", "coupling_spoils_measurement"},
            "full_to_z");
        c.full_to_z.ancilla_detectors = f.value("ancilla_detectors", c.full_to_z.ancilla_detectors);
        c.full_to_z.couplings_per_helper = f.value("couplings_per_helper", c.full_to_z.couplings_per_helper);
        if (f.contains("coupling_effect")) {
            c.full_to_z.coupling_effect = parse_effect(f["coupling_effect"].get<std::string>(), true);
        }
        c.full_to_z.coupling_spoils_measurement =
            f.value("coupling_spoils_measurement", c.full_to_z.coupling_spoils_measurement);
    }
    return c;
}

CircuitConfig CircuitConfig::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open circuit config '" + path + "'");
    }
    return from_json(nlohmann::json::parse(in));
}

std::string CircuitConfig::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_json().dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::vector<int> sorted_qubits(QubitSet s) {
    std::vector<int> out;
    for (int q = 1; q <= kNumQubits; q++) {
        if (s & qubit_bit(q)) {
            out.push_back(q);
        }
    }
    return out;
}

int lowest_qubit(QubitSet s) {
    for (int q = 1; q <= kNumQubits; q++) {
        if (s & qubit_bit(q)) {
            return q;
        }
    }
    return 0;
}

}  // namespace

StepChoice select_step(const ErasurePattern &pattern) {
    if (pattern.weight() == 0) {
        return StepDone{};
    }
    if (classify(pattern) == Correctability::ProcedureFail) {
        return StepAbort{};
    }

    QubitSet full = pattern.positions(ErasureStatus::FullyErased);
    StepKind kind = full ? StepKind::FullErasureToZ : StepKind::ZRecovery;
    int target = lowest_qubit(full ? full : pattern.support());

    QubitSet intact = pattern.positions(ErasureStatus::Intact);
    std::optional<QubitSet> best;
    for (QubitSet s : stabilizer_supports_weight4()) {
        if (!(s & qubit_bit(target))) {
            continue;
        }
        QubitSet helpers = static_cast<QubitSet>(s & ~qubit_bit(target));
        if ((helpers & intact) != helpers) {
            continue;
        }
        if (!best || sorted_qubits(helpers) < sorted_qubits(*best)) {
            best = helpers;
        }
    }
    if (!best) {
        // Cannot happen for correctable patterns of the [[7,1,3]] code.
        throw std::logic_error("no intact helper triple for pattern " + pattern.str());
    }
    return CorrectionStep{kind, target, *best};
}

std::vector<FaultLocation> fault_locations(const ErasurePattern &pattern,
                                           const CorrectionStep &step,
                                           Model model,
                                           const CircuitConfig &config) {
    std::vector<FaultLocation> locs;
    auto add = [&](FaultRole role, int qubit, FaultVariable var, unsigned multiplicity) {
        if (multiplicity > 0) {
            locs.push_back({role, qubit, var, multiplicity});
        }
    };
    auto helpers = sorted_qubits(step.helpers);
    if (step.kind == StepKind::ZRecovery) {
        if (pattern.at(step.target) == ErasureStatus::ZErased) {
            add(FaultRole::TargetReadout, step.target, FaultVariable::Delta, config.z_recovery.readout_detectors);
        }
        for (int h : helpers) {
            if (model == Model::Ideal) {
                add(FaultRole::HelperTeleport, h, FaultVariable::Eps, config.z_recovery.ideal_failures_per_helper);
            } else {
                add(FaultRole::HelperTeleport, h, FaultVariable::Delta, config.z_recovery.detectors_per_helper);
            }
        }
    } else {
        add(FaultRole::AncillaDetectors, 0, FaultVariable::Delta, config.full_to_z.ancilla_detectors);
        for (int h : helpers) {
            add(FaultRole::HelperCoupling, h, FaultVariable::Eps, config.full_to_z.couplings_per_helper);
        }
    }
    return locs;
}

ErasurePattern apply_faults(const ErasurePattern &pattern,
                            const CorrectionStep &step,
                            const std::vector<FaultLocation> &locations,
                            std::uint32_t fired,
                            Model model,
                            const CircuitConfig &config) {
    ErasurePattern out = pattern;
    auto did_fire = [&](size_t k) { return (fired >> k) & 1u; };

    if (step.kind == StepKind::ZRecovery) {
        bool helper_failed = false;
        for (size_t k = 0; k < locations.size(); k++) {
            if (!did_fire(k)) {
                continue;
            }
            const auto &loc = locations[k];
            if (loc.role == FaultRole::TargetReadout) {
                // Readout lost: the qubit is destroyed and the attempt abandoned.
                out = pattern;
                out.set(step.target, ErasureStatus::FullyErased);
                return out;
            }
            helper_failed = true;
            out.set(loc.qubit,
                    model == Model::Ideal ? ErasureStatus::ZMeasured : config.z_recovery.lossy_helper_effect);
        }
        if (!helper_failed) {
            out.set(step.target, ErasureStatus::Intact);
        } else if (model == Model::Lossy) {
            out.set(step.target, config.z_recovery.lossy_control_effect);
        }
        return out;
    }

    bool measured = true;
    for (size_t k = 0; k < locations.size(); k++) {
        if (!did_fire(k)) {
            continue;
        }
        const auto &loc = locations[k];
        if (loc.role == FaultRole::AncillaDetectors) {
            measured = false;
        } else {
            if (config.full_to_z.coupling_effect) {
                out.set(loc.qubit, *config.full_to_z.coupling_effect);
            }
            if (config.full_to_z.coupling_spoils_measurement) {
                measured = false;
            }
        }
    }
    out.set(step.target, measured ? ErasureStatus::ZErased : ErasureStatus::FullyErased);
    return out;
}

Poly firing_probability(const FaultLocation &loc, const ModelParams &params) {
    const Poly &p = loc.variable == FaultVariable::Eps ? params.eps : params.delta;
    return Poly::complement(Poly::complement(p).pow(loc.multiplicity));
}

Poly OutcomeDistribution::total() const {
    Poly t;
    for (const auto &[p, prob] : entries) {
        t += prob;
    }
    return t;
}

Poly OutcomeDistribution::probability_of(const ErasurePattern &p) const {
    auto it = entries.find(p);
    return it == entries.end() ? Poly() : it->second;
}

namespace {

OutcomeDistribution enumerate_faults(const ErasurePattern &pattern,
                                     const CorrectionStep &step,
                                     const ModelParams &params,
                                     const CircuitConfig &config) {
    auto locs = fault_locations(pattern, step, params.model, config);
    std::vector<Poly> fire;
    std::vector<Poly> hold;
    for (const auto &loc : locs) {
        fire.push_back(firing_probability(loc, params));
        hold.push_back(Poly::complement(fire.back()));
    }
    OutcomeDistribution dist;
    for (std::uint32_t mask = 0; mask < (1u << locs.size()); mask++) {
        Poly prob(1);
        for (size_t k = 0; k < locs.size(); k++) {
            prob *= ((mask >> k) & 1u) ? fire[k] : hold[k];
        }
        if (prob.is_zero()) {
            continue;
        }
        dist.entries[apply_faults(pattern, step, locs, mask, params.model, config)] += prob;
    }
    std::erase_if(dist.entries, [](const auto &kv) { return kv.second.is_zero(); });
    return dist;
}

}  // namespace

OutcomeDistribution apply_z_recovery(const ErasurePattern &pattern,
                                     const CorrectionStep &step,
                                     const ModelParams &params,
                                     const CircuitConfig &config) {
    auto t = pattern.at(step.target);
    if (step.kind != StepKind::ZRecovery || (t != ErasureStatus::ZErased && t != ErasureStatus::ZMeasured)) {
        throw std::invalid_argument("Z recovery needs a Z-erased or Z-measured target in " + pattern.str());
    }
    if ((pattern.positions(ErasureStatus::Intact) & step.helpers) != step.helpers) {
        throw std::invalid_argument("Z recovery helpers must be intact in " + pattern.str());
    }
    return enumerate_faults(pattern, step, params, config);
}

OutcomeDistribution apply_full_to_z(const ErasurePattern &pattern,
                                    const CorrectionStep &step,
                                    const ModelParams &params,
                                    const CircuitConfig &config) {
    if (step.kind != StepKind::FullErasureToZ || pattern.at(step.target) != ErasureStatus::FullyErased) {
        throw std::invalid_argument("full-erasure step needs a fully erased target in " + pattern.str());
    }
    if ((pattern.positions(ErasureStatus::Intact) & step.helpers) != step.helpers) {
        throw std::invalid_argument("full-erasure step helpers must be intact in " + pattern.str());
    }
    return enumerate_faults(pattern, step, params, config);
}

OutcomeDistribution attempt(const ErasurePattern &pattern, const ModelParams &params, const CircuitConfig &config) {
    if (pattern.model_of(params.model) != params.model) {
        throw std::invalid_argument("pattern " + pattern.str() + " is outside the " + model_name(params.model) +
                                    " model alphabet");
    }
    auto choice = select_step(pattern);
    OutcomeDistribution dist;
    if (std::holds_alternative<StepDone>(choice)) {
        dist.entries[pattern] = Poly(1);
        return dist;
    }
    if (std::holds_alternative<StepAbort>(choice)) {
        dist.entries[failure_sink(params.model)] = Poly(1);
        return dist;
    }
    const auto &step = std::get<CorrectionStep>(choice);
    if (step.kind == StepKind::ZRecovery) {
        return apply_z_recovery(pattern, step, params, config);
    }
    return apply_full_to_z(pattern, step, params, config);
}

}  // namespace erasure
