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

#ifndef ERASURE_CLASSES_H
#define ERASURE_CLASSES_H

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "erasure/circuits.h"
#include "erasure/erasure_model.h"
#include "json.hpp"

namespace erasure {

enum class ClassKind { Done, Transient, Fail };

struct EquivClass {
    int id = 0;
    ErasurePattern representative;
    std::vector<ErasurePattern> members;
    /// "[m,n]" (lossy) or the erasure weight (ideal), "fail" for patterns the
    /// procedure gives up on; a ".k" suffix separates classes sharing a label.
    std::string label;
    ClassKind kind = ClassKind::Transient;

    size_t size() const {
        return members.size();
    }
};

/// A partition of one model's pattern space.
class ClassTable {
   public:
    ClassTable(Model model, std::vector<std::vector<ErasurePattern>> blocks);

    Model model() const {
        return model_;
    }
    const std::vector<EquivClass> &classes() const {
        return classes_;
    }
    size_t size() const {
        return classes_.size();
    }
    const EquivClass &operator[](size_t id) const {
        return classes_[id];
    }
    int class_of(const ErasurePattern &p) const;
    int done_id() const {
        return done_id_;
    }
    /// The class holding the failure sink pattern.
    int fail_id() const {
        return fail_id_;
    }

   private:
    Model model_;
    std::vector<EquivClass> classes_;
    std::vector<int> class_of_index_;
    int done_id_ = -1;
    int fail_id_ = -1;
};

struct ClassUnsound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Orbits of the group generated by `symmetry`. An empty span gives the
/// trivial partition (one class per pattern).
ClassTable orbit_classes(Model model, std::span<const Permutation> symmetry);

/// Coarsest partition refining the label partition (done / each label /
/// fail) in which every member of a class sends identical probability mass
/// to every class in one attempt. Computed by iterated splitting on exact
/// symbolic outgoing distributions, so soundness holds by construction.
ClassTable reduced_classes(Model model, const CircuitConfig &config = {});

/// Orbits under `symmetry`, optionally followed by behavioural merging
/// (which yields reduced_classes).
ClassTable build_classes(Model model,
                         std::span<const Permutation> symmetry,
                         const CircuitConfig &config = {},
                         bool merge = false);

struct SoundnessReport {
    bool sound = true;
    std::string violation;
};

/// Checks, exactly and for every member, that one attempt from any member
/// yields the representative's class-level outcome distribution.
SoundnessReport verify_soundness(const ClassTable &table, const CircuitConfig &config = {});

/// Class-level probabilities of the freshly erased block.
std::vector<Poly> class_initial_distribution(const ClassTable &table, const ModelParams &params);

nlohmann::json class_table_to_json(const ClassTable &table);

}  // namespace erasure

#endif
