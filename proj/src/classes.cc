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

#include "erasure/classes.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace erasure {

namespace {

std::string base_label(Model model, const ErasurePattern &p) {
    if (classify(p) == Correctability::ProcedureFail) {
        return "fail";
    }
    if (model == Model::Ideal) {
        return std::to_string(p.weight());
    }
    auto [m, n] = composition(p);
    return "[" + std::to_string(m) + "," + std::to_string(n) + "]";
}

}  // namespace

ClassTable::ClassTable(Model model, std::vector<std::vector<ErasurePattern>> blocks) : model_(model) {
    const auto &patterns = all_patterns(model);
    const ErasurePattern sink = failure_sink(model);

    for (auto &b : blocks) {
        std::sort(b.begin(), b.end(), [&](const ErasurePattern &x, const ErasurePattern &y) {
            return pattern_index(model, x) < pattern_index(model, y);
        });
    }
    auto rank = [&](const std::vector<ErasurePattern> &b) {
        const auto &rep = b.front();
        bool has_sink = std::find(b.begin(), b.end(), sink) != b.end();
        int kind = rep.weight() == 0 ? 0 : has_sink ? 3 : classify(rep) == Correctability::ProcedureFail ? 2 : 1;
        auto [m, n] = composition(rep);
        return std::make_tuple(kind, rep.weight(), m, pattern_index(model, rep));
    };
    std::sort(blocks.begin(), blocks.end(), [&](const auto &a, const auto &b) { return rank(a) < rank(b); });

    class_of_index_.assign(patterns.size(), -1);
    std::map<std::string, int> label_uses;
    for (const auto &b : blocks) {
        label_uses[base_label(model, b.front())]++;
    }
    std::map<std::string, int> label_seen;
    for (auto &b : blocks) {
        EquivClass c;
        c.id = static_cast<int>(classes_.size());
        c.representative = b.front();
        std::string base = base_label(model, b.front());
        c.label = base;
        if (label_uses[base] > 1) {
            c.label += "." + std::to_string(++label_seen[base]);
        }
        if (c.representative.weight() == 0) {
            c.kind = ClassKind::Done;
            done_id_ = c.id;
        } else if (std::find(b.begin(), b.end(), sink) != b.end()) {
            c.kind = ClassKind::Fail;
            fail_id_ = c.id;
        }
        for (const auto &p : b) {
            size_t idx = pattern_index(model, p);
            if (class_of_index_[idx] != -1) {
                throw std::invalid_argument("pattern " + p.str() + " appears in two classes");
            }
            class_of_index_[idx] = c.id;
        }
        c.members = std::move(b);
        classes_.push_back(std::move(c));
    }
    if (std::find(class_of_index_.begin(), class_of_index_.end(), -1) != class_of_index_.end()) {
        throw std::invalid_argument("class blocks do not cover the pattern space");
    }
    if (classes_[static_cast<size_t>(done_id_)].size() != 1) {
        throw std::invalid_argument("the all-intact pattern must be a class of its own");
    }
}

int ClassTable::class_of(const ErasurePattern &p) const {
    return class_of_index_[pattern_index(model_, p)];
}

ClassTable orbit_classes(Model model, std::span<const Permutation> symmetry) {
    const auto &patterns = all_patterns(model);
    std::vector<size_t> parent(patterns.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (size_t i = 0; i < patterns.size(); i++) {
        for (const auto &perm : symmetry) {
            size_t j = pattern_index(model, patterns[i].permuted(perm));
            size_t a = find(i);
            size_t b = find(j);
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    std::map<size_t, std::vector<ErasurePattern>> blocks;
    for (size_t i = 0; i < patterns.size(); i++) {
        blocks[find(i)].push_back(patterns[i]);
    }
    std::vector<std::vector<ErasurePattern>> out;
    for (auto &[root, b] : blocks) {
        out.push_back(std::move(b));
    }
    return ClassTable(model, std::move(out));
}

namespace {

/// Canonical text of a block-level distribution; equal strings iff equal maps.
std::string signature(const std::map<int, Poly> &dist) {
    std::string s;
    for (const auto &[block, prob] : dist) {
        s += std::to_string(block) + ":" + prob.str() + ";";
    }
    return s;
}

std::map<int, Poly> lump(const OutcomeDistribution &dist, const std::vector<int> &block_of, Model model) {
    std::map<int, Poly> out;
    for (const auto &[p, prob] : dist.entries) {
        out[block_of[pattern_index(model, p)]] += prob;
    }
    std::erase_if(out, [](const auto &kv) { return kv.second.is_zero(); });
    return out;
}

}  // namespace

ClassTable reduced_classes(Model model, const CircuitConfig &config) {
    const auto &patterns = all_patterns(model);
    auto params = ModelParams::symbolic(model);
    std::vector<OutcomeDistribution> outcomes;
    outcomes.reserve(patterns.size());
    for (const auto &p : patterns) {
        outcomes.push_back(attempt(p, params, config));
    }

    std::vector<int> block_of(patterns.size());
    {
        std::map<std::string, int> ids;
        for (size_t i = 0; i < patterns.size(); i++) {
            auto [it, inserted] = ids.try_emplace(base_label(model, patterns[i]), static_cast<int>(ids.size()));
            block_of[i] = it->second;
        }
    }
    size_t num_blocks = 0;
    while (true) {
        std::map<std::pair<int, std::string>, int> ids;
        std::vector<int> next(patterns.size());
        for (size_t i = 0; i < patterns.size(); i++) {
            auto key = std::make_pair(block_of[i], signature(lump(outcomes[i], block_of, model)));
            auto [it, inserted] = ids.try_emplace(key, static_cast<int>(ids.size()));
            next[i] = it->second;
        }
        block_of = std::move(next);
        if (ids.size() == num_blocks) {
            break;
        }
        num_blocks = ids.size();
    }

    std::vector<std::vector<ErasurePattern>> blocks(num_blocks);
    for (size_t i = 0; i < patterns.size(); i++) {
        blocks[static_cast<size_t>(block_of[i])].push_back(patterns[i]);
    }
    return ClassTable(model, std::move(blocks));
}

ClassTable build_classes(Model model,
                         std::span<const Permutation> symmetry,
                         const CircuitConfig &config,
                         bool merge) {
    if (merge) {
        // Behaviourally identical orbits always end up in one lumped class, so
        // merging does not depend on the starting orbits.
        return reduced_classes(model, config);
    }
    return orbit_classes(model, symmetry);
}

SoundnessReport verify_soundness(const ClassTable &table, const CircuitConfig &config) {
    auto params = ModelParams::symbolic(table.model());
    std::vector<int> block_of(all_patterns(table.model()).size());
    for (const auto &p : all_patterns(table.model())) {
        block_of[pattern_index(table.model(), p)] = table.class_of(p);
    }
    for (const auto &c : table.classes()) {
        auto reference = lump(attempt(c.representative, params, config), block_of, table.model());
        for (const auto &member : c.members) {
            if (lump(attempt(member, params, config), block_of, table.model()) != reference) {
                return {false, "class " + c.label + ": " + member.str() + " and " + c.representative.str() +
                                   " have different outcome distributions"};
            }
        }
    }
    return {};
}

std::vector<Poly> class_initial_distribution(const ClassTable &table, const ModelParams &params) {
    auto per_pattern = initial_distribution(params);
    const auto &patterns = all_patterns(table.model());
    std::vector<Poly> out(table.size());
    for (size_t i = 0; i < patterns.size(); i++) {
        out[static_cast<size_t>(table.class_of(patterns[i]))] += per_pattern[i];
    }
    return out;
}

nlohmann::json class_table_to_json(const ClassTable &table) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto &c : table.classes()) {
        const char *kind = c.kind == ClassKind::Done ? "done" : c.kind == ClassKind::Fail ? "fail" : "transient";
        classes.push_back({
            {"id", c.id},
            {"label", c.label},
            {"kind", kind},
            {"size", c.size()},
            {"representative", c.representative.str()},
        });
    }
    return {
        {"model", model_name(table.model())},
        {"class_count", table.size()},
        {"done_id", table.done_id()},
        {"fail_id", table.fail_id()},
        {"classes", classes},
    };
}

}  // namespace erasure
