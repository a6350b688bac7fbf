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

#include <gtest/gtest.h>

using namespace erasure;

TEST(Classes, trivial_symmetry_gives_singletons) {
    auto table = orbit_classes(Model::Ideal, {});
    EXPECT_EQ(table.size(), 128u);
    EXPECT_TRUE(verify_soundness(table).sound);
    EXPECT_EQ(table[static_cast<size_t>(table.done_id())].representative, ErasurePattern());
    EXPECT_EQ(table[static_cast<size_t>(table.fail_id())].representative, failure_sink(Model::Ideal));
}

TEST(Classes, automorphism_orbits) {
    const auto &autos = code_automorphisms();
    auto ideal = orbit_classes(Model::Ideal, autos);
    // Weights 0..7, with weight 3 and weight 4 each split into two orbits.
    EXPECT_EQ(ideal.size(), 10u);
    auto report = verify_soundness(ideal);
    EXPECT_TRUE(report.sound) << report.violation;

    auto lossy = orbit_classes(Model::Lossy, autos);
    EXPECT_GT(lossy.size(), 11u);
    for (const auto &c : lossy.classes()) {
        auto comp = composition(c.representative);
        for (const auto &m : c.members) {
            EXPECT_EQ(composition(m), comp);
        }
    }
}

TEST(Classes, reduced_counts_and_labels) {
    auto ideal = reduced_classes(Model::Ideal);
    ASSERT_EQ(ideal.size(), 5u);
    std::vector<std::string> labels;
    std::vector<size_t> sizes;
    for (const auto &c : ideal.classes()) {
        labels.push_back(c.label);
        sizes.push_back(c.size());
    }
    EXPECT_EQ(labels, (std::vector<std::string>{"0", "1", "2", "3", "fail"}));
    EXPECT_EQ(sizes, (std::vector<size_t>{1, 7, 21, 28, 71}));

    auto lossy = reduced_classes(Model::Lossy);
    ASSERT_EQ(lossy.size(), 11u);
    size_t total = 0;
    for (const auto &c : lossy.classes()) {
        total += c.size();
        if (c.kind == ClassKind::Transient) {
            ASSERT_EQ(c.label.front(), '[');
            auto [m, n] = composition(c.representative);
            EXPECT_EQ(c.label, "[" + std::to_string(m) + "," + std::to_string(n) + "]");
            EXPECT_LE(m + n, 3);
        }
    }
    EXPECT_EQ(total, 2187u);
    EXPECT_EQ(lossy[static_cast<size_t>(lossy.fail_id())].size(), 2187u - 1 - 14 - 84 - 224);
}

TEST(Classes, reduced_tables_are_sound) {
    for (auto m : {Model::Ideal, Model::Lossy}) {
        auto report = verify_soundness(reduced_classes(m));
        EXPECT_TRUE(report.sound) << report.violation;
    }
}

TEST(Classes, soundness_check_catches_bad_merge) {
    std::vector<std::vector<ErasurePattern>> blocks;
    std::vector<ErasurePattern> low;
    std::vector<ErasurePattern> fail;
    for (const auto &p : all_patterns(Model::Ideal)) {
        if (p.weight() == 0) {
            blocks.push_back({p});
        } else if (classify(p) == Correctability::Correctable) {
            low.push_back(p);
        } else {
            fail.push_back(p);
        }
    }
    blocks.push_back(low);
    blocks.push_back(fail);
    ClassTable table(Model::Ideal, blocks);
    EXPECT_EQ(table.size(), 3u);
    auto report = verify_soundness(table);
    EXPECT_FALSE(report.sound);
    EXPECT_FALSE(report.violation.empty());
}

TEST(Classes, table_validation) {
    const auto &all = all_patterns(Model::Ideal);
    std::vector<ErasurePattern> everything(all.begin(), all.end());
    // The intact pattern has to stand alone.
    EXPECT_THROW(ClassTable(Model::Ideal, {everything}), std::invalid_argument);
    std::vector<ErasurePattern> missing(all.begin() + 1, all.end() - 1);
    EXPECT_THROW(ClassTable(Model::Ideal, {{all.front()}, missing}), std::invalid_argument);
    EXPECT_THROW(ClassTable(Model::Ideal, {{all.front()}, everything}), std::invalid_argument);
}

TEST(Classes, build_classes_dispatch) {
    EXPECT_EQ(build_classes(Model::Ideal, {}).size(), 128u);
    EXPECT_EQ(build_classes(Model::Ideal, code_automorphisms(), {}, true).size(), 5u);
}

TEST(Classes, initial_distribution_over_classes) {
    auto table = reduced_classes(Model::Ideal);
    auto dist = class_initial_distribution(table, ModelParams::symbolic(Model::Ideal));
    Poly e = Poly::eps();
    Poly keep = Poly::complement(e);
    EXPECT_EQ(dist[0], keep.pow(7));
    EXPECT_EQ(dist[1], Poly(7) * e * keep.pow(6));
    EXPECT_EQ(dist[3], Poly(28) * e.pow(3) * keep.pow(4));
    Poly total;
    for (const auto &p : dist) {
        total += p;
    }
    EXPECT_EQ(total, Poly(1));
    // 7 uncorrectable triples put 7 e^3 straight into the fail class.
    EXPECT_EQ(dist[4].truncated(3), Poly::term(7, 3));
}

TEST(Classes, json_export) {
    auto j = class_table_to_json(reduced_classes(Model::Lossy));
    EXPECT_EQ(j["model"], "lossy");
    EXPECT_EQ(j["class_count"], 11);
    EXPECT_EQ(j["classes"].size(), 11u);
    EXPECT_EQ(j["classes"][0]["representative"], ".......");
    EXPECT_EQ(j["fail_id"], 10);
}
