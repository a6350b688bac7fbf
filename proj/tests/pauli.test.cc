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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace erasure;

namespace {

std::vector<QubitSet> subsets_of_size(int k) {
    std::vector<QubitSet> out;
    for (int s = 0; s < 128; s++) {
        if (popcount(static_cast<QubitSet>(s)) == k) {
            out.push_back(static_cast<QubitSet>(s));
        }
    }
    return out;
}

}  // namespace

TEST(Pauli, string_round_trip) {
    for (const char *text : {"XXXXIII", "ZZZZIII", "IIIIIII", "XYZIXYZ", "YYYYYYY"}) {
        EXPECT_EQ(Pauli::from_string(text).str(), text);
    }
    EXPECT_THROW(Pauli::from_string("XXXX"), std::invalid_argument);
    EXPECT_THROW(Pauli::from_string("XXXXIIA"), std::invalid_argument);
    EXPECT_EQ(Pauli::from_string("IYIIIII").weight(), 1);
    EXPECT_EQ(Pauli::from_string("IYIIIII").x, qubit_bit(2));
}

TEST(Pauli, qubit_sets) {
    EXPECT_EQ(qubit_set_from_string("{1,2,3,4}"), 0x0F);
    EXPECT_EQ(qubit_set_from_string("1256"), qubit_bit(1) | qubit_bit(2) | qubit_bit(5) | qubit_bit(6));
    EXPECT_EQ(qubit_set_to_string(0x0F), "{1,2,3,4}");
    EXPECT_EQ(qubit_set_to_string(0), "{}");
    EXPECT_THROW(qubit_set_from_string("{0,1}"), std::invalid_argument);
    EXPECT_THROW(qubit_set_from_string("{8}"), std::invalid_argument);
}

TEST(Pauli, symplectic_product) {
    auto m1 = Pauli::from_string("XXXXIII");
    auto m4 = Pauli::from_string("ZZZZIII");
    EXPECT_EQ(symplectic_product(m1, m4), 0);
    EXPECT_EQ(symplectic_product(Pauli::from_string("XIIIIII"), Pauli::from_string("ZIIIIII")), 1);
    EXPECT_EQ(symplectic_product(Pauli::from_string("YIIIIII"), Pauli::from_string("YIIIIII")), 0);
    const auto &gens = steane_stabilizers().generators();
    int pairs = 0;
    for (size_t a = 0; a < gens.size(); a++) {
        for (size_t b = a + 1; b < gens.size(); b++) {
            EXPECT_EQ(symplectic_product(gens[a], gens[b]), 0);
            pairs++;
        }
    }
    EXPECT_EQ(pairs, 15);
}

TEST(Pauli, steane_generators) {
    const auto &g = steane_stabilizers();
    ASSERT_EQ(g.generators().size(), 6u);
    EXPECT_EQ(g.generators()[0].str(), "XXXXIII");
    EXPECT_EQ(g.generators()[1].str(), "XXIIXXI");
    EXPECT_EQ(g.generators()[2].str(), "XIXIXIX");
    EXPECT_EQ(g.generators()[3].str(), "ZZZZIII");
    EXPECT_EQ(g.generators()[4].str(), "ZZIIZZI");
    EXPECT_EQ(g.generators()[5].str(), "ZIZIZIZ");
    EXPECT_EQ(g.elements().size(), 64u);
    EXPECT_TRUE(g.elements()[0].is_identity());
}

TEST(Pauli, stabilizer_group_is_css) {
    const auto &g = steane_stabilizers();
    std::set<QubitSet> x_supports;
    std::set<QubitSet> z_supports;
    for (const auto &p : g.elements()) {
        Pauli xpart{p.x, 0};
        Pauli zpart{0, p.z};
        EXPECT_TRUE(g.contains(xpart));
        EXPECT_TRUE(g.contains(zpart));
        if (p.is_x_type()) {
            x_supports.insert(p.support());
        }
        if (p.is_z_type()) {
            z_supports.insert(p.support());
        }
    }
    EXPECT_EQ(x_supports, z_supports);
    EXPECT_EQ(x_supports.size(), 8u);
}

TEST(Pauli, stabilizer_group_rejects_anticommuting) {
    EXPECT_THROW(StabilizerGroup({Pauli::from_string("XIIIIII"), Pauli::from_string("ZIIIIII")}),
                 std::invalid_argument);
}

TEST(Pauli, logical_coset) {
    for (auto type : {PauliType::XType, PauliType::ZType}) {
        auto coset = logical_coset(type);
        EXPECT_EQ(coset.size(), 8u);
        int weight3 = 0;
        int weight7 = 0;
        for (const auto &p : coset) {
            EXPECT_TRUE(type == PauliType::XType ? p.is_x_type() : p.is_z_type());
            EXPECT_FALSE(steane_stabilizers().contains(p));
            for (const auto &g : steane_stabilizers().generators()) {
                EXPECT_EQ(symplectic_product(p, g), 0);
            }
            weight3 += p.weight() == 3;
            weight7 += p.weight() == 7;
        }
        EXPECT_EQ(weight3, 7);
        EXPECT_EQ(weight7, 1);
        EXPECT_EQ(type_normalizer(type).size(), 16u);
    }
}

TEST(Pauli, supports_logical_small_supports) {
    for (int k = 0; k <= 2; k++) {
        for (auto s : subsets_of_size(k)) {
            EXPECT_FALSE(supports_logical(s));
        }
    }
    EXPECT_TRUE(supports_logical(kAllQubits));
}

TEST(Pauli, supports_logical_weight3_count) {
    auto triples = subsets_of_size(3);
    ASSERT_EQ(triples.size(), 35u);
    std::vector<QubitSet> bad;
    for (auto s : triples) {
        if (supports_logical(s)) {
            bad.push_back(s);
        }
    }
    ASSERT_EQ(bad.size(), 7u);
    // The 7 bad triples are the lines of a Fano plane: any two share one qubit.
    for (size_t a = 0; a < bad.size(); a++) {
        for (size_t b = a + 1; b < bad.size(); b++) {
            EXPECT_EQ(popcount(bad[a] & bad[b]), 1);
        }
    }
}

TEST(Pauli, supports_logical_is_monotone) {
    for (int s = 0; s < 128; s++) {
        if (!supports_logical(static_cast<QubitSet>(s))) {
            continue;
        }
        for (int q = 1; q <= kNumQubits; q++) {
            EXPECT_TRUE(supports_logical(static_cast<QubitSet>(s | qubit_bit(q))));
        }
    }
}

TEST(Pauli, covering_stabilizer_pair) {
    auto [x1, z1] = covering_stabilizer_pair(qubit_set_from_string("{1,2,3,4}"));
    EXPECT_EQ(x1.str(), "XXXXIII");
    EXPECT_EQ(z1.str(), "ZZZZIII");
    auto [x2, z2] = covering_stabilizer_pair(qubit_set_from_string("{1,2,5,6}"));
    EXPECT_EQ(x2.str(), "XXIIXXI");
    EXPECT_EQ(z2.str(), "ZZIIZZI");
    EXPECT_THROW(covering_stabilizer_pair(qubit_set_from_string("{1,2,3,5}")), NoCoveringStabilizer);
    EXPECT_THROW(covering_stabilizer_pair(qubit_set_from_string("{1,2,3}")), std::invalid_argument);
    int covered = 0;
    for (auto s : subsets_of_size(4)) {
        try {
            auto [x, z] = covering_stabilizer_pair(s);
            EXPECT_EQ(x.support(), s);
            EXPECT_EQ(z.support(), s);
            covered++;
        } catch (const NoCoveringStabilizer &) {
        }
    }
    EXPECT_EQ(covered, 7);
    EXPECT_EQ(stabilizer_supports_weight4().size(), 7u);
}

TEST(Pauli, weight4_supports_complement_bad_triples) {
    for (auto s : stabilizer_supports_weight4()) {
        EXPECT_TRUE(supports_logical(static_cast<QubitSet>(kAllQubits & ~s)));
    }
    EXPECT_TRUE(std::is_sorted(stabilizer_supports_weight4().begin(), stabilizer_supports_weight4().end(),
                               [](QubitSet a, QubitSet b) {
                                   return qubit_set_to_string(a) < qubit_set_to_string(b);
                               }));
}

TEST(Pauli, correctable_triples_extend_to_one_stabilizer_support) {
    for (auto s : subsets_of_size(3)) {
        if (supports_logical(s)) {
            continue;
        }
        int extensions = 0;
        for (auto w : stabilizer_supports_weight4()) {
            extensions += (s & w) == s;
        }
        EXPECT_EQ(extensions, 1) << qubit_set_to_string(s);
    }
}

TEST(Pauli, automorphism_group) {
    const auto &autos = code_automorphisms();
    EXPECT_EQ(autos.size(), 168u);
    std::set<QubitSet> supports(stabilizer_supports_weight4().begin(), stabilizer_supports_weight4().end());
    for (const auto &perm : autos) {
        for (auto s : stabilizer_supports_weight4()) {
            EXPECT_TRUE(supports.count(permute(perm, s)));
        }
    }
}
