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

#include "erasure/poly.h"

#include <gtest/gtest.h>

#include <random>

#include "erasure/threshold.h"

using namespace erasure;

namespace {

const Poly e = Poly::eps();
const Poly d = Poly::delta();

Poly random_poly(std::mt19937_64 &rng) {
    Poly p;
    int terms = static_cast<int>(rng() % 5);
    for (int k = 0; k < terms; k++) {
        auto num = static_cast<long>(rng() % 41) - 20;
        auto den = static_cast<long>(rng() % 7) + 1;
        p += Poly::term(make_rational(num, den), static_cast<unsigned>(rng() % 4), static_cast<unsigned>(rng() % 3));
    }
    return p;
}

}  // namespace

TEST(Poly, add) {
    EXPECT_TRUE((Poly::term(3, 2) + Poly::term(-3, 2)).is_zero());
    EXPECT_EQ(e + e, Poly::term(2, 1));
    EXPECT_EQ(Poly::term(Rational(1, 2), 1) + Poly::term(Rational(1, 4), 2) + Poly::term(Rational(1, 2), 1),
              e + Poly::term(Rational(1, 4), 2));
}

TEST(Poly, mul) {
    EXPECT_EQ(e * e.pow(2), Poly::term(1, 3));
    EXPECT_EQ((Poly(1) - e) * (Poly(1) + e), Poly(1) - e.pow(2));
    EXPECT_EQ(Poly::term(Rational(1, 2), 1) * Poly::term(Rational(1, 2), 1), Poly::term(Rational(1, 4), 2));
    EXPECT_EQ(e * d, Poly::term(1, 1, 1));
    EXPECT_TRUE((e * Poly()).is_zero());
}

TEST(Poly, no_zero_terms_stored) {
    Poly p = e + d - e;
    EXPECT_EQ(p.terms().size(), 1u);
    EXPECT_EQ(p, d);
    EXPECT_TRUE(Poly(0).is_zero());
    EXPECT_TRUE(Poly::term(0, 3).is_zero());
}

TEST(Poly, eval_lossy_reference_at_published_threshold) {
    Rational x(89, 5000);
    Rational v = reference_lossy_series().eval(x);
    EXPECT_EQ(v, parse_rational("139859662860953325339/15625000000000000000000"));
    EXPECT_EQ(to_decimal(v, 6), "0.008951");
    // Self-consistent with a break-even at ~ x/2.
    EXPECT_NEAR(to_double(v), to_double(x / 2), 1e-4);
}

TEST(Poly, eval_constant_term_at_origin) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; k++) {
        Poly p = random_poly(rng);
        EXPECT_EQ(p.eval(0, 0), p.constant_term());
    }
}

TEST(Poly, eval_measurement_sum_at_one) {
    Poly keep = Poly::complement(e);
    Poly body;
    const int binom[8] = {1, 7, 21, 35, 35, 21, 7, 1};
    for (unsigned i = 3; i <= 7; i++) {
        body += Poly(binom[i]) * e.pow(i) * keep.pow(7 - i);
    }
    EXPECT_EQ(body.eval(1), Rational(1));
    EXPECT_EQ(body.eval(Rational(1, 4)), Rational(3991, 16384));
}

TEST(Poly, eval_double_matches_exact) {
    Poly p = reference_ideal_series() + Poly::term(Rational(-3, 2), 1, 1);
    EXPECT_NEAR(p.eval_double(0.1, 0.2), to_double(p.eval(Rational(1, 10), Rational(1, 5))), 1e-12);
}

TEST(Poly, truncated) {
    EXPECT_EQ((Poly::term(56, 3) + Poly::term(406, 4)).truncated(3), Poly::term(56, 3));
    EXPECT_EQ(Poly(1).truncated(0), Poly(1));
    EXPECT_TRUE(e.pow(3).truncated(2).is_zero());
    EXPECT_EQ((e * d + e.pow(3)).truncated(2), e * d);
}

TEST(Poly, truncated_product_matches_full_product) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 100; k++) {
        Poly a = random_poly(rng);
        Poly b = random_poly(rng);
        for (unsigned order : {0u, 2u, 4u}) {
            EXPECT_EQ(truncated_product(a, b, order), (a * b).truncated(order));
        }
    }
}

TEST(Poly, degrees) {
    Poly p = Poly::term(1, 3) + Poly::term(2, 1, 4);
    EXPECT_EQ(p.total_degree(), 5u);
    EXPECT_EQ(p.eps_degree(), 3u);
    EXPECT_EQ(p.delta_degree(), 4u);
    EXPECT_EQ(Poly().total_degree(), 0u);
}

TEST(Poly, substitutions) {
    Poly p = Poly::term(2, 1, 1) + d + e;
    EXPECT_EQ(p.with_delta_as_eps(), Poly::term(2, 2) + Poly::term(2, 1));
    EXPECT_EQ(p.without_delta(), e);
}

TEST(Poly, str) {
    EXPECT_EQ(Poly().str(), "0");
    EXPECT_EQ(Poly(1).str(), "1");
    EXPECT_EQ(reference_ideal_series().str(), "56*e^3 + 406*e^4 + 3878*e^5 - 129675*e^6");
    EXPECT_EQ((Poly(1) - Poly::term(Rational(3, 2), 1, 1)).str(), "1 - 3/2*e*d");
}

TEST(Poly, json_round_trip) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; k++) {
        Poly p = random_poly(rng);
        EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
    }
    Poly big = Poly::term(parse_rational("144723470598547394584778567/2720488222573222580000000000000"), 2, 1);
    EXPECT_EQ(poly_from_json(poly_to_json(big)), big);
    // Leading zeros are decimal, not octal.
    nlohmann::json j = nlohmann::json::array({{{"eps_deg", 1}, {"delta_deg", 0}, {"num", "010"}, {"den", "1"}}});
    EXPECT_EQ(poly_from_json(j), Poly::term(10, 1));
}

TEST(Poly, ring_axioms_on_random_polys) {
    std::mt19937_64 rng(2026);
    for (int k = 0; k < 200; k++) {
        Poly a = random_poly(rng);
        Poly b = random_poly(rng);
        Poly c = random_poly(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + Poly(), a);
        EXPECT_EQ(a * Poly(1), a);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(-(-a), a);
        Rational x = make_rational(static_cast<long>(rng() % 100), 97);
        Rational y = make_rational(static_cast<long>(rng() % 100), 89);
        EXPECT_EQ((a * b).eval(x, y), a.eval(x, y) * b.eval(x, y));
        EXPECT_EQ((a + b).eval(x, y), a.eval(x, y) + b.eval(x, y));
    }
}
