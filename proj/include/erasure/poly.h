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

#ifndef ERASURE_POLY_H
#define ERASURE_POLY_H

#include <compare>
#include <map>
#include <string>

#include "erasure/rational.h"
#include "json.hpp"

namespace erasure {

/// Exponent pair of a monomial eps^eps_deg * delta^delta_deg.
struct Monomial {
    unsigned eps_deg = 0;
    unsigned delta_deg = 0;

    unsigned total_degree() const {
        return eps_deg + delta_deg;
    }
    auto operator<=>(const Monomial &) const = default;
};

/// Sparse polynomial in the gate failure probability eps and the detector loss
/// probability delta, with exact rational coefficients.
///
/// No zero coefficient is ever stored, so two polynomials are equal iff their
/// term maps are equal.
class Poly {
   public:
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    Poly(const Rational &constant);  // NOLINT(google-explicit-constructor)
    Poly(long constant);             // NOLINT(google-explicit-constructor)

    static Poly eps();
    static Poly delta();
    static Poly term(const Rational &coefficient, unsigned eps_deg, unsigned delta_deg = 0);
    /// 1 - p
    static Poly complement(const Poly &p);

    const Terms &terms() const {
        return terms_;
    }
    bool is_zero() const {
        return terms_.empty();
    }
    Rational coefficient(unsigned eps_deg, unsigned delta_deg = 0) const;
    Rational constant_term() const {
        return coefficient(0, 0);
    }
    /// Highest total degree; 0 for the zero polynomial.
    unsigned total_degree() const;
    unsigned eps_degree() const;
    unsigned delta_degree() const;

    Poly &operator+=(const Poly &other);
    Poly &operator-=(const Poly &other);
    Poly &operator*=(const Poly &other);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly &b) {
        return a += b;
    }
    friend Poly operator-(Poly a, const Poly &b) {
        return a -= b;
    }
    friend Poly operator*(const Poly &a, const Poly &b);
    bool operator==(const Poly &other) const = default;

    Poly pow(unsigned exponent) const;

    Rational eval(const Rational &eps, const Rational &delta = Rational(0)) const;
    double eval_double(double eps, double delta = 0.0) const;

    /// Drops every term of total degree greater than `order`.
    Poly truncated(unsigned order) const;
    /// Substitutes delta := eps, giving a polynomial in eps alone.
    Poly with_delta_as_eps() const;
    /// Substitutes delta := 0.
    Poly without_delta() const;

    /// Human readable, e.g. "56*e^3 + 406*e^4 - 3/2*e*d".
    std::string str() const;

   private:
    void add_term(const Monomial &m, const Rational &c);

    Terms terms_;
};

/// Series-style product that discards terms of total degree above `order`.
Poly truncated_product(const Poly &a, const Poly &b, unsigned order);

/// JSON: list of {eps_deg, delta_deg, num, den}, integers as decimal strings.
nlohmann::json poly_to_json(const Poly &p);
Poly poly_from_json(const nlohmann::json &j);

}  // namespace erasure

#endif
