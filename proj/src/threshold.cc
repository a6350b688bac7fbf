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

#include "erasure/threshold.h"

#include <utility>

namespace erasure {

std::string break_even_name(BreakEvenKind kind) {
    switch (kind) {
        case BreakEvenKind::IdealGate:
            return "ideal_gate";
        case BreakEvenKind::LossyGate:
            return "lossy_gate";
        case BreakEvenKind::Measurement:
            return "measurement";
    }
    return "?";
}

Rational break_even_target(BreakEvenKind kind, const Rational &x) {
    return kind == BreakEvenKind::LossyGate ? Rational(x / 2) : x;
}

Rational measurement_recursion(const Rational &delta) {
    static constexpr int kBinomial7[8] = {1, 7, 21, 35, 35, 21, 7, 1};
    Rational keep = 1 - delta;
    Rational total(0);
    for (int i = 3; i <= 7; i++) {
        total += kBinomial7[i] * pow(delta, static_cast<unsigned>(i)) * pow(keep, static_cast<unsigned>(7 - i));
    }
    return total;
}

Recursion polynomial_recursion(const Poly &series) {
    return [series](const Rational &x) { return series.eval(x); };
}

Poly reference_ideal_series() {
    return Poly::term(56, 3) + Poly::term(406, 4) + Poly::term(3878, 5) + Poly::term(-129675, 6);
}

Poly reference_lossy_series() {
    return Poly::term(1050, 3) + Poly::term(33173, 4) + Poly::term(-46242, 5) + Poly::term(-6861701, 6);
}

Rational default_tolerance() {
    return Rational(1, 1000000);
}

namespace {

int sign(const Rational &r) {
    return sgn(r);
}

}  // namespace

ThresholdResult solve_break_even(const Recursion &recursion,
                                 BreakEvenKind kind,
                                 const Rational &lo,
                                 const Rational &hi,
                                 const Rational &tol) {
    if (!(lo < hi)) {
        throw std::invalid_argument("bracket must satisfy lo < hi");
    }
    if (tol <= 0) {
        throw std::invalid_argument("tolerance must be positive");
    }
    auto g = [&](const Rational &x) { return Rational(recursion(x) - break_even_target(kind, x)); };

    ThresholdResult r{0, lo, hi, 0};
    Rational g_lo = g(lo);
    Rational g_hi = g(hi);
    if (g_lo == 0) {
        r.root = r.hi = lo;
        return r;
    }
    if (g_hi == 0) {
        r.root = r.lo = hi;
        return r;
    }
    if (sign(g_lo) == sign(g_hi)) {
        throw NoSignChange("no break-even crossing in [" + to_decimal(lo, 6) + ", " + to_decimal(hi, 6) +
                               "]: recursion - target is " + to_decimal(g_lo, 8) + " and " + to_decimal(g_hi, 8),
                           lo, hi, g_lo, g_hi);
    }
    int s_lo = sign(g_lo);
    while (r.hi - r.lo > tol) {
        Rational mid = (r.lo + r.hi) / 2;
        Rational g_mid = g(mid);
        r.iterations++;
        if (g_mid == 0) {
            r.lo = r.hi = mid;
            break;
        }
        if (sign(g_mid) == s_lo) {
            r.lo = mid;
        } else {
            r.hi = mid;
        }
    }
    r.root = (r.lo + r.hi) / 2;
    return r;
}

std::vector<Rational> concat_projection(const Recursion &recursion,
                                        const Rational &eps0,
                                        unsigned levels,
                                        unsigned precision_bits) {
    std::vector<Rational> rates;
    rates.reserve(levels);
    Rational current = eps0;
    for (unsigned k = 0; k < levels; k++) {
        current = recursion(current);
        if (current.get_den() != 1 && mpz_sizeinbase(current.get_den_mpz_t(), 2) > precision_bits) {
            current = round_dyadic(current, precision_bits);
        }
        rates.push_back(current);
    }
    return rates;
}

}  // namespace erasure
