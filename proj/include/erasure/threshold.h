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

#ifndef ERASURE_THRESHOLD_H
#define ERASURE_THRESHOLD_H

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "erasure/poly.h"
#include "erasure/rational.h"

namespace erasure {

/// Level-1 error map: unencoded rate -> encoded rate.
using Recursion = std::function<Rational(const Rational &)>;

/// IdealGate: eps1 = eps. LossyGate: eps1 = eps/2 (only half of the lossy
/// failures are full erasures). Measurement: delta1 = delta.
enum class BreakEvenKind { IdealGate, LossyGate, Measurement };

std::string break_even_name(BreakEvenKind kind);
/// Right-hand side of the break-even condition at x.
Rational break_even_target(BreakEvenKind kind, const Rational &x);

/// Encoded failure rate of a measured block: the probability that at least
/// three of the seven qubit readouts are lost.
Rational measurement_recursion(const Rational &delta);

/// A truncated polynomial recursion in eps, evaluated exactly.
Recursion polynomial_recursion(const Poly &series);

/// Published truncated series of the two gate recursions, kept as fixtures.
Poly reference_ideal_series();
Poly reference_lossy_series();

struct ThresholdResult {
    Rational root;
    Rational lo;
    Rational hi;
    unsigned iterations = 0;
};

struct NoSignChange : std::runtime_error {
    NoSignChange(const std::string &what, Rational lo, Rational hi, Rational g_lo, Rational g_hi)
        : std::runtime_error(what), lo(std::move(lo)), hi(std::move(hi)), g_lo(std::move(g_lo)), g_hi(std::move(g_hi)) {
    }
    Rational lo;
    Rational hi;
    Rational g_lo;  // recursion(lo) - target(lo)
    Rational g_hi;
};

/// Default bracket width tolerance, 10^-6.
Rational default_tolerance();

/// Bisection of recursion(x) - target(x) on [lo, hi] down to width <= tol.
/// Exact sign evaluation; root is the final bracket midpoint.
ThresholdResult solve_break_even(const Recursion &recursion,
                                 BreakEvenKind kind,
                                 const Rational &lo,
                                 const Rational &hi,
                                 const Rational &tol = default_tolerance());

/// Rates at concatenation levels 1..levels, each the recursion of the
/// previous. Values are rounded to `precision_bits` binary digits between
/// levels so denominators stay bounded.
std::vector<Rational> concat_projection(const Recursion &recursion,
                                        const Rational &eps0,
                                        unsigned levels,
                                        unsigned precision_bits = 256);

}  // namespace erasure

#endif
