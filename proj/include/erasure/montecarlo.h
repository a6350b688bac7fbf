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

#ifndef ERASURE_MONTECARLO_H
#define ERASURE_MONTECARLO_H

#include <cstdint>
#include <random>

#include "erasure/circuits.h"
#include "erasure/erasure_model.h"

namespace erasure {

struct McEstimate {
    double mean = 0;
    double std_error = 0;  // sqrt(mean (1 - mean) / trials)
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::uint64_t seed = 0;
};

/// Trials per shard. Each shard draws from its own generator seeded with
/// shard_seed(seed, shard), so results do not depend on the thread count.
constexpr std::uint64_t kTrialsPerShard = std::uint64_t{1} << 20;

/// SplitMix64 finalizer applied to seed + (shard + 1) * 0x9E3779B97F4A7C15.
std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard);

struct McOptions {
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Samples fresh erasures, then applies sampled correction attempts until the
/// block is clean or the procedure aborts. mean is the aborted fraction.
McEstimate simulate(Model model,
                    double eps,
                    double delta,
                    const McOptions &options,
                    const CircuitConfig &config = {});

/// One sampled correction attempt, driven by the same fault inventory and
/// effect function as the exact enumeration.
ErasurePattern sample_attempt(const ErasurePattern &pattern,
                              Model model,
                              double eps,
                              double delta,
                              const CircuitConfig &config,
                              std::mt19937_64 &rng);

struct ZReport {
    double z = 0;
    bool pass = false;
};

/// z = (mc.mean - exact) / mc.std_error; passes at |z| <= 3.
/// Throws std::invalid_argument when std_error is 0.
ZReport compare(const Rational &exact, const McEstimate &mc);

}  // namespace erasure

#endif
