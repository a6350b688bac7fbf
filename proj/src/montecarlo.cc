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

#include "erasure/montecarlo.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace erasure {

std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t shard) {
    std::uint64_t z = seed + (shard + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

/// Uniform double in [0,1) from the top 53 bits; identical on every platform.
double uniform(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool bernoulli(std::mt19937_64 &rng, double p) {
    return uniform(rng) < p;
}

ErasurePattern sample_initial(Model model, double eps, std::mt19937_64 &rng) {
    ErasurePattern p;
    for (int q = 1; q <= kNumQubits; q++) {
        double u = uniform(rng);
        if (model == Model::Ideal) {
            if (u < eps) {
                p.set(q, ErasureStatus::ZMeasured);
            }
        } else if (u < eps / 2) {
            p.set(q, ErasureStatus::FullyErased);
        } else if (u < eps) {
            p.set(q, ErasureStatus::ZErased);
        }
    }
    return p;
}

/// true if the trial ended in an aborted (encoded failure) block.
bool run_trial(Model model, double eps, double delta, const CircuitConfig &config, std::mt19937_64 &rng) {
    ErasurePattern p = sample_initial(model, eps, rng);
    while (true) {
        auto choice = select_step(p);
        if (std::holds_alternative<StepDone>(choice)) {
            return false;
        }
        if (std::holds_alternative<StepAbort>(choice)) {
            return true;
        }
        p = sample_attempt(p, model, eps, delta, config, rng);
    }
}

}  // namespace

ErasurePattern sample_attempt(const ErasurePattern &pattern,
                              Model model,
                              double eps,
                              double delta,
                              const CircuitConfig &config,
                              std::mt19937_64 &rng) {
    auto choice = select_step(pattern);
    if (std::holds_alternative<StepDone>(choice)) {
        return pattern;
    }
    if (std::holds_alternative<StepAbort>(choice)) {
        return failure_sink(model);
    }
    const auto &step = std::get<CorrectionStep>(choice);
    auto locs = fault_locations(pattern, step, model, config);
    std::uint32_t fired = 0;
    for (size_t k = 0; k < locs.size(); k++) {
        double p = locs[k].variable == FaultVariable::Eps ? eps : delta;
        bool any = false;
        for (unsigned m = 0; m < locs[k].multiplicity; m++) {
            any |= bernoulli(rng, p);
        }
        if (any) {
            fired |= std::uint32_t{1} << k;
        }
    }
    return apply_faults(pattern, step, locs, fired, model, config);
}

McEstimate simulate(Model model, double eps, double delta, const McOptions &options, const CircuitConfig &config) {
    if (options.trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (!(eps >= 0 && eps <= 1 && delta >= 0 && delta <= 1)) {
        throw std::invalid_argument("probabilities must lie in [0,1]");
    }
    if (model == Model::Ideal && delta != 0) {
        throw std::invalid_argument("the ideal model has lossless detectors; delta must be 0");
    }

    std::uint64_t shards = (options.trials + kTrialsPerShard - 1) / kTrialsPerShard;
    std::vector<std::uint64_t> failures(shards, 0);
    auto run_shard = [&](std::uint64_t s) {
        std::mt19937_64 rng(shard_seed(options.seed, s));
        std::uint64_t begin = s * kTrialsPerShard;
        std::uint64_t end = std::min(options.trials, begin + kTrialsPerShard);
        std::uint64_t count = 0;
        for (std::uint64_t t = begin; t < end; t++) {
            count += run_trial(model, eps, delta, config, rng) ? 1 : 0;
        }
        failures[s] = count;
    };

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, shards));
    if (threads <= 1) {
        for (std::uint64_t s = 0; s < shards; s++) {
            run_shard(s);
        }
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; w++) {
            pool.emplace_back([&, w] {
                for (std::uint64_t s = w; s < shards; s += threads) {
                    run_shard(s);
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    McEstimate est;
    est.trials = options.trials;
    est.seed = options.seed;
    for (auto f : failures) {
        est.failures += f;
    }
    est.mean = static_cast<double>(est.failures) / static_cast<double>(est.trials);
    est.std_error = std::sqrt(est.mean * (1 - est.mean) / static_cast<double>(est.trials));
    return est;
}

ZReport compare(const Rational &exact, const McEstimate &mc) {
    if (!(mc.std_error > 0)) {
        throw std::invalid_argument("Monte Carlo estimate has zero standard error; z-score undefined");
    }
    // Exact arithmetic on the (exactly representable) doubles, so the |z| = 3
    // boundary is decided without rounding.
    Rational z = (Rational(mc.mean) - exact) / Rational(mc.std_error);
    ZReport r;
    r.z = z.get_d();
    r.pass = abs(z) <= 3;
    return r;
}

}  // namespace erasure
