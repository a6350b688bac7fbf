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

#include "erasure/markov.h"

#include <stdexcept>

namespace erasure {

Poly TransitionMatrix::entry(int from, int to) const {
    const auto &row = rows[static_cast<size_t>(from)];
    auto it = row.find(to);
    return it == row.end() ? Poly() : it->second;
}

Poly TransitionMatrix::row_sum(int from) const {
    Poly total;
    for (const auto &[to, p] : rows[static_cast<size_t>(from)]) {
        total += p;
    }
    return total;
}

namespace {

std::map<int, Poly> class_distribution(const ErasurePattern &p,
                                       const ClassTable &classes,
                                       const ModelParams &params,
                                       const CircuitConfig &config) {
    std::map<int, Poly> out;
    for (const auto &[q, prob] : attempt(p, params, config).entries) {
        out[classes.class_of(q)] += prob;
    }
    std::erase_if(out, [](const auto &kv) { return kv.second.is_zero(); });
    return out;
}

}  // namespace

TransitionMatrix build_chain(const ClassTable &classes, const ModelParams &params, const CircuitConfig &config) {
    if (classes.model() != params.model) {
        throw std::invalid_argument("class table and parameters belong to different models");
    }
    TransitionMatrix chain{classes, {}};
    chain.rows.reserve(classes.size());
    for (const auto &c : classes.classes()) {
        auto row = class_distribution(c.representative, classes, params, config);
        for (const auto &member : c.members) {
            if (member == c.representative) {
                continue;
            }
            if (class_distribution(member, classes, params, config) != row) {
                throw ClassUnsound("class " + c.label + " is not lumpable: " + member.str() + " and " +
                                   c.representative.str() + " disagree after one attempt");
            }
        }
        chain.rows.push_back(std::move(row));
    }
    return chain;
}

namespace {

using RationalRows = std::vector<std::map<int, Rational>>;

RationalRows evaluate_rows(const TransitionMatrix &chain, const Rational &eps, const Rational &delta) {
    RationalRows out(chain.rows.size());
    for (size_t i = 0; i < chain.rows.size(); i++) {
        for (const auto &[j, p] : chain.rows[i]) {
            Rational v = p.eval(eps, delta);
            if (v != 0) {
                out[i][j] = v;
            }
        }
    }
    return out;
}

/// Probability of eventually reaching the fail class from each class.
std::vector<Rational> absorption_into_fail(const RationalRows &rows, int done, int fail) {
    size_t n = rows.size();
    std::vector<Rational> f(n);
    std::vector<bool> known(n, false);
    known[static_cast<size_t>(done)] = true;
    known[static_cast<size_t>(fail)] = true;
    f[static_cast<size_t>(fail)] = 1;

    // Peel off states whose successors (other than themselves) are solved.
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t i = 0; i < n; i++) {
            if (known[i]) {
                continue;
            }
            Rational self(0);
            Rational acc(0);
            bool ready = true;
            for (const auto &[j, p] : rows[i]) {
                if (static_cast<size_t>(j) == i) {
                    self = p;
                } else if (known[static_cast<size_t>(j)]) {
                    acc += p * f[static_cast<size_t>(j)];
                } else {
                    ready = false;
                    break;
                }
            }
            if (!ready) {
                continue;
            }
            f[i] = self == 1 ? Rational(0) : Rational(acc / (1 - self));
            known[i] = true;
            progress = true;
        }
    }

    std::vector<size_t> unknown;
    std::vector<int> slot(n, -1);
    for (size_t i = 0; i < n; i++) {
        if (!known[i]) {
            slot[i] = static_cast<int>(unknown.size());
            unknown.push_back(i);
        }
    }
    size_t m = unknown.size();
    if (m == 0) {
        return f;
    }

    // (I - Q) x = r over the remaining states, dense Gauss-Jordan.
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (size_t r = 0; r < m; r++) {
        size_t i = unknown[r];
        a[r][r] = 1;
        for (const auto &[j, p] : rows[i]) {
            if (known[static_cast<size_t>(j)]) {
                a[r][m] += p * f[static_cast<size_t>(j)];
            } else {
                a[r][static_cast<size_t>(slot[static_cast<size_t>(j)])] -= p;
            }
        }
    }
    for (size_t col = 0; col < m; col++) {
        size_t pivot = col;
        while (pivot < m && a[pivot][col] == 0) {
            pivot++;
        }
        if (pivot == m) {
            throw std::runtime_error("absorbing chain has a closed transient set; absorption is not certain");
        }
        std::swap(a[pivot], a[col]);
        Rational inv = 1 / a[col][col];
        for (size_t k = col; k <= m; k++) {
            a[col][k] *= inv;
        }
        for (size_t r = 0; r < m; r++) {
            if (r == col || a[r][col] == 0) {
                continue;
            }
            Rational factor = a[r][col];
            for (size_t k = col; k <= m; k++) {
                if (a[col][k] != 0) {
                    a[r][k] -= factor * a[col][k];
                }
            }
        }
    }
    for (size_t r = 0; r < m; r++) {
        f[unknown[r]] = a[r][m];
    }
    return f;
}

}  // namespace

ChainResult run_to_absorption(const TransitionMatrix &chain,
                              const std::vector<Poly> &initial,
                              const Rational &eps,
                              const Rational &delta,
                              std::optional<unsigned> max_attempts) {
    if (initial.size() != chain.rows.size()) {
        throw std::invalid_argument("initial distribution does not match the chain size");
    }
    if (max_attempts && *max_attempts == 0) {
        throw std::invalid_argument("max_attempts must be at least 1");
    }
    auto rows = evaluate_rows(chain, eps, delta);
    std::vector<Rational> x(initial.size());
    for (size_t i = 0; i < initial.size(); i++) {
        x[i] = initial[i].eval(eps, delta);
    }
    auto done = static_cast<size_t>(chain.done_id());
    auto fail = static_cast<size_t>(chain.fail_id());

    ChainResult result;
    if (max_attempts) {
        for (unsigned t = 0; t < *max_attempts; t++) {
            std::vector<Rational> next(x.size());
            for (size_t i = 0; i < x.size(); i++) {
                if (x[i] == 0) {
                    continue;
                }
                for (const auto &[j, p] : rows[i]) {
                    next[static_cast<size_t>(j)] += x[i] * p;
                }
            }
            x = std::move(next);
        }
        result.encoded_failure = x[fail];
        result.attempts_used = *max_attempts;
        result.residual_mass = 1 - x[done] - x[fail];
        return result;
    }

    auto f = absorption_into_fail(rows, chain.done_id(), chain.fail_id());
    Rational total(0);
    for (size_t i = 0; i < x.size(); i++) {
        total += x[i] * f[i];
    }
    result.encoded_failure = total;
    result.residual_mass = 0;
    return result;
}

namespace {

Poly to_diagonal(const Poly &p, Model model) {
    return model == Model::Lossy ? p.with_delta_as_eps() : p.without_delta();
}

}  // namespace

Poly encoded_failure_series(const TransitionMatrix &chain, const std::vector<Poly> &initial, unsigned order) {
    size_t n = chain.rows.size();
    auto done = static_cast<size_t>(chain.done_id());
    auto fail = static_cast<size_t>(chain.fail_id());

    std::vector<std::vector<std::pair<size_t, Poly>>> rows(n);
    for (size_t i = 0; i < n; i++) {
        for (const auto &[j, p] : chain.rows[i]) {
            Poly d = to_diagonal(p, chain.model()).truncated(order);
            if (!d.is_zero()) {
                rows[i].emplace_back(static_cast<size_t>(j), std::move(d));
            }
        }
    }

    // Jacobi iteration f <- Q f + r. At eps = 0 every attempt strictly
    // shrinks the erasure, so Q is nilpotent there and the truncated
    // iteration reaches an exact fixed point.
    std::vector<Poly> f(n);
    f[fail] = Poly(1);
    size_t max_iterations = (n + 2) * (order + 2) + 16;
    bool converged = false;
    for (size_t it = 0; it < max_iterations && !converged; it++) {
        std::vector<Poly> next(n);
        next[fail] = Poly(1);
        for (size_t i = 0; i < n; i++) {
            if (i == done || i == fail) {
                continue;
            }
            for (const auto &[j, p] : rows[i]) {
                next[i] += truncated_product(p, f[j], order);
            }
        }
        converged = next == f;
        f = std::move(next);
    }
    if (!converged) {
        throw std::runtime_error("series iteration did not converge; the zero-noise chain has a cycle");
    }

    Poly total;
    for (size_t i = 0; i < n; i++) {
        total += truncated_product(to_diagonal(initial[i], chain.model()), f[i], order);
    }
    return total;
}

EncodedChain::EncodedChain(Model model, const CircuitConfig &config, bool reduce)
    : config_(config),
      chain_(build_chain(reduce ? reduced_classes(model, config) : orbit_classes(model, {}),
                         ModelParams::symbolic(model),
                         config)),
      initial_(class_initial_distribution(chain_.classes, ModelParams::symbolic(model))) {
}

Rational EncodedChain::encoded_failure(const Rational &eps, const Rational &delta) const {
    ModelParams::at(model(), eps, delta);
    return run_to_absorption(chain_, initial_, eps, delta).encoded_failure;
}

Rational EncodedChain::encoded_failure_on_diagonal(const Rational &eps) const {
    return encoded_failure(eps, model() == Model::Lossy ? eps : Rational(0));
}

ChainResult EncodedChain::run(const Rational &eps, const Rational &delta, std::optional<unsigned> max_attempts) const {
    ModelParams::at(model(), eps, delta);
    return run_to_absorption(chain_, initial_, eps, delta, max_attempts);
}

Poly EncodedChain::series(unsigned order) const {
    return encoded_failure_series(chain_, initial_, order);
}

Poly recursion_series(Model model, unsigned order, const CircuitConfig &config) {
    if (order > static_cast<unsigned>(kNumQubits)) {
        throw std::invalid_argument("series order must be at most 7");
    }
    return EncodedChain(model, config).series(order);
}

nlohmann::json chain_to_json(const TransitionMatrix &chain) {
    nlohmann::json entries = nlohmann::json::array();
    for (size_t i = 0; i < chain.rows.size(); i++) {
        for (const auto &[j, p] : chain.rows[i]) {
            entries.push_back({{"from", i}, {"to", j}, {"probability", poly_to_json(p)}, {"text", p.str()}});
        }
    }
    auto j = class_table_to_json(chain.classes);
    j["absorbing"] = {chain.done_id(), chain.fail_id()};
    j["entries"] = entries;
    return j;
}

}  // namespace erasure
