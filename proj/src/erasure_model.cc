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

#include "erasure/erasure_model.h"

#include <stdexcept>

namespace erasure {

std::string model_name(Model m) {
    return m == Model::Ideal ? "ideal" : "lossy";
}

Model parse_model(std::string_view name) {
    if (name == "ideal") {
        return Model::Ideal;
    }
    if (name == "lossy") {
        return Model::Lossy;
    }
    throw std::invalid_argument("unknown model '" + std::string(name) + "' (expected ideal or lossy)");
}

char status_char(ErasureStatus s) {
    switch (s) {
        case ErasureStatus::Intact:
            return '.';
        case ErasureStatus::ZMeasured:
            return 'M';
        case ErasureStatus::ZErased:
            return 'Z';
        case ErasureStatus::FullyErased:
            return 'E';
    }
    return '?';
}

ErasurePattern ErasurePattern::from_string(std::string_view text) {
    if (text.size() != kNumQubits) {
        throw std::invalid_argument("erasure pattern must have 7 characters: '" + std::string(text) + "'");
    }
    ErasurePattern p;
    for (int q = 1; q <= kNumQubits; q++) {
        switch (text[q - 1]) {
            case '.':
                break;
            case 'M':
                p.set(q, ErasureStatus::ZMeasured);
                break;
            case 'Z':
                p.set(q, ErasureStatus::ZErased);
                break;
            case 'E':
                p.set(q, ErasureStatus::FullyErased);
                break;
            default:
                throw std::invalid_argument("bad erasure pattern character in '" + std::string(text) +
                                            "' (expected one of . M Z E)");
        }
    }
    p.model_of(Model::Ideal);
    return p;
}

ErasurePattern ErasurePattern::uniform(ErasureStatus s) {
    ErasurePattern p;
    p.status_.fill(s);
    return p;
}

std::string ErasurePattern::str() const {
    std::string out;
    for (auto s : status_) {
        out += status_char(s);
    }
    return out;
}

int ErasurePattern::weight() const {
    return popcount(support());
}

QubitSet ErasurePattern::support() const {
    return static_cast<QubitSet>(kAllQubits & ~positions(ErasureStatus::Intact));
}

QubitSet ErasurePattern::positions(ErasureStatus s) const {
    QubitSet out = 0;
    for (int q = 1; q <= kNumQubits; q++) {
        if (at(q) == s) {
            out |= qubit_bit(q);
        }
    }
    return out;
}

int ErasurePattern::count(ErasureStatus s) const {
    return popcount(positions(s));
}

Model ErasurePattern::model_of(Model fallback) const {
    bool ideal = count(ErasureStatus::ZMeasured) > 0;
    bool lossy = count(ErasureStatus::ZErased) + count(ErasureStatus::FullyErased) > 0;
    if (ideal && lossy) {
        throw std::invalid_argument("pattern '" + str() +
                                    "' mixes Z measurements with lossy erasures; the two models are separate");
    }
    if (ideal) {
        return Model::Ideal;
    }
    if (lossy) {
        return Model::Lossy;
    }
    return fallback;
}

std::uint16_t ErasurePattern::key() const {
    std::uint16_t k = 0;
    for (int q = kNumQubits; q >= 1; q--) {
        k = static_cast<std::uint16_t>((k << 2) | static_cast<unsigned>(at(q)));
    }
    return k;
}

ErasurePattern ErasurePattern::permuted(const Permutation &perm) const {
    ErasurePattern out;
    for (int q = 1; q <= kNumQubits; q++) {
        out.set(perm[q - 1], at(q));
    }
    return out;
}

Correctability classify(const ErasurePattern &pattern) {
    int w = pattern.weight();
    if (w <= 2) {
        return Correctability::Correctable;
    }
    if (w == 3 && !supports_logical(pattern.support())) {
        return Correctability::Correctable;
    }
    return Correctability::ProcedureFail;
}

namespace {

constexpr std::array<ErasureStatus, 2> kIdealAlphabet{ErasureStatus::Intact, ErasureStatus::ZMeasured};
constexpr std::array<ErasureStatus, 3> kLossyAlphabet{
    ErasureStatus::Intact, ErasureStatus::ZErased, ErasureStatus::FullyErased};

size_t digit_of(Model model, ErasureStatus s) {
    if (model == Model::Ideal) {
        switch (s) {
            case ErasureStatus::Intact:
                return 0;
            case ErasureStatus::ZMeasured:
                return 1;
            default:
                break;
        }
    } else {
        switch (s) {
            case ErasureStatus::Intact:
                return 0;
            case ErasureStatus::ZErased:
                return 1;
            case ErasureStatus::FullyErased:
                return 2;
            default:
                break;
        }
    }
    throw std::invalid_argument("status '" + std::string(1, status_char(s)) + "' is not in the " + model_name(model) +
                                " model alphabet");
}

template <size_t N>
std::vector<ErasurePattern> enumerate_alphabet(const std::array<ErasureStatus, N> &alphabet) {
    size_t total = 1;
    for (int k = 0; k < kNumQubits; k++) {
        total *= N;
    }
    std::vector<ErasurePattern> out;
    out.reserve(total);
    for (size_t index = 0; index < total; index++) {
        ErasurePattern p;
        size_t rest = index;
        for (int q = 1; q <= kNumQubits; q++) {
            p.set(q, alphabet[rest % N]);
            rest /= N;
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace

const std::vector<ErasurePattern> &all_patterns(Model model) {
    static const std::vector<ErasurePattern> ideal = enumerate_alphabet(kIdealAlphabet);
    static const std::vector<ErasurePattern> lossy = enumerate_alphabet(kLossyAlphabet);
    return model == Model::Ideal ? ideal : lossy;
}

size_t pattern_index(Model model, const ErasurePattern &pattern) {
    size_t base = model == Model::Ideal ? 2 : 3;
    size_t index = 0;
    for (int q = kNumQubits; q >= 1; q--) {
        index = index * base + digit_of(model, pattern.at(q));
    }
    return index;
}

ErasurePattern failure_sink(Model model) {
    return ErasurePattern::uniform(model == Model::Ideal ? ErasureStatus::ZMeasured : ErasureStatus::FullyErased);
}

std::pair<int, int> composition(const ErasurePattern &pattern) {
    return {pattern.count(ErasureStatus::FullyErased),
            pattern.count(ErasureStatus::ZErased) + pattern.count(ErasureStatus::ZMeasured)};
}

PatternCensus enumerate_patterns(Model model) {
    PatternCensus census;
    for (const auto &p : all_patterns(model)) {
        census.total++;
        census.by_weight[static_cast<size_t>(p.weight())]++;
        census.by_composition[composition(p)]++;
        if (classify(p) == Correctability::Correctable) {
            census.correctable++;
        } else {
            census.procedure_fail++;
        }
    }
    return census;
}

ModelParams ModelParams::symbolic(Model model) {
    return {model, Poly::eps(), model == Model::Lossy ? Poly::delta() : Poly()};
}

ModelParams ModelParams::at(Model model, const Rational &eps, const Rational &delta) {
    if (eps < 0 || eps > 1 || delta < 0 || delta > 1) {
        throw std::invalid_argument("probabilities must lie in [0,1]");
    }
    if (model == Model::Ideal && delta != 0) {
        throw std::invalid_argument("the ideal model has lossless detectors; delta must be 0");
    }
    return {model, Poly(eps), Poly(delta)};
}

std::vector<Poly> initial_distribution(const ModelParams &params) {
    Poly intact = Poly::complement(params.eps);
    Poly measured = params.eps;
    Poly half_eps = params.eps * Poly(Rational(1, 2));

    const auto &patterns = all_patterns(params.model);
    std::vector<Poly> out;
    out.reserve(patterns.size());
    for (const auto &p : patterns) {
        int z = p.count(ErasureStatus::ZErased);
        int e = p.count(ErasureStatus::FullyErased);
        int m = p.count(ErasureStatus::ZMeasured);
        int w = z + e + m;
        Poly prob = intact.pow(static_cast<unsigned>(kNumQubits - w));
        if (params.model == Model::Ideal) {
            prob *= measured.pow(static_cast<unsigned>(m));
        } else {
            prob *= half_eps.pow(static_cast<unsigned>(z + e));
        }
        out.push_back(std::move(prob));
    }
    return out;
}

}  // namespace erasure
