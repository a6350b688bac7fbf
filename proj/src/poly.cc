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

#include <algorithm>
#include <stdexcept>

namespace erasure {

Poly::Poly(const Rational &constant) {
    add_term({0, 0}, constant);
}

Poly::Poly(long constant) : Poly(Rational(constant)) {
}

Poly Poly::eps() {
    return term(1, 1, 0);
}

Poly Poly::delta() {
    return term(1, 0, 1);
}

Poly Poly::term(const Rational &coefficient, unsigned eps_deg, unsigned delta_deg) {
    Poly p;
    p.add_term({eps_deg, delta_deg}, coefficient);
    return p;
}

Poly Poly::complement(const Poly &p) {
    return Poly(1) - p;
}

void Poly::add_term(const Monomial &m, const Rational &c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Rational Poly::coefficient(unsigned eps_deg, unsigned delta_deg) const {
    auto it = terms_.find({eps_deg, delta_deg});
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, m.total_degree());
    }
    return d;
}

unsigned Poly::eps_degree() const {
    unsigned d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, m.eps_deg);
    }
    return d;
}

unsigned Poly::delta_degree() const {
    unsigned d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, m.delta_deg);
    }
    return d;
}

Poly &Poly::operator+=(const Poly &other) {
    for (const auto &[m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

Poly &Poly::operator-=(const Poly &other) {
    for (const auto &[m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto &[m, c] : terms_) {
        r.terms_.emplace(m, -c);
    }
    return r;
}

Poly operator*(const Poly &a, const Poly &b) {
    Poly r;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            r.add_term({ma.eps_deg + mb.eps_deg, ma.delta_deg + mb.delta_deg}, ca * cb);
        }
    }
    return r;
}

Poly &Poly::operator*=(const Poly &other) {
    *this = *this * other;
    return *this;
}

Poly truncated_product(const Poly &a, const Poly &b, unsigned order) {
    Poly r;
    for (const auto &[ma, ca] : a.terms()) {
        if (ma.total_degree() > order) {
            continue;
        }
        for (const auto &[mb, cb] : b.terms()) {
            Monomial m{ma.eps_deg + mb.eps_deg, ma.delta_deg + mb.delta_deg};
            if (m.total_degree() <= order) {
                r += Poly::term(ca * cb, m.eps_deg, m.delta_deg);
            }
        }
    }
    return r;
}

Poly Poly::pow(unsigned exponent) const {
    Poly result(1);
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) {
            result *= base;
        }
        base *= base;
        exponent >>= 1;
    }
    return result;
}

Rational Poly::eval(const Rational &eps, const Rational &delta) const {
    Rational total(0);
    for (const auto &[m, c] : terms_) {
        total += c * erasure::pow(eps, m.eps_deg) * erasure::pow(delta, m.delta_deg);
    }
    return total;
}

double Poly::eval_double(double eps, double delta) const {
    double total = 0;
    for (const auto &[m, c] : terms_) {
        double t = c.get_d();
        for (unsigned k = 0; k < m.eps_deg; k++) {
            t *= eps;
        }
        for (unsigned k = 0; k < m.delta_deg; k++) {
            t *= delta;
        }
        total += t;
    }
    return total;
}

Poly Poly::truncated(unsigned order) const {
    Poly r;
    for (const auto &[m, c] : terms_) {
        if (m.total_degree() <= order) {
            r.terms_.emplace(m, c);
        }
    }
    return r;
}

Poly Poly::with_delta_as_eps() const {
    Poly r;
    for (const auto &[m, c] : terms_) {
        r.add_term({m.eps_deg + m.delta_deg, 0}, c);
    }
    return r;
}

Poly Poly::without_delta() const {
    Poly r;
    for (const auto &[m, c] : terms_) {
        if (m.delta_deg == 0) {
            r.terms_.emplace(m, c);
        }
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        bool has_var = m.eps_deg > 0 || m.delta_deg > 0;
        std::string factors;
        auto var = [&](const char *name, unsigned deg) {
            if (deg == 0) {
                return;
            }
            if (!factors.empty()) {
                factors += "*";
            }
            factors += name;
            if (deg > 1) {
                factors += "^" + std::to_string(deg);
            }
        };
        var("e", m.eps_deg);
        var("d", m.delta_deg);
        if (!has_var) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += factors;
        } else {
            out += to_string(mag) + "*" + factors;
        }
    }
    return out;
}

nlohmann::json poly_to_json(const Poly &p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &[m, c] : p.terms()) {
        arr.push_back({
            {"eps_deg", m.eps_deg},
            {"delta_deg", m.delta_deg},
            {"num", c.get_num().get_str()},
            {"den", c.get_den().get_str()},
        });
    }
    return arr;
}

Poly poly_from_json(const nlohmann::json &j) {
    if (!j.is_array()) {
        throw std::invalid_argument("poly JSON must be an array of terms");
    }
    Poly p;
    for (const auto &t : j) {
        auto num = t.at("num").get<std::string>();
        auto den = t.at("den").get<std::string>();
        p += Poly::term(
            make_rational(BigInt(num, 10), BigInt(den, 10)), t.at("eps_deg").get<unsigned>(), t.at("delta_deg").get<unsigned>());
    }
    return p;
}

}  // namespace erasure
