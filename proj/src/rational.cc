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

#include "erasure/rational.h"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>
#include <stdexcept>

namespace erasure {

Rational make_rational(const BigInt &num, const BigInt &den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    return make_rational(BigInt(std::to_string(num), 10), BigInt(std::to_string(den), 10));
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
    size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
    for (size_t k = start; k < text.size(); k++) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
        }
    }
    std::string s(text);
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return BigInt(s, 10);
}

BigInt pow10(unsigned n) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        return make_rational(parse_integer(text.substr(0, slash), text), parse_integer(text.substr(slash + 1), text));
    }

    std::string_view mantissa = text;
    long exponent = 0;
    auto e = text.find_first_of("eE");
    if (e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        exponent = parse_integer(text.substr(e + 1), text).get_si();
    }
    auto dot = mantissa.find('.');
    std::string digits(mantissa);
    if (dot != std::string_view::npos) {
        digits.erase(dot, 1);
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
        if (digits.empty() || digits == "-" || digits == "+") {
            throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
        }
    }
    BigInt num = parse_integer(digits, text);
    if (exponent >= 0) {
        return Rational(num * pow10(static_cast<unsigned>(exponent)));
    }
    return make_rational(num, pow10(static_cast<unsigned>(-exponent)));
}

std::string to_string(const Rational &r) {
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const Rational &r, int digits) {
    if (digits < 0) {
        digits = 0;
    }
    BigInt scale = pow10(static_cast<unsigned>(digits));
    Rational scaled = abs(r) * scale + Rational(1, 2);
    BigInt q = scaled.get_num() / scaled.get_den();
    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<size_t>(digits)) {
            s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
        }
        s.insert(s.size() - static_cast<size_t>(digits), ".");
    }
    if (r < 0 && q != 0) {
        s.insert(0, "-");
    }
    return s;
}

double to_double(const Rational &r) {
    if (r == 0) {
        return 0;
    }
    // mpq_get_d truncates; go through a 40-digit decimal and let strtod
    // round correctly.
    Rational a = abs(r);
    long e10 = static_cast<long>(std::floor(std::log10(a.get_d() > 0 ? a.get_d() : 1e-300)));
    long shift = 40 - e10;
    Rational scaled = shift >= 0 ? Rational(a * pow10(static_cast<unsigned>(shift)))
                                 : Rational(a / pow10(static_cast<unsigned>(-shift)));
    BigInt digits = scaled.get_num() / scaled.get_den();
    std::string text = (r < 0 ? "-" : "") + digits.get_str() + "e" + std::to_string(-shift);
    return std::strtod(text.c_str(), nullptr);
}

Rational round_dyadic(const Rational &r, unsigned bits) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    Rational shifted = r * scale + Rational(1, 2);
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return make_rational(q, scale);
}

Rational pow(const Rational &base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1u) {
            result *= b;
        }
        b *= b;
        exponent >>= 1;
    }
    return result;
}

}  // namespace erasure
