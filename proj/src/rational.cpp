/*
 * Copyright 2026 The codensity authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "codensity/rational.hpp"

#include <charconv>

#include "codensity/set.hpp"

namespace codensity {

namespace {

std::int64_t parse_integer(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    if (s.empty()) throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::int64_t num = parse_integer(text.substr(0, slash), text);
    std::int64_t den = 1;
    if (slash != std::string_view::npos) {
        den = parse_integer(text.substr(slash + 1), text);
        if (den <= 0) throw InvalidInput("rational '" + std::string(text) + "' needs a positive denominator");
    }
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace codensity
