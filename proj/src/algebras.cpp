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

#include "codensity/algebras.hpp"

namespace codensity::algebra {

std::function<std::size_t(const Subset&)> diamond() {
    return [](const Subset& s) -> std::size_t { return subset_contains(s, kTop) ? kTop : kBot; };
}

std::function<std::size_t(const Subset&)> box() {
    return [](const Subset& s) -> std::size_t { return subset_contains(s, kBot) ? kBot : kTop; };
}

std::function<Rational(const Subset&)> infimum(std::vector<Rational> grid, Rational top) {
    return [grid = std::move(grid), top](const Subset& s) {
        Rational best = top;
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (subset_contains(s, i) && grid[i] < best) best = grid[i];
        return best;
    };
}

std::function<Rational(const Subdist&)> expectation(std::vector<Rational> grid, std::uint32_t denominator) {
    return [grid = std::move(grid), denominator](const Subdist& p) {
        Rational sum = 0;
        for (std::size_t i = 0; i < p.size(); ++i) sum += grid[i] * static_cast<std::int64_t>(p[i]);
        return sum / static_cast<std::int64_t>(denominator);
    };
}

std::function<std::size_t(const Subdist&)> threshold(Rational r, std::uint32_t denominator) {
    if (r < 0 || r > 1) throw InvalidInput("thr_r needs 0 <= r <= 1, got " + format_rational(r));
    return [r, denominator](const Subdist& p) -> std::size_t {
        return Rational(p[kTop], denominator) >= r ? kTop : kBot;
    };
}

std::function<std::size_t(const Machine::Element&)> accept() {
    return [](const Machine::Element& e) -> std::size_t { return e.accept ? kTop : kBot; };
}

std::function<std::size_t(const Machine::Element&)> next(std::size_t letter) {
    return [letter](const Machine::Element& e) { return e.next.at(letter); };
}

std::function<std::size_t(const DetLts::Element&)> guard(std::size_t letter) {
    return [letter](const DetLts::Element& e) -> std::size_t {
        return e.letter == letter && e.next == kTop ? kTop : kBot;
    };
}

std::function<std::size_t(const std::size_t&)> identity() {
    return [](const std::size_t& e) { return e; };
}

}  // namespace codensity::algebra
