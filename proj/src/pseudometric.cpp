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

#include "codensity/pseudometric.hpp"

namespace codensity {

Pseudometric::Pseudometric(FiniteSet base, Rational top)
    : base_(std::move(base)), top_(top), d_(base_.size() * base_.size(), Rational(0)) {}

void Pseudometric::set(std::size_t i, std::size_t j, const Rational& v) {
    d_[i * size() + j] = v;
    d_[j * size() + i] = v;
}

bool Pseudometric::is_pseudometric() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        if ((*this)(i, i) != Rational(0)) return false;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = (*this)(i, j);
            if (v < 0 || v > top_ || v != (*this)(j, i)) return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if ((*this)(i, k) > (*this)(i, j) + (*this)(j, k)) return false;
    return true;
}

std::string Pseudometric::to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (!first) s += ",";
            first = false;
            s += "d(" + base_.label(i) + "," + base_.label(j) + ")=" + format_rational((*this)(i, j));
        }
    }
    return s + "}";
}

PMet::PMet(Rational top, Rational step) : top_(top), step_(step) {
    if (top_ <= 0) throw InvalidInput("PMet: top value must be positive");
    if (step_ <= 0) throw InvalidInput("PMet: grid step must be positive");
    Rational q = top_ / step_;
    if (q.denominator() != 1) {
        throw InvalidInput("PMet: grid step " + format_rational(step_) + " does not divide top value " +
                           format_rational(top_));
    }
}

std::vector<Rational> PMet::grid() const {
    std::vector<Rational> g;
    const std::int64_t steps = (top_ / step_).numerator();
    for (std::int64_t k = 0; k <= steps; ++k) g.push_back(step_ * k);
    return g;
}

FiniteSet PMet::grid_carrier() const {
    std::vector<std::string> labels;
    for (const auto& v : grid()) labels.push_back(format_rational(v));
    return FiniteSet::in_order(std::move(labels));
}

Pseudometric PMet::omega() const {
    auto g = grid();
    Pseudometric d(grid_carrier(), top_);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) d.set(i, j, real_distance(g[i], g[j], top_));
    return d;
}

FiberOrderResult PMet::leq(const Pseudometric& p, const Pseudometric& q) const {
    require_same_base<PMet>(p, q);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p(i, j) < q(i, j))
                return FiberOrderResult::no("d(" + p.base().label(i) + "," + p.base().label(j) + ") is " +
                                            format_rational(p(i, j)) + " < " + format_rational(q(i, j)));
    return FiberOrderResult::yes();
}

Pseudometric PMet::meet(const std::vector<Pseudometric>& family, const FiniteSet& x) const {
    Pseudometric out(x, top_);
    for (const auto& d : family) {
        if (!(d.base() == x)) throw InvalidInput("meet: element over a different carrier");
        if (d.top() != top_) throw InvalidInput("meet: pseudometric with a different top value");
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j)
                if (d(i, j) > out(i, j)) out.set(i, j, d(i, j));
    }
    return out;
}

Pseudometric PMet::pullback(const SetFunction& f, const Pseudometric& q) const {
    if (!(f.cod() == q.base())) throw InvalidInput("pullback: codomain differs from the metric's carrier");
    Pseudometric out(f.dom(), q.top());
    for (std::size_t i = 0; i < f.dom().size(); ++i)
        for (std::size_t j = i + 1; j < f.dom().size(); ++j) out.set(i, j, q(f(i), f(j)));
    return out;
}

Pseudometric PMet::pullback_values(const std::vector<Rational>& values, const Pseudometric& omega,
                                   const FiniteSet& x) const {
    Pseudometric out(x, omega.top());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) out.set(i, j, real_distance(values[i], values[j], omega.top()));
    return out;
}

bool PMet::well_formed(const Pseudometric& d) const { return d.top() == top_ && d.is_pseudometric(); }

std::vector<Pseudometric> PMet::enumerate(const FiniteSet& x) const {
    const std::size_t n = x.size();
    const auto g = grid();
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::size_t candidates = 1;
    for (std::size_t k = 0; k < slots.size(); ++k) {
        candidates *= g.size();
        if (candidates > kMaxCandidates) {
            throw InvalidInput("PMet fiber enumeration over " + std::to_string(n) + " points with " +
                               std::to_string(g.size()) + " grid values exceeds the limit of " +
                               std::to_string(kMaxCandidates) + " candidates");
        }
    }
    std::vector<Pseudometric> out;
    std::vector<std::size_t> digits(slots.size(), 0);
    while (true) {
        Pseudometric d(x, top_);
        for (std::size_t k = 0; k < slots.size(); ++k) d.set(slots[k].first, slots[k].second, g[digits[k]]);
        if (d.is_pseudometric()) out.push_back(std::move(d));
        std::size_t k = digits.size();
        while (k > 0) {
            --k;
            if (++digits[k] < g.size()) break;
            digits[k] = 0;
            if (k == 0) return out;
        }
        if (digits.empty()) return out;
    }
}

std::size_t PMet::height(std::size_t n) const { return grid().size() * n * n; }

}  // namespace codensity
