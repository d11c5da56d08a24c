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

#pragma once

#include <string>
#include <vector>

#include "codensity/fibration.hpp"
#include "codensity/rational.hpp"

namespace codensity {

/// A [0,⊤]-valued pseudometric on a finite carrier, exact rationals.
class Pseudometric {
public:
    Pseudometric() = default;
    /// The all-zero pseudometric.
    Pseudometric(FiniteSet base, Rational top);

    const FiniteSet& base() const noexcept { return base_; }
    const Rational& top() const noexcept { return top_; }
    std::size_t size() const noexcept { return base_.size(); }

    const Rational& operator()(std::size_t i, std::size_t j) const { return d_[i * size() + j]; }
    /// Sets d(i,j) and d(j,i).
    void set(std::size_t i, std::size_t j, const Rational& v);

    /// Zero diagonal, symmetric, values in [0,⊤], triangle inequality.
    bool is_pseudometric() const;
    std::string to_string() const;

    friend bool operator==(const Pseudometric& a, const Pseudometric& b) {
        return a.top_ == b.top_ && a.d_ == b.d_ && a.base_ == b.base_;
    }

private:
    FiniteSet base_;
    Rational top_{1};
    std::vector<Rational> d_;
};

/// PMet_⊤ over Set with test maps quantized to the grid {0, ε, 2ε, …, ⊤}.
///
/// The order is reversed: d₁ ⊑ d₂ iff d₁ ≥ d₂ pointwise. Meets are pointwise
/// sups and the top element is the all-zero pseudometric. `pullback_values`
/// pulls the real line ([0,⊤], min(|u−v|,⊤)) back along exact rational
/// values, which need not lie on the grid.
class PMet {
public:
    using Element = Pseudometric;
    using Value = Rational;

    /// Throws InvalidInput unless ⊤ > 0 and ε > 0 divides ⊤.
    PMet(Rational top, Rational step);

    std::string name() const { return "PMet"; }
    bool exact() const { return false; }
    const Rational& top_value() const noexcept { return top_; }
    const Rational& step() const noexcept { return step_; }

    /// {0, ε, …, ⊤} in increasing order.
    std::vector<Rational> grid() const;
    /// The grid as a carrier, labelled by canonical rational text.
    FiniteSet grid_carrier() const;
    /// ([0,⊤], d_ℝ) restricted to the grid.
    Pseudometric omega() const;

    Pseudometric top(const FiniteSet& x) const { return Pseudometric(x, top_); }
    FiberOrderResult leq(const Pseudometric& p, const Pseudometric& q) const;
    Pseudometric meet(const std::vector<Pseudometric>& family, const FiniteSet& x) const;
    Pseudometric pullback(const SetFunction& f, const Pseudometric& q) const;
    Pseudometric pullback_values(const std::vector<Rational>& values, const Pseudometric& omega,
                                 const FiniteSet& x) const;
    bool well_formed(const Pseudometric& d) const;
    /// All grid-valued pseudometrics over x, in lexicographic order of the
    /// upper-triangle distance list.
    std::vector<Pseudometric> enumerate(const FiniteSet& x) const;
    std::size_t height(std::size_t n) const;
    std::string to_string(const Pseudometric& d) const { return d.to_string(); }

    /// Cap on the number of candidate matrices `enumerate` may scan.
    static constexpr std::size_t kMaxCandidates = 2'000'000;

private:
    Rational top_;
    Rational step_;
};

/// The real-line distance min(|u−v|, ⊤).
inline Rational real_distance(const Rational& u, const Rational& v, const Rational& top) {
    Rational d = abs_diff(u, v);
    return d < top ? d : top;
}

}  // namespace codensity
