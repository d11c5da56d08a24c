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

#include <functional>
#include <vector>

#include "codensity/functors.hpp"

// Modalities τ : FΩ → Ω. Two-valued ones return 0 for ⊥ and 1 for ⊤ on
// FiniteSet::two(); metric ones return exact rationals in [0,⊤].
namespace codensity::algebra {

inline constexpr std::size_t kBot = 0;
inline constexpr std::size_t kTop = 1;

/// ◇S = ⊤ iff ⊤ ∈ S.
std::function<std::size_t(const Subset&)> diamond();
/// □S = ⊤ iff ⊥ ∉ S.
std::function<std::size_t(const Subset&)> box();
/// inf over a subset of grid points; inf ∅ = ⊤.
std::function<Rational(const Subset&)> infimum(std::vector<Rational> grid, Rational top);
/// Expected value of a subdistribution over grid points (mass deficit contributes 0).
std::function<Rational(const Subdist&)> expectation(std::vector<Rational> grid, std::uint32_t denominator);
/// thr_r(p) = ⊤ iff p(⊤) ≥ r. Throws InvalidInput unless 0 ≤ r ≤ 1.
std::function<std::size_t(const Subdist&)> threshold(Rational r, std::uint32_t denominator);
/// acc(t, ρ) = t.
std::function<std::size_t(const Machine::Element&)> accept();
/// Next_a(t, ρ) = ρ(a).
std::function<std::size_t(const Machine::Element&)> next(std::size_t letter);
/// guard_a(σ, t) = ⊤ iff σ = a and t = ⊤.
std::function<std::size_t(const DetLts::Element&)> guard(std::size_t letter);
/// id : Ω → Ω, for the identity functor.
std::function<std::size_t(const std::size_t&)> identity();

/// A finite modality as a base function FΩ → Ω.
template <SetEndofunctor F>
SetFunction tabulate(const F& func, const std::function<std::size_t(const typename F::Element&)>& tau,
                     const FiniteSet& omega) {
    std::vector<std::size_t> table;
    for (const auto& e : func.elements(omega)) table.push_back(tau(e));
    return SetFunction(functor_object(func, omega), omega, std::move(table));
}

}  // namespace codensity::algebra
