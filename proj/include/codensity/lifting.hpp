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
#include <string>
#include <vector>

#include "codensity/fibration.hpp"
#include "codensity/functors.hpp"

namespace codensity {

/// How test maps u : pP → Ω are drawn. `exhaustive` takes the whole hom-set
/// 𝔼(P, Ω̂) for a finite observation object; `grid` takes the grid-valued
/// part of it for metric instances, whose true Ω is [0,⊤].
enum class TestStrategy { exhaustive, grid };

inline std::string to_string(TestStrategy s) { return s == TestStrategy::exhaustive ? "exhaustive" : "grid"; }

template <Fibration Fib>
TestStrategy default_strategy(const Fib& fib) {
    return fib.exact() ? TestStrategy::exhaustive : TestStrategy::grid;
}

template <Fibration Fib>
void require_strategy(const Fib& fib, TestStrategy s) {
    if (s != default_strategy(fib)) {
        throw InvalidInput("strategy '" + to_string(s) + "' does not apply to the " + fib.name() + " fibration");
    }
}

/// (Ω̂, τ): an observation object above Ω and a modality τ : FΩ → Ω.
/// τ returns Fib::Value so metric modalities can produce exact off-grid values.
template <Fibration Fib, SetEndofunctor F>
struct LiftingParameter {
    std::string name;
    typename Fib::Element omega;
    std::function<typename Fib::Value(const typename F::Element&)> tau;
};

template <Fibration Fib, SetEndofunctor F>
using ParameterFamily = std::vector<LiftingParameter<Fib, F>>;

/// Largest number of candidate test maps a hom-set scan may visit.
constexpr std::uint64_t kMaxTestCandidates = std::uint64_t{1} << 22;

/// Every u : pP → Ω with P ⊑ u*Ω̂, in FunctionEnumerator order.
template <Fibration Fib>
std::vector<SetFunction> hom_set(const Fib& fib, const typename Fib::Element& p, const typename Fib::Element& omega,
                                 TestStrategy strategy) {
    require_strategy(fib, strategy);
    count_functions(p.base().size(), omega.base().size(), kMaxTestCandidates);
    std::vector<SetFunction> out;
    FunctionEnumerator e(p.base(), omega.base());
    while (e.next()) {
        if (fib.leq(p, fib.pullback(e.current(), omega)).holds) out.push_back(e.current());
    }
    return out;
}

/// (τ ∘ F(u))* Ω̂ over FX, where FX is listed by `fx_elements` and labelled by `fx`.
template <Fibration Fib, SetEndofunctor F>
typename Fib::Element test_observation(const Fib& fib, const F& func, const LiftingParameter<Fib, F>& param,
                                       const SetFunction& u, const std::vector<typename F::Element>& fx_elements,
                                       const FiniteSet& fx) {
    std::vector<typename Fib::Value> values;
    values.reserve(fx_elements.size());
    for (const auto& s : fx_elements) values.push_back(param.tau(func.map(u, s)));
    return fib.pullback_values(values, param.omega, fx);
}

/// The meet of test observations over an explicit set of test maps.
template <Fibration Fib, SetEndofunctor F>
typename Fib::Element lift_over_tests(const Fib& fib, const F& func, const LiftingParameter<Fib, F>& param,
                                      const FiniteSet& x, const std::vector<SetFunction>& tests) {
    const auto elems = func.elements(x);
    const FiniteSet fx = functor_object(func, x);
    std::vector<typename Fib::Element> contributions;
    contributions.reserve(tests.size());
    for (const auto& u : tests) contributions.push_back(test_observation(fib, func, param, u, elems, fx));
    return fib.meet(contributions, fx);
}

/// Codensity lifting ḞP = ⊓_{u ∈ 𝔼(P,Ω̂)} (F u)* τ* Ω̂. An empty hom-set gives the top of 𝔼_{FX}.
template <Fibration Fib, SetEndofunctor F>
typename Fib::Element codensity_lift(const Fib& fib, const F& func, const LiftingParameter<Fib, F>& param,
                                     const typename Fib::Element& p, TestStrategy strategy) {
    if (!fib.well_formed(p)) throw InvalidInput("codensity_lift: " + fib.name() + " element is not well formed");
    require_object_size(func.name(), func.object_size(p.base().size()));
    return lift_over_tests(fib, func, param, p.base(), hom_set(fib, p, param.omega, strategy));
}

/// Multi-parameter lift: the meet of the single-parameter lifts (top for an empty family).
template <Fibration Fib, SetEndofunctor F>
typename Fib::Element codensity_lift(const Fib& fib, const F& func, const ParameterFamily<Fib, F>& family,
                                     const typename Fib::Element& p, TestStrategy strategy) {
    require_object_size(func.name(), func.object_size(p.base().size()));
    const FiniteSet fx = functor_object(func, p.base());
    std::vector<typename Fib::Element> lifts;
    lifts.reserve(family.size());
    for (const auto& param : family) lifts.push_back(codensity_lift(fib, func, param, p, strategy));
    return fib.meet(lifts, fx);
}

/// Verifies that f : P → Q lifts to ḞP → ḞQ, i.e. ḞP ⊑ (F f)*(ḞQ).
template <Fibration Fib, SetEndofunctor F>
FiberOrderResult lift_arrow(const Fib& fib, const F& func, const ParameterFamily<Fib, F>& family,
                            const SetFunction& f, const typename Fib::Element& p, const typename Fib::Element& q,
                            TestStrategy strategy) {
    if (!arrow_exists(fib, f, p, q)) {
        throw InvalidInput("lift_arrow: " + f.to_string() + " is not an arrow P -> Q");
    }
    return fib.leq(codensity_lift(fib, func, family, p, strategy),
                   fib.pullback(functor_arrow(func, f), codensity_lift(fib, func, family, q, strategy)));
}

}  // namespace codensity
