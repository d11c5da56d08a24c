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

#include <stdexcept>
#include <string>
#include <vector>

#include "codensity/functors.hpp"
#include "codensity/lifting.hpp"
#include "codensity/report.hpp"

namespace codensity {

/// An F-coalgebra c : X → FX, stored as one F-element per state.
template <SetEndofunctor F>
class Coalgebra {
public:
    using Element = typename F::Element;

    Coalgebra(F functor, FiniteSet carrier, std::vector<Element> transitions)
        : functor_(std::move(functor)), carrier_(std::move(carrier)), transitions_(std::move(transitions)) {
        if (transitions_.size() != carrier_.size()) {
            throw InvalidInput("coalgebra: " + std::to_string(transitions_.size()) + " transitions for " +
                               std::to_string(carrier_.size()) + " states");
        }
        for (std::size_t x = 0; x < transitions_.size(); ++x) {
            if (!functor_.valid(transitions_[x], carrier_)) {
                throw InvalidInput("coalgebra: transition of state '" + carrier_.label(x) + "' is not in F(X)");
            }
        }
    }

    const F& functor() const noexcept { return functor_; }
    const FiniteSet& carrier() const noexcept { return carrier_; }
    const std::vector<Element>& transitions() const noexcept { return transitions_; }
    const Element& operator()(std::size_t x) const { return transitions_[x]; }

    /// c as a base function X → FX.
    SetFunction structure() const {
        std::vector<std::size_t> table;
        table.reserve(transitions_.size());
        for (const auto& e : transitions_) table.push_back(functor_index(functor_, e, carrier_));
        return SetFunction(carrier_, functor_object(functor_, carrier_), std::move(table));
    }

private:
    F functor_;
    FiniteSet carrier_;
    std::vector<Element> transitions_;
};

/// f : (X,c) → (Y,d) with d∘f = Ff∘c, checked pointwise at construction.
template <SetEndofunctor F>
class CoalgebraMorphism {
public:
    CoalgebraMorphism(Coalgebra<F> from, Coalgebra<F> to, SetFunction map)
        : from_(std::move(from)), to_(std::move(to)), map_(std::move(map)) {
        if (!(map_.dom() == from_.carrier()) || !(map_.cod() == to_.carrier())) {
            throw InvalidInput("coalgebra morphism: map does not go between the carriers");
        }
        const F& func = from_.functor();
        for (std::size_t x = 0; x < from_.carrier().size(); ++x) {
            if (!(func.map(map_, from_(x)) == to_(map_(x)))) {
                throw InvalidInput("coalgebra morphism: d(f(" + from_.carrier().label(x) + ")) differs from Ff(c(" +
                                   from_.carrier().label(x) + "))");
            }
        }
    }

    const Coalgebra<F>& from() const noexcept { return from_; }
    const Coalgebra<F>& to() const noexcept { return to_; }
    const SetFunction& map() const noexcept { return map_; }

private:
    Coalgebra<F> from_;
    Coalgebra<F> to_;
    SetFunction map_;
};

template <SetEndofunctor F>
CoalgebraMorphism<F> compose(const CoalgebraMorphism<F>& g, const CoalgebraMorphism<F>& f) {
    return CoalgebraMorphism<F>(f.from(), g.to(), compose(g.map(), f.map()));
}

class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// ν₀ = ⊤, ν_{n+1} = Φ(ν_n) ⊓ ν_n, stopping at the first repeat.
template <class Element>
struct FixedPointTrace {
    std::vector<Element> iterates;
    /// Index of the first iterate equal to its predecessor.
    std::size_t converged_at = 0;

    const Element& result() const { return iterates.back(); }
};

/// Φ(P) = c*(ḞP), computed as the meet over parameters a and tests u ∈ 𝔼(P,Ω̂_a)
/// of (τ_a ∘ F(u) ∘ c)* Ω̂_a; pullback preserves meets, so FX is never materialized.
template <Fibration Fib, SetEndofunctor F>
typename Fib::Element phi(const Fib& fib, const ParameterFamily<Fib, F>& family, const Coalgebra<F>& coalg,
                          const typename Fib::Element& p, TestStrategy strategy) {
    if (!(p.base() == coalg.carrier())) throw InvalidInput("phi: element is not over the coalgebra's carrier");
    const F& func = coalg.functor();
    std::vector<typename Fib::Element> contributions;
    for (const auto& param : family) {
        for (const auto& u : hom_set(fib, p, param.omega, strategy)) {
            std::vector<typename Fib::Value> values;
            values.reserve(coalg.carrier().size());
            for (const auto& t : coalg.transitions()) values.push_back(param.tau(func.map(u, t)));
            contributions.push_back(fib.pullback_values(values, param.omega, coalg.carrier()));
        }
    }
    return fib.meet(contributions, coalg.carrier());
}

/// The codensity bisimilarity νΦ with its iterate trace.
template <Fibration Fib, SetEndofunctor F>
FixedPointTrace<typename Fib::Element> gfp(const Fib& fib, const ParameterFamily<Fib, F>& family,
                                           const Coalgebra<F>& coalg, TestStrategy strategy,
                                           std::size_t max_iter = 10'000) {
    FixedPointTrace<typename Fib::Element> trace;
    trace.iterates.push_back(fib.top(coalg.carrier()));
    for (std::size_t n = 0; n < max_iter; ++n) {
        const auto& current = trace.iterates.back();
        auto next = meet2(fib, phi(fib, family, coalg, current, strategy), current);
        const bool stable = next == current;
        trace.iterates.push_back(std::move(next));
        if (stable) {
            trace.converged_at = trace.iterates.size() - 1;
            return trace;
        }
    }
    throw NonConvergence("gfp: no fixed point within " + std::to_string(max_iter) + " iterations");
}

/// νΦ_c = f*(νΦ_d) for a coalgebra morphism f : (X,c) → (Y,d).
template <Fibration Fib, SetEndofunctor F>
CheckReport check_stability(const Fib& fib, const ParameterFamily<Fib, F>& family, const CoalgebraMorphism<F>& f,
                            TestStrategy strategy, bool certified = true) {
    CheckReport report;
    report.check = "stability";
    report.search_bound = "morphism " + f.map().to_string();
    report.advisory = !certified;
    const auto source = gfp(fib, family, f.from(), strategy).result();
    const auto pulled = fib.pullback(f.map(), gfp(fib, family, f.to(), strategy).result());
    report.pass = source == pulled;
    if (!report.pass) {
        report.witness = {{"f", f.map().to_string()},
                          {"source_bisimilarity", fib.to_string(source)},
                          {"pulled_back_target", fib.to_string(pulled)}};
    }
    return report;
}

/// Accepted words of length ≤ depth from each state, shortest first then
/// lexicographic; words are letter labels concatenated.
std::vector<std::vector<std::string>> language_map(const Coalgebra<Machine>& dfa, std::size_t depth);

}  // namespace codensity
