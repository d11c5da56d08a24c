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

#include <concepts>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "codensity/rational.hpp"
#include "codensity/set.hpp"
#include "codensity/topology.hpp"

namespace codensity {

/// Largest FX any functor will materialize.
constexpr std::size_t kMaxObjectSize = 4096;

/// A set endofunctor with an explicit element representation.
///
/// `elements(X)` lists FX in canonical order; `object(X)` is the same list as
/// a carrier. `map(f, e)` is (Ff)(e) for e ∈ F(dom f).
template <class F>
concept SetEndofunctor = requires(const F& func, const FiniteSet& x, const SetFunction& f,
                                  const typename F::Element& e) {
    typename F::Element;
    { func.name() } -> std::convertible_to<std::string>;
    { func.elements(x) } -> std::same_as<std::vector<typename F::Element>>;
    { func.map(f, e) } -> std::same_as<typename F::Element>;
    { func.label(e, x) } -> std::convertible_to<std::string>;
    { func.valid(e, x) } -> std::same_as<bool>;
    { func.object_size(x.size()) } -> std::convertible_to<std::size_t>;
    { e == e } -> std::convertible_to<bool>;
};

template <SetEndofunctor F>
FiniteSet functor_object(const F& func, const FiniteSet& x) {
    std::vector<std::string> labels;
    for (const auto& e : func.elements(x)) labels.push_back(func.label(e, x));
    return FiniteSet::in_order(std::move(labels));
}

template <SetEndofunctor F>
std::size_t functor_index(const F& func, const typename F::Element& e, const FiniteSet& x) {
    if (!func.valid(e, x)) throw InvalidInput(func.name() + ": element not in F(X)");
    if constexpr (requires { func.index(e, x); }) {
        return func.index(e, x);
    } else {
        const auto all = func.elements(x);
        for (std::size_t i = 0; i < all.size(); ++i)
            if (all[i] == e) return i;
        throw InvalidInput(func.name() + ": element not in F(X)");
    }
}

/// Ff : FX → FY as a base function.
template <SetEndofunctor F>
SetFunction functor_arrow(const F& func, const SetFunction& f) {
    const auto src = func.elements(f.dom());
    const auto dst = func.elements(f.cod());
    std::map<typename F::Element, std::size_t> where;
    for (std::size_t i = 0; i < dst.size(); ++i) where.emplace(dst[i], i);
    std::vector<std::size_t> table;
    table.reserve(src.size());
    for (const auto& e : src) table.push_back(where.at(func.map(f, e)));
    return SetFunction(functor_object(func, f.dom()), functor_object(func, f.cod()), std::move(table));
}

void require_object_size(const std::string& functor, std::size_t size);

/// Covariant powerset; subsets are bitmasks, FX ordered by mask value.
struct Powerset {
    using Element = Subset;

    std::string name() const { return "powerset"; }
    std::size_t object_size(std::size_t n) const;
    std::vector<Subset> elements(const FiniteSet& x) const;
    /// Direct image.
    Subset map(const SetFunction& f, Subset s) const;
    std::string label(Subset s, const FiniteSet& x) const { return subset_to_string(x, s); }
    bool valid(Subset s, const FiniteSet& x) const;
    std::size_t index(Subset s, const FiniteSet&) const { return static_cast<std::size_t>(s); }
};

/// A subdistribution with weights k/D; `weights[x]` holds the numerator k.
using Subdist = std::vector<std::uint32_t>;

/// Finite subdistributions with weights in {0, 1/D, …, 1} and total mass ≤ 1,
/// ordered lexicographically by numerator vector.
class Subdistribution {
public:
    using Element = Subdist;

    explicit Subdistribution(std::uint32_t denominator);

    std::string name() const { return "subdist"; }
    std::uint32_t denominator() const noexcept { return denominator_; }
    std::size_t object_size(std::size_t n) const;
    std::vector<Subdist> elements(const FiniteSet& x) const;
    /// Pushforward: sums weights over preimages.
    Subdist map(const SetFunction& f, const Subdist& p) const;
    std::string label(const Subdist& p, const FiniteSet& x) const;
    bool valid(const Subdist& p, const FiniteSet& x) const;

    Rational mass(const Subdist& p) const;
    Rational weight(const Subdist& p, std::size_t i) const { return Rational(p[i], denominator_); }
    /// Dirac δ_i over a carrier of size n.
    Subdist dirac(std::size_t n, std::size_t i) const;
    /// From exact weights; throws unless each weight is a multiple of 1/D and the mass ≤ 1.
    Subdist from_weights(const std::vector<Rational>& weights) const;

private:
    std::uint32_t denominator_;
};

/// Deterministic labelled transition systems: FX = Σ × X.
class DetLts {
public:
    struct Element {
        std::size_t letter = 0;
        std::size_t next = 0;
        friend auto operator<=>(const Element&, const Element&) = default;
    };

    explicit DetLts(FiniteSet alphabet);

    std::string name() const { return "detlts"; }
    const FiniteSet& alphabet() const noexcept { return alphabet_; }
    std::size_t object_size(std::size_t n) const { return alphabet_.size() * n; }
    std::vector<Element> elements(const FiniteSet& x) const;
    Element map(const SetFunction& f, const Element& e) const { return {e.letter, f(e.next)}; }
    std::string label(const Element& e, const FiniteSet& x) const;
    bool valid(const Element& e, const FiniteSet& x) const;
    std::size_t index(const Element& e, const FiniteSet& x) const { return e.letter * x.size() + e.next; }

private:
    FiniteSet alphabet_;
};

/// Deterministic automata: A_Σ X = 2 × X^Σ.
class Machine {
public:
    struct Element {
        bool accept = false;
        std::vector<std::size_t> next;
        friend auto operator<=>(const Element&, const Element&) = default;
    };

    explicit Machine(FiniteSet alphabet);

    std::string name() const { return "machine"; }
    const FiniteSet& alphabet() const noexcept { return alphabet_; }
    std::size_t object_size(std::size_t n) const;
    /// Ordered by accept flag, then the successor table read as a base-|X| numeral.
    std::vector<Element> elements(const FiniteSet& x) const;
    /// (t, ρ) ↦ (t, f∘ρ).
    Element map(const SetFunction& f, const Element& e) const;
    std::string label(const Element& e, const FiniteSet& x) const;
    bool valid(const Element& e, const FiniteSet& x) const;
    std::size_t index(const Element& e, const FiniteSet& x) const;

private:
    FiniteSet alphabet_;
};

/// The identity functor on Set.
struct IdentityFunctor {
    using Element = std::size_t;

    std::string name() const { return "identity"; }
    std::size_t object_size(std::size_t n) const { return n; }
    std::vector<std::size_t> elements(const FiniteSet& x) const;
    std::size_t map(const SetFunction& f, std::size_t e) const { return f(e); }
    std::string label(std::size_t e, const FiniteSet& x) const { return x.label(e); }
    bool valid(std::size_t e, const FiniteSet& x) const { return e < x.size(); }
    std::size_t index(std::size_t e, const FiniteSet&) const { return e; }
};

}  // namespace codensity
