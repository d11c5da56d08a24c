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
#include <string>
#include <vector>

#include "codensity/set.hpp"

namespace codensity {

/// Verdict of P ⊑ Q. `witness` describes a violating datum iff !holds.
struct FiberOrderResult {
    bool holds = true;
    std::string witness;

    explicit operator bool() const noexcept { return holds; }

    static FiberOrderResult yes() { return {}; }
    static FiberOrderResult no(std::string why) { return {false, std::move(why)}; }
};

/// A CLat⊓-fibration over finite sets.
///
/// Fibers are finite complete lattices whose order is `leq`; `meet` of an
/// empty family is `top`. `pullback` reindexes along a base function, and
/// `pullback_values` reindexes the observation object along a valuation
/// (a base function into its carrier, or exact values for metric instances).
template <class Fib>
concept Fibration = requires(const Fib& fib, const typename Fib::Element& e, const FiniteSet& x,
                             const SetFunction& f, const std::vector<typename Fib::Element>& family,
                             const std::vector<typename Fib::Value>& values) {
    typename Fib::Element;
    typename Fib::Value;
    { fib.name() } -> std::convertible_to<std::string>;
    { fib.exact() } -> std::same_as<bool>;
    { fib.top(x) } -> std::same_as<typename Fib::Element>;
    { fib.leq(e, e) } -> std::same_as<FiberOrderResult>;
    { fib.meet(family, x) } -> std::same_as<typename Fib::Element>;
    { fib.pullback(f, e) } -> std::same_as<typename Fib::Element>;
    { fib.pullback_values(values, e, x) } -> std::same_as<typename Fib::Element>;
    { fib.well_formed(e) } -> std::same_as<bool>;
    { fib.enumerate(x) } -> std::same_as<std::vector<typename Fib::Element>>;
    { fib.height(x.size()) } -> std::convertible_to<std::size_t>;
    { fib.to_string(e) } -> std::convertible_to<std::string>;
    { e.base() } -> std::convertible_to<const FiniteSet&>;
    { e == e } -> std::convertible_to<bool>;
};

template <Fibration Fib>
void require_same_base(const typename Fib::Element& p, const typename Fib::Element& q) {
    if (!(p.base() == q.base())) throw InvalidInput("fiber elements lie over different carriers");
}

template <Fibration Fib>
typename Fib::Element meet2(const Fib& fib, const typename Fib::Element& a, const typename Fib::Element& b) {
    require_same_base<Fib>(a, b);
    return fib.meet({a, b}, a.base());
}

/// f underlies an arrow P → Q iff P ⊑ f*Q.
template <Fibration Fib>
bool arrow_exists(const Fib& fib, const SetFunction& f, const typename Fib::Element& p,
                  const typename Fib::Element& q) {
    if (!(f.dom() == p.base()) || !(f.cod() == q.base())) {
        throw InvalidInput("arrow_exists: base function does not match the carriers");
    }
    return fib.leq(p, fib.pullback(f, q)).holds;
}

/// An arrow over f is Cartesian iff P = f*Q exactly.
template <Fibration Fib>
bool is_cartesian(const Fib& fib, const SetFunction& f, const typename Fib::Element& p,
                  const typename Fib::Element& q) {
    if (!arrow_exists(fib, f, p, q)) {
        throw InvalidInput("is_cartesian: " + f.to_string() + " is not an arrow between the given objects");
    }
    return p == fib.pullback(f, q);
}

}  // namespace codensity
