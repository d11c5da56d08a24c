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

// Law suites shared by the unit tests and the acceptance binary. Each returns
// the violations found, rendered, capped at a few dozen.

#include <string>
#include <vector>

#include "codensity/fibration.hpp"
#include "reference.hpp"

namespace codensity::laws {

struct Violations {
    std::size_t count = 0;
    std::vector<std::string> first;

    void add(std::string what) {
        ++count;
        if (first.size() < 8) first.push_back(std::move(what));
    }
    bool none() const { return count == 0; }
};

/// Reflexivity, antisymmetry and transitivity of leq on the fiber over n points.
template <Fibration Fib>
void order_laws(const Fib& fib, std::size_t n, Violations& v) {
    const auto fiber = fib.enumerate(FiniteSet::letters(n));
    for (const auto& p : fiber) {
        if (!fib.leq(p, p)) v.add(fib.name() + " leq not reflexive at " + fib.to_string(p));
        for (const auto& q : fiber) {
            const bool pq = fib.leq(p, q).holds;
            if (pq && fib.leq(q, p).holds && !(p == q))
                v.add(fib.name() + " leq not antisymmetric at " + fib.to_string(p) + ", " + fib.to_string(q));
            if (!pq) continue;
            for (const auto& r : fiber)
                if (fib.leq(q, r).holds && !fib.leq(p, r).holds)
                    v.add(fib.name() + " leq not transitive at " + fib.to_string(p) + ", " + fib.to_string(q) + ", " +
                          fib.to_string(r));
        }
    }
}

/// meet of the empty family, singletons and pairs is the glb found by scanning.
template <Fibration Fib>
void meet_laws(const Fib& fib, std::size_t n, Violations& v) {
    const FiniteSet x = FiniteSet::letters(n);
    const auto fiber = fib.enumerate(x);
    auto check = [&](const std::vector<typename Fib::Element>& family) {
        const auto m = fib.meet(family, x);
        if (!fib.well_formed(m)) v.add(fib.name() + " meet is not well formed: " + fib.to_string(m));
        const auto g = reference::glb_by_scan(fib, fiber, family);
        if (!g || !(*g == m)) v.add(fib.name() + " meet is not the glb: got " + fib.to_string(m));
    };
    check({});
    if (!(fib.meet({}, x) == fib.top(x))) v.add(fib.name() + " empty meet differs from top");
    for (std::size_t i = 0; i < fiber.size(); ++i) {
        check({fiber[i]});
        for (std::size_t j = i + 1; j < fiber.size(); ++j) check({fiber[i], fiber[j]});
    }
}

/// id* = id, (g∘f)* = f*∘g* and f*(⊓Q) = ⊓f*(Q) for |X|,|Y|,|Z| ≤ n.
/// Meet preservation is exhaustive for families of size ≤ 2; size-3 families are
/// drawn from `rng`, `triples` per (f, Y).
template <Fibration Fib>
void pullback_laws(const Fib& fib, std::size_t n, reference::Rng& rng, std::size_t triples, Violations& v) {
    std::vector<std::vector<typename Fib::Element>> fibers;
    for (std::size_t k = 0; k <= n; ++k) fibers.push_back(fib.enumerate(FiniteSet::letters(k)));
    for (std::size_t zs = 0; zs <= n; ++zs) {
        const FiniteSet z = FiniteSet::letters(zs);
        for (const auto& q : fibers[zs])
            if (!(fib.pullback(SetFunction::identity(z), q) == q))
                v.add(fib.name() + " id* changes " + fib.to_string(q));
    }
    for (std::size_t xs = 0; xs <= n; ++xs) {
        const FiniteSet x = FiniteSet::letters(xs);
        for (std::size_t ys = 0; ys <= n; ++ys) {
            const FiniteSet y = FiniteSet::letters(ys);
            const auto& fy = fibers[ys];
            for (const auto& f : enumerate_functions(x, y)) {
                std::vector<typename Fib::Element> pulled;
                pulled.reserve(fy.size());
                for (const auto& q : fy) {
                    pulled.push_back(fib.pullback(f, q));
                    if (!fib.well_formed(pulled.back())) v.add(fib.name() + " pullback is not well formed");
                }
                // Meets.
                if (!(fib.pullback(f, fib.meet({}, y)) == fib.meet({}, x)))
                    v.add(fib.name() + " f* does not preserve the empty meet along " + f.to_string());
                for (std::size_t i = 0; i < fy.size(); ++i) {
                    for (std::size_t j = i; j < fy.size(); ++j) {
                        if (!(fib.pullback(f, fib.meet({fy[i], fy[j]}, y)) == fib.meet({pulled[i], pulled[j]}, x)))
                            v.add(fib.name() + " f* does not preserve the meet of " + fib.to_string(fy[i]) + " and " +
                                  fib.to_string(fy[j]) + " along " + f.to_string());
                    }
                }
                if (!fy.empty()) {
                    for (std::size_t t = 0; t < triples; ++t) {
                        const std::size_t a = reference::uniform(rng, 0, fy.size() - 1);
                        const std::size_t b = reference::uniform(rng, 0, fy.size() - 1);
                        const std::size_t c = reference::uniform(rng, 0, fy.size() - 1);
                        if (!(fib.pullback(f, fib.meet({fy[a], fy[b], fy[c]}, y)) ==
                              fib.meet({pulled[a], pulled[b], pulled[c]}, x)))
                            v.add(fib.name() + " f* does not preserve a ternary meet along " + f.to_string());
                    }
                }
                // Composition with every g : Y → Z.
                for (std::size_t zs = 0; zs <= n; ++zs) {
                    const FiniteSet z = FiniteSet::letters(zs);
                    for (const auto& g : enumerate_functions(y, z)) {
                        const auto gf = compose(g, f);
                        for (const auto& r : fibers[zs])
                            if (!(fib.pullback(gf, r) == fib.pullback(f, fib.pullback(g, r))))
                                v.add(fib.name() + " (g.f)* differs from f*.g* at " + fib.to_string(r) + " with f = " +
                                      f.to_string() + ", g = " + g.to_string());
                    }
                }
            }
        }
    }
}

}  // namespace codensity::laws
