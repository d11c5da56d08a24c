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

// Brute-force references used by the tests. Nothing here calls the meet,
// enumeration or lifting code it is used to check, except where noted.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "codensity/bisimilarity.hpp"
#include "codensity/fibration.hpp"
#include "codensity/functors.hpp"
#include "codensity/pseudometric.hpp"
#include "codensity/relation.hpp"
#include "codensity/topology.hpp"

namespace codensity::reference {

#ifndef CODENSITY_CORPUS_DIR
#define CODENSITY_CORPUS_DIR "tests/corpus"
#endif

inline std::string corpus(const std::string& file) { return std::string(CODENSITY_CORPUS_DIR) + "/" + file; }

/// The greatest lower bound of `family` among `fiber`, found by scanning
/// with `leq` only; nullopt when no unique glb exists.
template <Fibration Fib>
std::optional<typename Fib::Element> glb_by_scan(const Fib& fib, const std::vector<typename Fib::Element>& fiber,
                                                 const std::vector<typename Fib::Element>& family) {
    std::vector<typename Fib::Element> lower;
    for (const auto& c : fiber) {
        bool ok = true;
        for (const auto& q : family) ok = ok && fib.leq(c, q).holds;
        if (ok) lower.push_back(c);
    }
    for (const auto& c : lower) {
        bool greatest = true;
        for (const auto& d : lower) greatest = greatest && fib.leq(d, c).holds;
        if (greatest) return c;
    }
    return std::nullopt;
}

/// Number of set partitions of an n-element set, by recursion on the block of the last element.
inline std::size_t count_partitions(std::size_t n, std::size_t blocks = 0) {
    if (n == 0) return 1;
    // The next element joins one of the existing blocks or opens a new one.
    return blocks * count_partitions(n - 1, blocks) + count_partitions(n - 1, blocks + 1);
}

/// Number of topologies on n points: families of subsets containing ∅ and X
/// and closed under binary ∪ and ∩, counted over all 2^(2^n) families.
inline std::size_t count_topologies(std::size_t n) {
    const std::size_t subsets = std::size_t{1} << n;
    const Subset full = full_subset(n);
    std::size_t count = 0;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
        auto has = [&](Subset s) { return (fam >> s) & 1U; };
        if (!has(0) || !has(full)) continue;
        bool closed = true;
        for (Subset a = 0; a < subsets && closed; ++a)
            for (Subset b = 0; b < subsets && closed; ++b)
                if (has(a) && has(b) && (!has(a | b) || !has(a & b))) closed = false;
        if (closed) ++count;
    }
    return count;
}

/// f is continuous from (X, s) to (Y, t): every open of t has an open preimage.
inline bool continuous(const SetFunction& f, const Topology& s, const Topology& t) {
    for (Subset u : t.opens()) {
        Subset pre = 0;
        for (std::size_t x = 0; x < f.dom().size(); ++x)
            if (subset_contains(u, f(x))) pre |= Subset{1} << x;
        if (!s.is_open(pre)) return false;
    }
    return true;
}

/// max(sup_{x∈S} inf_{y∈T} d, sup_{y∈T} inf_{x∈S} d) with sup ∅ = 0 and inf ∅ = ⊤.
inline Rational hausdorff_pair(const Pseudometric& d, Subset s, Subset t) {
    auto directed = [&](Subset a, Subset b) {
        Rational sup = 0;
        for (std::size_t x = 0; x < d.size(); ++x) {
            if (!subset_contains(a, x)) continue;
            Rational inf = d.top();
            for (std::size_t y = 0; y < d.size(); ++y)
                if (subset_contains(b, y) && d(x, y) < inf) inf = d(x, y);
            if (sup < inf) sup = inf;
        }
        return sup;
    };
    return std::max(directed(s, t), directed(t, s));
}

/// Every post-fixed point P ⊑ Φ(P) of the fiber over the coalgebra's carrier.
/// Uses the engine's Φ; the scan itself is the independent part.
template <Fibration Fib, SetEndofunctor F>
std::vector<typename Fib::Element> post_fixed_points(const Fib& fib, const ParameterFamily<Fib, F>& family,
                                                     const Coalgebra<F>& coalg, TestStrategy strategy) {
    std::vector<typename Fib::Element> out;
    for (const auto& p : fib.enumerate(coalg.carrier()))
        if (fib.leq(p, phi(fib, family, coalg, p, strategy)).holds) out.push_back(p);
    return out;
}

// Seeded generators.

using Rng = std::mt19937;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// A coalgebra with transitions drawn uniformly from F(X).
template <SetEndofunctor F>
Coalgebra<F> random_coalgebra(Rng& rng, const F& func, const FiniteSet& x) {
    const auto fx = func.elements(x);
    std::vector<typename F::Element> t;
    for (std::size_t i = 0; i < x.size(); ++i) t.push_back(fx[uniform(rng, 0, fx.size() - 1)]);
    return Coalgebra<F>(func, x, std::move(t));
}

/// A Kripke frame where each edge is present with probability 1/3.
inline Coalgebra<Powerset> random_kripke(Rng& rng, std::size_t n) {
    const FiniteSet x = FiniteSet::letters(n);
    std::vector<Subset> t(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (uniform(rng, 0, 2) == 0) t[i] |= Subset{1} << j;
    return Coalgebra<Powerset>(Powerset{}, x, std::move(t));
}

/// A Markov chain with numerators drawn by splitting mass D among the states and a deficit.
inline Coalgebra<Subdistribution> random_chain(Rng& rng, std::size_t n, std::uint32_t d) {
    const Subdistribution func(d);
    const FiniteSet x = FiniteSet::letters(n);
    std::vector<Subdist> t;
    for (std::size_t i = 0; i < n; ++i) {
        Subdist p(n, 0);
        for (std::uint32_t k = 0; k < d; ++k) {
            const std::size_t j = uniform(rng, 0, n);
            if (j < n) ++p[j];
        }
        t.push_back(std::move(p));
    }
    return Coalgebra<Subdistribution>(func, x, std::move(t));
}

/// A grid-valued pseudometric, by rejection sampling on the triangle inequality.
inline Pseudometric random_pseudometric(Rng& rng, std::size_t n, const std::vector<Rational>& grid) {
    const FiniteSet x = FiniteSet::letters(n);
    while (true) {
        Pseudometric d(x, grid.back());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) d.set(i, j, grid[uniform(rng, 0, grid.size() - 1)]);
        if (d.is_pseudometric()) return d;
    }
}

/// Words of length ≤ depth accepted from `state`, by direct unrolling.
inline std::set<std::string> accepted_words(const Coalgebra<Machine>& dfa, std::size_t state, std::size_t depth) {
    std::set<std::string> out;
    std::vector<std::pair<std::size_t, std::string>> frontier{{state, ""}};
    for (std::size_t len = 0; len <= depth; ++len) {
        std::vector<std::pair<std::size_t, std::string>> next;
        for (const auto& [s, w] : frontier) {
            if (dfa(s).accept) out.insert(w);
            for (std::size_t a = 0; a < dfa.functor().alphabet().size(); ++a)
                next.emplace_back(dfa(s).next[a], w + dfa.functor().alphabet().label(a));
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace codensity::reference
