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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codensity/fibration.hpp"

namespace codensity {

/// Subsets of a carrier with at most 64 points.
using Subset = std::uint64_t;

constexpr std::size_t kMaxTopologyCarrier = 64;

inline Subset full_subset(std::size_t n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }
inline bool subset_contains(Subset s, std::size_t i) { return (s >> i) & 1U; }

std::string subset_to_string(const FiniteSet& base, Subset s);

/// A finite topology: the family of open sets, sorted ascending by bitmask.
class Topology {
public:
    Topology() = default;
    /// Takes `opens` as given (sorted, deduplicated); no closure is applied.
    Topology(FiniteSet base, std::vector<Subset> opens);

    static Topology indiscrete(const FiniteSet& base);
    static Topology discrete(const FiniteSet& base);
    /// The coarsest topology containing `subbasis`: finite intersections form
    /// a basis whose unions are the opens.
    static Topology generated(const FiniteSet& base, const std::vector<Subset>& subbasis);

    const FiniteSet& base() const noexcept { return base_; }
    const std::vector<Subset>& opens() const noexcept { return opens_; }
    bool is_open(Subset s) const;

    /// Contains ∅ and X, closed under binary union and intersection.
    bool is_topology() const;
    /// An open containing exactly one of i, j, or nullopt when no open separates them.
    std::optional<Subset> separating_open(std::size_t i, std::size_t j) const;

    std::string to_string() const;

    friend bool operator==(const Topology& a, const Topology& b) {
        return a.opens_ == b.opens_ && a.base_ == b.base_;
    }

private:
    FiniteSet base_;
    std::vector<Subset> opens_;
};

/// Top over Set. P ⊑ Q iff the identity P → Q is continuous (Q's opens are
/// opens of P), so finer topologies lie lower. The meet is the topology
/// generated by the union of the families, top is the indiscrete topology,
/// and pullback is the initial topology {f⁻¹(U)}.
class TopFibration {
public:
    using Element = Topology;
    using Value = std::size_t;

    std::string name() const { return "Top"; }
    bool exact() const { return true; }

    Topology top(const FiniteSet& x) const { return Topology::indiscrete(x); }
    FiberOrderResult leq(const Topology& p, const Topology& q) const;
    Topology meet(const std::vector<Topology>& family, const FiniteSet& x) const;
    Topology pullback(const SetFunction& f, const Topology& q) const;
    Topology pullback_values(const std::vector<std::size_t>& values, const Topology& omega,
                             const FiniteSet& x) const;
    bool well_formed(const Topology& t) const { return t.is_topology(); }
    /// All topologies on x (|x| ≤ kMaxEnumerate), sorted by open-family size then lexicographically.
    std::vector<Topology> enumerate(const FiniteSet& x) const;
    std::size_t height(std::size_t n) const { return n >= 63 ? ~std::size_t{0} : (std::size_t{1} << n); }
    std::string to_string(const Topology& t) const { return t.to_string(); }

    static constexpr std::size_t kMaxEnumerate = 4;
};

/// The Sierpinski space on {bot, top} with opens {∅, {top}, {bot, top}}.
Topology omega_sierpinski();

}  // namespace codensity
