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
#include <string>
#include <utility>
#include <vector>

#include "codensity/fibration.hpp"

namespace codensity {

/// A binary relation R ⊆ X×X stored as a dense |X|×|X| bit table.
class Relation {
public:
    Relation() = default;
    explicit Relation(FiniteSet base, bool full = false);
    Relation(FiniteSet base, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

    static Relation identity(const FiniteSet& base);
    static Relation from_labels(const FiniteSet& base,
                                const std::vector<std::pair<std::string, std::string>>& pairs);
    /// The equivalence whose classes are `blocks` (lists of element indices).
    static Relation from_blocks(const FiniteSet& base, const std::vector<std::vector<std::size_t>>& blocks);

    const FiniteSet& base() const noexcept { return base_; }
    std::size_t size() const noexcept { return base_.size(); }

    bool contains(std::size_t i, std::size_t j) const { return bits_[i * size() + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v = true) { bits_[i * size() + j] = v ? 1 : 0; }

    std::size_t cardinality() const;
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    bool reflexive() const;
    bool symmetric() const;
    bool transitive() const;
    bool is_preorder() const { return reflexive() && transitive(); }
    bool is_equivalence() const { return reflexive() && symmetric() && transitive(); }

    /// Equivalence classes, each sorted, ordered by least member. Requires is_equivalence().
    std::vector<std::vector<std::size_t>> blocks() const;

    std::string to_string() const;
    std::string blocks_to_string() const;

    friend bool operator==(const Relation& a, const Relation& b) {
        return a.bits_ == b.bits_ && a.base_ == b.base_;
    }

private:
    FiniteSet base_;
    std::vector<std::uint8_t> bits_;
};

enum class RelationKind { endo, preorder, equivalence };

/// ERel, Pre and EqRel over Set: order is inclusion, meet is intersection,
/// pullback is the preimage relation, top is X×X.
template <RelationKind Kind>
class RelationFibration {
public:
    using Element = Relation;
    using Value = std::size_t;

    std::string name() const;
    bool exact() const { return true; }

    Relation top(const FiniteSet& x) const { return Relation(x, true); }
    FiberOrderResult leq(const Relation& p, const Relation& q) const;
    Relation meet(const std::vector<Relation>& family, const FiniteSet& x) const;
    Relation pullback(const SetFunction& f, const Relation& q) const;
    Relation pullback_values(const std::vector<std::size_t>& values, const Relation& omega,
                             const FiniteSet& x) const;
    bool well_formed(const Relation& r) const;
    /// Every well-formed relation over x exactly once. Endorelations and
    /// preorders come ordered by cardinality, then lexicographically by pair
    /// list; equivalences in restricted-growth-string order.
    std::vector<Relation> enumerate(const FiniteSet& x) const;
    std::size_t height(std::size_t n) const { return n * n; }
    std::string to_string(const Relation& r) const;

    /// Largest carrier `enumerate` accepts.
    static constexpr std::size_t kMaxEnumerate = Kind == RelationKind::equivalence ? 7 : 4;
};

using ERel = RelationFibration<RelationKind::endo>;
using Pre = RelationFibration<RelationKind::preorder>;
using EqRel = RelationFibration<RelationKind::equivalence>;

extern template class RelationFibration<RelationKind::endo>;
extern template class RelationFibration<RelationKind::preorder>;
extern template class RelationFibration<RelationKind::equivalence>;

/// (2,≤): ⊥ ≤ ⊤ and ⊤ ≰ ⊥.
Relation omega_pre();
/// (2,=): equality on the two truth values.
Relation omega_eqrel();
/// The four-element diamond lattice 0 < l, r < 1 as a partial order.
Relation diamond_lattice();
/// Two incomparable points; a poset that is not a complete lattice.
Relation antichain(std::size_t n = 2);

}  // namespace codensity
