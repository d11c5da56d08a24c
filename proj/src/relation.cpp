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

#include "codensity/relation.hpp"

#include <algorithm>
#include <bit>

namespace codensity {

Relation::Relation(FiniteSet base, bool full)
    : base_(std::move(base)), bits_(base_.size() * base_.size(), full ? 1 : 0) {}

Relation::Relation(FiniteSet base, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : Relation(std::move(base)) {
    for (auto [i, j] : pairs) {
        if (i >= size() || j >= size()) throw InvalidInput("relation pair outside the carrier");
        set(i, j);
    }
}

Relation Relation::identity(const FiniteSet& base) {
    Relation r(base);
    for (std::size_t i = 0; i < base.size(); ++i) r.set(i, i);
    return r;
}

Relation Relation::from_labels(const FiniteSet& base,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
    Relation r(base);
    for (const auto& [a, b] : pairs) r.set(base.index_of(a), base.index_of(b));
    return r;
}

Relation Relation::from_blocks(const FiniteSet& base, const std::vector<std::vector<std::size_t>>& blocks) {
    std::vector<int> owner(base.size(), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw InvalidInput("equivalence block is empty");
        for (std::size_t i : blocks[b]) {
            if (i >= base.size()) throw InvalidInput("equivalence block element outside the carrier");
            if (owner[i] != -1) throw InvalidInput("element '" + base.label(i) + "' lies in two blocks");
            owner[i] = static_cast<int>(b);
        }
    }
    Relation r(base);
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (owner[i] == -1) throw InvalidInput("element '" + base.label(i) + "' is in no block");
        for (std::size_t j = 0; j < base.size(); ++j) r.set(i, j, owner[i] == owner[j]);
    }
    return r;
}

std::size_t Relation::cardinality() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (contains(i, j)) out.emplace_back(i, j);
    return out;
}

bool Relation::reflexive() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (!contains(i, i)) return false;
    return true;
}

bool Relation::symmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (contains(i, j) != contains(j, i)) return false;
    return true;
}

bool Relation::transitive() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (contains(i, j))
                for (std::size_t k = 0; k < n; ++k)
                    if (contains(j, k) && !contains(i, k)) return false;
    return true;
}

std::vector<std::vector<std::size_t>> Relation::blocks() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> placed(size(), false);
    for (std::size_t i = 0; i < size(); ++i) {
        if (placed[i]) continue;
        std::vector<std::size_t> block;
        for (std::size_t j = i; j < size(); ++j) {
            if (!placed[j] && contains(i, j)) {
                block.push_back(j);
                placed[j] = true;
            }
        }
        out.push_back(std::move(block));
    }
    return out;
}

std::string Relation::to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto [i, j] : pairs()) {
        if (!first) s += ",";
        first = false;
        s += "(" + base_.label(i) + "," + base_.label(j) + ")";
    }
    return s + "}";
}

std::string Relation::blocks_to_string() const {
    std::string s = "{";
    bool first_block = true;
    for (const auto& b : blocks()) {
        if (!first_block) s += ",";
        first_block = false;
        s += "{";
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (k) s += ",";
            s += base_.label(b[k]);
        }
        s += "}";
    }
    return s + "}";
}

template <RelationKind Kind>
std::string RelationFibration<Kind>::name() const {
    switch (Kind) {
        case RelationKind::endo: return "ERel";
        case RelationKind::preorder: return "Pre";
        case RelationKind::equivalence: return "EqRel";
    }
    return {};
}

template <RelationKind Kind>
FiberOrderResult RelationFibration<Kind>::leq(const Relation& p, const Relation& q) const {
    require_same_base<RelationFibration>(p, q);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p.contains(i, j) && !q.contains(i, j))
                return FiberOrderResult::no("(" + p.base().label(i) + "," + p.base().label(j) +
                                            ") related on the left only");
    return FiberOrderResult::yes();
}

template <RelationKind Kind>
Relation RelationFibration<Kind>::meet(const std::vector<Relation>& family, const FiniteSet& x) const {
    Relation out(x, true);
    for (const auto& r : family) {
        if (!(r.base() == x)) throw InvalidInput("meet: element over a different carrier");
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < x.size(); ++j)
                if (!r.contains(i, j)) out.set(i, j, false);
    }
    return out;
}

template <RelationKind Kind>
Relation RelationFibration<Kind>::pullback(const SetFunction& f, const Relation& q) const {
    if (!(f.cod() == q.base())) throw InvalidInput("pullback: codomain differs from the relation's carrier");
    return pullback_values(f.table(), q, f.dom());
}

template <RelationKind Kind>
Relation RelationFibration<Kind>::pullback_values(const std::vector<std::size_t>& values,
                                                  const Relation& omega, const FiniteSet& x) const {
    Relation out(x);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (omega.contains(values[i], values[j])) out.set(i, j);
    return out;
}

template <RelationKind Kind>
bool RelationFibration<Kind>::well_formed(const Relation& r) const {
    switch (Kind) {
        case RelationKind::endo: return true;
        case RelationKind::preorder: return r.is_preorder();
        case RelationKind::equivalence: return r.is_equivalence();
    }
    return false;
}

namespace {

// Equal-cardinality masks compare lexicographically by their sorted pair
// lists: the set holding the lowest differing pair comes first.
bool cardinality_lex_less(std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    std::uint32_t diff = a ^ b;
    return (a & (diff & (~diff + 1))) != 0;
}

Relation relation_from_mask(const FiniteSet& x, std::uint32_t mask) {
    Relation r(x);
    const std::size_t n = x.size();
    for (std::size_t k = 0; k < n * n; ++k)
        if (mask & (std::uint32_t{1} << k)) r.set(k / n, k % n);
    return r;
}

void partitions(std::size_t n, std::size_t i, std::vector<std::size_t>& rgs, std::size_t max_block,
                const FiniteSet& x, std::vector<Relation>& out) {
    if (i == n) {
        std::vector<std::vector<std::size_t>> blocks(n == 0 ? 0 : max_block + 1);
        for (std::size_t k = 0; k < n; ++k) blocks[rgs[k]].push_back(k);
        out.push_back(Relation::from_blocks(x, blocks));
        return;
    }
    const std::size_t limit = i == 0 ? 0 : max_block + 1;
    for (std::size_t b = 0; b <= limit; ++b) {
        rgs[i] = b;
        partitions(n, i + 1, rgs, std::max(max_block, b), x, out);
    }
}

}  // namespace

template <RelationKind Kind>
std::vector<Relation> RelationFibration<Kind>::enumerate(const FiniteSet& x) const {
    const std::size_t n = x.size();
    if (n > kMaxEnumerate) {
        throw InvalidInput(name() + " fiber enumeration is limited to carriers of size " +
                           std::to_string(kMaxEnumerate));
    }
    std::vector<Relation> out;
    if constexpr (Kind == RelationKind::equivalence) {
        std::vector<std::size_t> rgs(n, 0);
        partitions(n, 0, rgs, 0, x, out);
    } else {
        const std::uint32_t count = std::uint32_t{1} << (n * n);
        std::vector<std::uint32_t> masks;
        masks.reserve(count);
        for (std::uint32_t m = 0; m < count; ++m) masks.push_back(m);
        std::sort(masks.begin(), masks.end(), cardinality_lex_less);
        for (std::uint32_t m : masks) {
            Relation r = relation_from_mask(x, m);
            if (well_formed(r)) out.push_back(std::move(r));
        }
    }
    return out;
}

template <RelationKind Kind>
std::string RelationFibration<Kind>::to_string(const Relation& r) const {
    if constexpr (Kind == RelationKind::equivalence) {
        if (r.is_equivalence()) return r.blocks_to_string();
    }
    return r.to_string();
}

template class RelationFibration<RelationKind::endo>;
template class RelationFibration<RelationKind::preorder>;
template class RelationFibration<RelationKind::equivalence>;

Relation omega_pre() { return Relation(FiniteSet::two(), {{0, 0}, {0, 1}, {1, 1}}); }

Relation omega_eqrel() { return Relation::identity(FiniteSet::two()); }

Relation diamond_lattice() {
    // 0 = bottom, 1 = left, 2 = right, 3 = top.
    FiniteSet carrier = FiniteSet::in_order({"0", "l", "r", "1"});
    Relation r = Relation::identity(carrier);
    for (std::size_t j : {1, 2, 3}) r.set(0, j);
    r.set(1, 3);
    r.set(2, 3);
    return r;
}

Relation antichain(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return Relation::identity(FiniteSet(std::move(labels)));
}

}  // namespace codensity
