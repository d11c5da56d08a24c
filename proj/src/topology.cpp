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

#include "codensity/topology.hpp"

#include <algorithm>
#include <unordered_set>

namespace codensity {

namespace {

void canonicalize(std::vector<Subset>& family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

void require_small(const FiniteSet& base) {
    if (base.size() > kMaxTopologyCarrier) {
        throw InvalidInput("topologies are limited to carriers of " + std::to_string(kMaxTopologyCarrier) +
                           " points");
    }
}

}  // namespace

std::string subset_to_string(const FiniteSet& base, Subset s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (!subset_contains(s, i)) continue;
        if (!first) out += ",";
        first = false;
        out += base.label(i);
    }
    return out + "}";
}

Topology::Topology(FiniteSet base, std::vector<Subset> opens) : base_(std::move(base)), opens_(std::move(opens)) {
    require_small(base_);
    const Subset full = full_subset(base_.size());
    for (Subset s : opens_) {
        if (s & ~full) throw InvalidInput("open set mentions points outside the carrier");
    }
    canonicalize(opens_);
}

Topology Topology::indiscrete(const FiniteSet& base) {
    return Topology(base, {Subset{0}, full_subset(base.size())});
}

Topology Topology::discrete(const FiniteSet& base) {
    require_small(base);
    if (base.size() > 20) throw InvalidInput("discrete topology too large to materialize");
    std::vector<Subset> all;
    for (Subset s = 0; s <= full_subset(base.size()); ++s) all.push_back(s);
    return Topology(base, std::move(all));
}

Topology Topology::generated(const FiniteSet& base, const std::vector<Subset>& subbasis) {
    require_small(base);
    const Subset full = full_subset(base.size());
    std::vector<Subset> basis{full};
    std::unordered_set<Subset> seen{full};
    for (Subset s : subbasis) {
        const std::size_t existing = basis.size();
        for (std::size_t k = 0; k < existing; ++k) {
            Subset t = basis[k] & s;
            if (seen.insert(t).second) basis.push_back(t);
        }
    }
    std::vector<Subset> opens{Subset{0}};
    std::unordered_set<Subset> open_seen{Subset{0}};
    for (Subset b : basis) {
        const std::size_t existing = opens.size();
        for (std::size_t k = 0; k < existing; ++k) {
            Subset t = opens[k] | b;
            if (open_seen.insert(t).second) opens.push_back(t);
        }
    }
    return Topology(base, std::move(opens));
}

bool Topology::is_open(Subset s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

bool Topology::is_topology() const {
    if (!is_open(0) || !is_open(full_subset(base_.size()))) return false;
    for (std::size_t i = 0; i < opens_.size(); ++i)
        for (std::size_t j = i + 1; j < opens_.size(); ++j)
            if (!is_open(opens_[i] | opens_[j]) || !is_open(opens_[i] & opens_[j])) return false;
    return true;
}

std::optional<Subset> Topology::separating_open(std::size_t i, std::size_t j) const {
    for (Subset u : opens_)
        if (subset_contains(u, i) != subset_contains(u, j)) return u;
    return std::nullopt;
}

std::string Topology::to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < opens_.size(); ++k) {
        if (k) s += ",";
        s += subset_to_string(base_, opens_[k]);
    }
    return s + "}";
}

FiberOrderResult TopFibration::leq(const Topology& p, const Topology& q) const {
    require_same_base<TopFibration>(p, q);
    for (Subset u : q.opens())
        if (!p.is_open(u))
            return FiberOrderResult::no(subset_to_string(q.base(), u) + " is open on the right only");
    return FiberOrderResult::yes();
}

Topology TopFibration::meet(const std::vector<Topology>& family, const FiniteSet& x) const {
    std::vector<Subset> subbasis;
    for (const auto& t : family) {
        if (!(t.base() == x)) throw InvalidInput("meet: element over a different carrier");
        subbasis.insert(subbasis.end(), t.opens().begin(), t.opens().end());
    }
    canonicalize(subbasis);
    return Topology::generated(x, subbasis);
}

Topology TopFibration::pullback(const SetFunction& f, const Topology& q) const {
    if (!(f.cod() == q.base())) throw InvalidInput("pullback: codomain differs from the topology's carrier");
    return pullback_values(f.table(), q, f.dom());
}

Topology TopFibration::pullback_values(const std::vector<std::size_t>& values, const Topology& omega,
                                       const FiniteSet& x) const {
    require_small(x);
    std::vector<Subset> opens;
    opens.reserve(omega.opens().size());
    for (Subset u : omega.opens()) {
        Subset pre = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (subset_contains(u, values[i])) pre |= Subset{1} << i;
        opens.push_back(pre);
    }
    return Topology(x, std::move(opens));
}

std::vector<Topology> TopFibration::enumerate(const FiniteSet& x) const {
    const std::size_t n = x.size();
    if (n > kMaxEnumerate) {
        throw InvalidInput("Top fiber enumeration is limited to carriers of size " + std::to_string(kMaxEnumerate));
    }
    const Subset full = full_subset(n);
    // Candidate opens other than ∅ and X.
    std::vector<Subset> middle;
    for (Subset s = 1; s < full; ++s) middle.push_back(s);
    std::vector<Topology> out;
    const std::uint64_t count = std::uint64_t{1} << middle.size();
    for (std::uint64_t pick = 0; pick < count; ++pick) {
        std::vector<Subset> opens{0};
        if (full != 0) opens.push_back(full);
        for (std::size_t k = 0; k < middle.size(); ++k)
            if ((pick >> k) & 1U) opens.push_back(middle[k]);
        Topology t(x, std::move(opens));
        if (t.is_topology()) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const Topology& a, const Topology& b) {
        if (a.opens().size() != b.opens().size()) return a.opens().size() < b.opens().size();
        return a.opens() < b.opens();
    });
    return out;
}

Topology omega_sierpinski() { return Topology(FiniteSet::two(), {0b00, 0b10, 0b11}); }

}  // namespace codensity
