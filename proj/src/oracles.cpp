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

#include "codensity/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace codensity::oracle {

namespace {

FiniteSet powerset_carrier(const FiniteSet& x) { return functor_object(Powerset{}, x); }

std::size_t powerset_size(const FiniteSet& x) {
    Powerset pow;
    require_object_size(pow.name(), pow.object_size(x.size()));
    return std::size_t{1} << x.size();
}

// Renumbers signatures densely in order of first appearance.
template <class Signature>
std::vector<std::size_t> renumber(const std::vector<Signature>& sigs) {
    std::map<Signature, std::size_t> ids;
    std::vector<std::size_t> out;
    out.reserve(sigs.size());
    for (const auto& s : sigs) out.push_back(ids.emplace(s, ids.size()).first->second);
    return out;
}

Relation partition_relation(const FiniteSet& x, const std::vector<std::size_t>& cls) {
    Relation r(x);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) r.set(i, j, cls[i] == cls[j]);
    return r;
}

std::size_t count_classes(const std::vector<std::size_t>& cls) {
    return std::set<std::size_t>(cls.begin(), cls.end()).size();
}

}  // namespace

Pseudometric hausdorff(const Pseudometric& d) {
    const FiniteSet& x = d.base();
    const std::size_t m = powerset_size(x);
    const Rational top = d.top();
    // One-sided distance sup_{a∈S} inf_{b∈T} d(a,b).
    auto directed = [&](Subset s, Subset t) {
        Rational sup = 0;
        for (std::size_t a = 0; a < x.size(); ++a) {
            if (!subset_contains(s, a)) continue;
            Rational inf = top;
            for (std::size_t b = 0; b < x.size(); ++b)
                if (subset_contains(t, b) && d(a, b) < inf) inf = d(a, b);
            if (inf > sup) sup = inf;
        }
        return sup;
    };
    Pseudometric out(powerset_carrier(x), top);
    for (Subset s = 0; s < m; ++s)
        for (Subset t = s + 1; t < m; ++t) out.set(s, t, std::max(directed(s, t), directed(t, s)));
    return out;
}

Rational kantorovich_grid(const Pseudometric& d, const Subdistribution& dist, const Subdist& p, const Subdist& q,
                          const Rational& step) {
    const PMet grid_spec(d.top(), step);
    const auto grid = grid_spec.grid();
    const std::size_t n = d.size();
    count_functions(n, grid.size(), std::uint64_t{1} << 22);
    std::vector<std::size_t> f(n, 0);
    Rational best = 0;
    while (true) {
        bool nonexpansive = true;
        for (std::size_t i = 0; i < n && nonexpansive; ++i)
            for (std::size_t j = i + 1; j < n && nonexpansive; ++j)
                if (abs_diff(grid[f[i]], grid[f[j]]) > d(i, j)) nonexpansive = false;
        if (nonexpansive) {
            Rational ep = 0, eq = 0;
            for (std::size_t i = 0; i < n; ++i) {
                ep += grid[f[i]] * dist.weight(p, i);
                eq += grid[f[i]] * dist.weight(q, i);
            }
            best = std::max(best, abs_diff(ep, eq));
        }
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++f[k] < grid.size()) break;
            f[k] = 0;
            if (k == 0) return std::min(best, d.top());
        }
        if (n == 0) return std::min(best, d.top());
    }
}

Pseudometric kantorovich_grid_matrix(const Pseudometric& d, const Subdistribution& dist, const Rational& step) {
    const auto elems = dist.elements(d.base());
    Pseudometric out(functor_object(dist, d.base()), d.top());
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            out.set(i, j, kantorovich_grid(d, dist, elems[i], elems[j], step));
    return out;
}

Relation lower_preorder(const Relation& order) {
    const FiniteSet& x = order.base();
    const std::size_t m = powerset_size(x);
    Relation out(powerset_carrier(x));
    for (Subset s = 0; s < m; ++s) {
        for (Subset t = 0; t < m; ++t) {
            bool holds = true;
            for (std::size_t a = 0; a < x.size() && holds; ++a) {
                if (!subset_contains(s, a)) continue;
                bool found = false;
                for (std::size_t b = 0; b < x.size() && !found; ++b)
                    found = subset_contains(t, b) && order.contains(a, b);
                holds = found;
            }
            out.set(s, t, holds);
        }
    }
    return out;
}

Relation upper_preorder(const Relation& order) {
    const FiniteSet& x = order.base();
    const std::size_t m = powerset_size(x);
    Relation out(powerset_carrier(x));
    for (Subset s = 0; s < m; ++s) {
        for (Subset t = 0; t < m; ++t) {
            bool holds = true;
            for (std::size_t b = 0; b < x.size() && holds; ++b) {
                if (!subset_contains(t, b)) continue;
                bool found = false;
                for (std::size_t a = 0; a < x.size() && !found; ++a)
                    found = subset_contains(s, a) && order.contains(a, b);
                holds = found;
            }
            out.set(s, t, holds);
        }
    }
    return out;
}

Relation convex_preorder(const Relation& order) {
    Relation lo = lower_preorder(order);
    Relation up = upper_preorder(order);
    Relation out(lo.base());
    for (std::size_t i = 0; i < lo.size(); ++i)
        for (std::size_t j = 0; j < lo.size(); ++j) out.set(i, j, lo.contains(i, j) && up.contains(i, j));
    return out;
}

Relation kripke_bisimilarity(const Coalgebra<Powerset>& frame) {
    const std::size_t n = frame.carrier().size();
    std::vector<std::size_t> cls(n, 0);
    while (true) {
        std::vector<std::pair<std::size_t, std::set<std::size_t>>> sigs;
        for (std::size_t x = 0; x < n; ++x) {
            std::set<std::size_t> succ;
            for (std::size_t y = 0; y < n; ++y)
                if (subset_contains(frame(x), y)) succ.insert(cls[y]);
            sigs.emplace_back(cls[x], std::move(succ));
        }
        auto refined = renumber(sigs);
        const bool stable = count_classes(refined) == count_classes(cls);
        cls = std::move(refined);
        if (stable) break;
    }
    return partition_relation(frame.carrier(), cls);
}

Relation prob_bisimilarity(const Coalgebra<Subdistribution>& chain) {
    const std::size_t n = chain.carrier().size();
    std::vector<std::size_t> cls(n, 0);
    while (true) {
        const std::size_t k = count_classes(cls);
        std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> sigs;
        for (std::size_t x = 0; x < n; ++x) {
            std::vector<std::uint64_t> mass(k, 0);
            for (std::size_t y = 0; y < n; ++y) mass[cls[y]] += chain(x)[y];
            sigs.emplace_back(cls[x], std::move(mass));
        }
        auto refined = renumber(sigs);
        const bool stable = count_classes(refined) == k;
        cls = std::move(refined);
        if (stable) break;
    }
    return partition_relation(chain.carrier(), cls);
}

Topology saturate(const FiniteSet& base, std::vector<Subset> family) {
    std::set<Subset> opens(family.begin(), family.end());
    opens.insert(0);
    opens.insert(full_subset(base.size()));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Subset> cur(opens.begin(), opens.end());
        for (std::size_t i = 0; i < cur.size(); ++i) {
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                grew |= opens.insert(cur[i] | cur[j]).second;
                grew |= opens.insert(cur[i] & cur[j]).second;
            }
        }
    }
    return Topology(base, std::vector<Subset>(opens.begin(), opens.end()));
}

namespace {

std::vector<Subset> lower_subbasis(const Topology& t, std::size_t m) {
    std::vector<Subset> out;
    for (Subset u : t.opens()) {
        Subset hits = 0;
        for (Subset v = 0; v < m; ++v)
            if ((v & u) != 0) hits |= Subset{1} << v;
        out.push_back(hits);
    }
    return out;
}

std::vector<Subset> upper_subbasis(const Topology& t, std::size_t m) {
    std::vector<Subset> out;
    for (Subset u : t.opens()) {
        Subset inside = 0;
        for (Subset v = 0; v < m; ++v)
            if ((v & ~u) == 0) inside |= Subset{1} << v;
        out.push_back(inside);
    }
    return out;
}

std::size_t vietoris_size(const Topology& t) {
    if (t.base().size() > 6) throw InvalidInput("Vietoris oracle: carrier above 6 points");
    return std::size_t{1} << t.base().size();
}

}  // namespace

Topology vietoris_lower(const Topology& t) {
    const std::size_t m = vietoris_size(t);
    return saturate(powerset_carrier(t.base()), lower_subbasis(t, m));
}

Topology vietoris_upper(const Topology& t) {
    const std::size_t m = vietoris_size(t);
    return saturate(powerset_carrier(t.base()), upper_subbasis(t, m));
}

Topology vietoris_full(const Topology& t) {
    const std::size_t m = vietoris_size(t);
    auto family = lower_subbasis(t, m);
    auto up = upper_subbasis(t, m);
    family.insert(family.end(), up.begin(), up.end());
    return saturate(powerset_carrier(t.base()), std::move(family));
}

}  // namespace codensity::oracle
