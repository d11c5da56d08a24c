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

#include "doctest.h"

#include "codensity/oracles.hpp"
#include "reference.hpp"

using namespace codensity;

namespace {

const FiniteSet ab({"a", "b"});

Pseudometric metric2(const Rational& dab) {
    Pseudometric d(ab, Rational(1));
    d.set(0, 1, dab);
    return d;
}

Relation chain2() { return Relation::from_labels(ab, {{"a", "a"}, {"a", "b"}, {"b", "b"}}); }

}  // namespace

TEST_CASE("Hausdorff closed form") {
    const auto h = oracle::hausdorff(metric2(1));
    // {} {a} {b} {a,b}
    CHECK(h(1, 2) == Rational(1));
    CHECK(h(1, 0) == Rational(1));
    CHECK(h(0, 0) == Rational(0));
    CHECK(h(1, 3) == Rational(1));
    for (std::size_t s = 0; s < 4; ++s) CHECK(h(s, s) == Rational(0));

    reference::Rng rng(17);
    const std::vector<Rational> grid{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
    for (int k = 0; k < 10; ++k) {
        const auto d = reference::random_pseudometric(rng, 3, grid);
        const auto hd = oracle::hausdorff(d);
        CHECK(hd.is_pseudometric());
        for (Subset s = 0; s < 8; ++s)
            for (Subset t = 0; t < 8; ++t) CHECK(hd(s, t) == reference::hausdorff_pair(d, s, t));
    }
}

TEST_CASE("Kantorovich by brute force") {
    const Subdistribution d2(2);
    const auto d = metric2(1);
    CHECK(oracle::kantorovich_grid(d, d2, d2.dirac(2, 0), d2.dirac(2, 1), Rational(1, 2)) == Rational(1));
    CHECK(oracle::kantorovich_grid(d, d2, d2.dirac(2, 0), d2.dirac(2, 0), Rational(1, 2)) == Rational(0));
    CHECK(oracle::kantorovich_grid(d, d2, d2.dirac(2, 0), Subdist{0, 0}, Rational(1, 2)) == Rational(1));
    // Half the mass moved across distance 1/2.
    CHECK(oracle::kantorovich_grid(metric2(Rational(1, 2)), d2, Subdist{1, 1}, d2.dirac(2, 1), Rational(1, 4)) ==
          Rational(1, 4));

    const auto km = oracle::kantorovich_grid_matrix(metric2(Rational(1, 2)), d2, Rational(1, 4));
    CHECK(km.is_pseudometric());
    reference::Rng rng(2);
    const auto d3 = reference::random_pseudometric(rng, 3, {Rational(0), Rational(1, 2), Rational(1)});
    const auto km3 = oracle::kantorovich_grid_matrix(d3, d2, Rational(1, 2));
    CHECK(km3.is_pseudometric());
    CHECK_THROWS_AS(oracle::kantorovich_grid(Pseudometric(FiniteSet::letters(12), Rational(1)), d2,
                                             Subdist(12, 0), Subdist(12, 0), Rational(1, 64)),
                    InvalidInput);
}

TEST_CASE("preorders on subsets") {
    const auto lower = oracle::lower_preorder(chain2());
    const auto upper = oracle::upper_preorder(chain2());
    const auto convex = oracle::convex_preorder(chain2());
    for (std::size_t t = 0; t < 4; ++t) CHECK(lower.contains(0, t));
    for (std::size_t s = 0; s < 4; ++s) CHECK(upper.contains(s, 0));
    // {a,b} against {b}.
    CHECK(lower.contains(3, 2));
    CHECK(upper.contains(3, 2));
    CHECK(convex.contains(3, 2));
    CHECK_FALSE(lower.contains(2, 1));
    CHECK(lower.is_preorder());
    CHECK(upper.is_preorder());
    CHECK(convex == Pre{}.meet({lower, upper}, lower.base()));
}

TEST_CASE("Kripke partition refinement") {
    const Coalgebra<Powerset> none(Powerset{}, FiniteSet({"x", "y", "z"}), {0, 0, 0});
    CHECK(oracle::kripke_bisimilarity(none).blocks().size() == 1);
    const Coalgebra<Powerset> two(Powerset{}, FiniteSet({"x", "y"}), {0b01, 0});
    CHECK(oracle::kripke_bisimilarity(two).blocks().size() == 2);
    const Coalgebra<Powerset> chain(Powerset{}, FiniteSet({"s0", "s1", "s2"}), {0b010, 0b100, 0});
    CHECK(oracle::kripke_bisimilarity(chain).blocks().size() == 3);
    // Two chains of the same length to deadlock are bisimilar pointwise.
    const Coalgebra<Powerset> twin(Powerset{}, FiniteSet::letters(4), {0b0010, 0, 0b1000, 0});
    CHECK(oracle::kripke_bisimilarity(twin) == Relation::from_blocks(twin.carrier(), {{0, 2}, {1, 3}}));
}

TEST_CASE("probabilistic partition refinement") {
    const Subdistribution d4(4);
    const Coalgebra<Subdistribution> same(d4, FiniteSet({"x", "y"}), {{2, 2}, {2, 2}});
    CHECK(oracle::prob_bisimilarity(same).blocks().size() == 1);
    const Subdistribution d6(6);
    const Coalgebra<Subdistribution> masses(d6, FiniteSet({"x", "y", "z"}), {{0, 0, 3}, {0, 0, 2}, {0, 0, 6}});
    const auto r = oracle::prob_bisimilarity(masses);
    CHECK_FALSE(r.contains(0, 1));
    const Coalgebra<Subdistribution> lump(d4, FiniteSet({"s", "t1", "t2", "u"}),
                                          {{0, 1, 1, 2}, {0, 0, 0, 3}, {0, 0, 0, 3}, {0, 0, 0, 4}});
    CHECK(oracle::prob_bisimilarity(lump) == Relation::from_blocks(lump.carrier(), {{0}, {1, 2}, {3}}));
    const Coalgebra<Subdistribution> three(d4, FiniteSet({"a", "b", "c"}), {{0, 0, 4}, {0, 0, 4}, {0, 0, 4}});
    CHECK(oracle::prob_bisimilarity(three).blocks().size() == 1);
    const Coalgebra<Subdistribution> two_classes(d4, FiniteSet({"a", "b", "c"}), {{0, 0, 2}, {0, 0, 2}, {0, 0, 4}});
    CHECK(oracle::prob_bisimilarity(two_classes).blocks().size() == 2);
}

TEST_CASE("Vietoris topologies") {
    const FiniteSet one({"a"});
    const auto ind = Topology::indiscrete(ab);
    // Only U = X contributes to the lower subbasis: the nonempty subsets.
    CHECK(oracle::vietoris_lower(ind).opens() == std::vector<Subset>{0, 0b1110, 0b1111});
    const auto low1 = oracle::vietoris_lower(Topology::discrete(one));
    CHECK(low1.opens() == std::vector<Subset>{0, 0b10, 0b11});
    const TopFibration top;
    for (const auto& t : top.enumerate(ab)) {
        const auto full = oracle::vietoris_full(t);
        CHECK(full.is_topology());
        CHECK(top.leq(full, oracle::vietoris_lower(t)));
        CHECK(top.leq(full, oracle::vietoris_upper(t)));
    }
    CHECK(oracle::saturate(ab, {0b01, 0b10}) == Topology::discrete(ab));
}
