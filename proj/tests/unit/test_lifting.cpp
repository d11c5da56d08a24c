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

#include <algorithm>

#include "codensity/algebras.hpp"
#include "codensity/lifting.hpp"
#include "codensity/oracles.hpp"
#include "codensity/relation.hpp"
#include "codensity/setup.hpp"
#include "reference.hpp"

using namespace codensity;

namespace {

const FiniteSet ab({"a", "b"});

Relation chain2() { return Relation::from_labels(ab, {{"a", "a"}, {"a", "b"}, {"b", "b"}}); }

LiftingParameter<Pre, Powerset> pre_diamond() { return {"dia", omega_pre(), algebra::diamond()}; }
LiftingParameter<Pre, Powerset> pre_box() { return {"box", omega_pre(), algebra::box()}; }

Pseudometric metric2(const Rational& dab) {
    Pseudometric d(ab, Rational(1));
    d.set(0, 1, dab);
    return d;
}

}  // namespace

TEST_CASE("hom-set examples") {
    const Pre pre;
    const auto homs = hom_set(pre, chain2(), omega_pre(), TestStrategy::exhaustive);
    REQUIRE(homs.size() == 3);
    for (const auto& u : homs) CHECK_FALSE(u.table() == std::vector<std::size_t>{1, 0});

    const EqRel eqrel;
    CHECK(hom_set(eqrel, Relation::identity(ab), omega_eqrel(), TestStrategy::exhaustive).size() == 4);

    const PMet pmet(Rational(1), Rational(1, 2));
    CHECK(hom_set(pmet, metric2(1), pmet.omega(), TestStrategy::grid).size() == 9);
    // With d(a,b) = 1/2 the pair (0, 1) is excluded both ways.
    CHECK(hom_set(pmet, metric2(Rational(1, 2)), pmet.omega(), TestStrategy::grid).size() == 7);

    CHECK_THROWS_AS(hom_set(pre, chain2(), omega_pre(), TestStrategy::grid), InvalidInput);
    CHECK_THROWS_AS(hom_set(pmet, metric2(1), pmet.omega(), TestStrategy::exhaustive), InvalidInput);
}

TEST_CASE("lower preorder lift") {
    const Pre pre;
    const auto lifted = codensity_lift(pre, Powerset{}, pre_diamond(), chain2(), TestStrategy::exhaustive);
    // FX order: {}, {a}, {b}, {a,b}.
    CHECK(lifted.contains(1, 2));
    CHECK_FALSE(lifted.contains(2, 1));
    CHECK(lifted == oracle::lower_preorder(chain2()));
}

TEST_CASE("observing through the fiber top gives the fiber top") {
    const Pre pre;
    const LiftingParameter<Pre, Powerset> param{"top", pre.top(FiniteSet::two()), algebra::diamond()};
    for (const auto& p : pre.enumerate(FiniteSet::letters(2)))
        CHECK(codensity_lift(pre, Powerset{}, param, p, TestStrategy::exhaustive) ==
              pre.top(functor_object(Powerset{}, p.base())));
}

TEST_CASE("Hausdorff lift at eps = 1/4") {
    const PMet pmet(Rational(1), Rational(1, 4));
    const LiftingParameter<PMet, Powerset> param{"inf", pmet.omega(), algebra::infimum(pmet.grid(), Rational(1))};
    const auto d = metric2(1);
    const auto lifted = codensity_lift(pmet, Powerset{}, param, d, TestStrategy::grid);
    const Rational expected = reference::hausdorff_pair(d, 0b01, 0b11);
    CHECK(expected == Rational(1));
    CHECK(abs_diff(lifted(1, 3), expected) <= Rational(1, 2));
    CHECK(lifted(1, 3) == Rational(1));
}

TEST_CASE("multi-parameter lifts") {
    const Pre pre;
    const Powerset pow;
    const auto x = FiniteSet::letters(3);
    for (const auto& p : pre.enumerate(x)) {
        const auto lower = codensity_lift(pre, pow, pre_diamond(), p, TestStrategy::exhaustive);
        const auto upper = codensity_lift(pre, pow, pre_box(), p, TestStrategy::exhaustive);
        const ParameterFamily<Pre, Powerset> both{pre_diamond(), pre_box()};
        const auto convex = codensity_lift(pre, pow, both, p, TestStrategy::exhaustive);
        CHECK(convex == pre.meet({lower, upper}, functor_object(pow, x)));
        CHECK(convex == oracle::convex_preorder(p));
        const ParameterFamily<Pre, Powerset> single{pre_diamond()};
        CHECK(codensity_lift(pre, pow, single, p, TestStrategy::exhaustive) == lower);
        CHECK(codensity_lift(pre, pow, ParameterFamily<Pre, Powerset>{}, p, TestStrategy::exhaustive) ==
              pre.top(functor_object(pow, x)));
    }
}

TEST_CASE("bisimulation-topology lift is generated by the subbasic preimages") {
    const TopFibration top;
    const Machine m(FiniteSet({"a"}));
    Setup s;
    s.fibration = "Top";
    s.functor = {"machine", {"a"}, 0};
    s.parameters = {ParameterSpec{"", {}, "acc", {}}, ParameterSpec{"", {}, "next", {}}};
    const auto family = resolve_family(top, m, s.parameters);
    REQUIRE(family.size() == 2);
    const FiniteSet x = FiniteSet::letters(2);
    const FiniteSet fx = functor_object(m, x);
    const auto elems = m.elements(x);
    for (const auto& p : top.enumerate(x)) {
        std::vector<Subset> subbasis;
        for (const auto& param : family) {
            for (const auto& u : hom_set(top, p, param.omega, TestStrategy::exhaustive)) {
                Subset pre = 0;
                for (std::size_t i = 0; i < elems.size(); ++i)
                    if (param.tau(m.map(u, elems[i])) == algebra::kTop) pre |= Subset{1} << i;
                subbasis.push_back(pre);
            }
        }
        CHECK(codensity_lift(top, m, family, p, TestStrategy::exhaustive) == oracle::saturate(fx, subbasis));
    }
}

TEST_CASE("lifted arrows") {
    const Pre pre;
    const Powerset pow;
    const ParameterFamily<Pre, Powerset> family{pre_diamond()};
    for (const auto& p : pre.enumerate(ab))
        CHECK(lift_arrow(pre, pow, family, SetFunction::identity(ab), p, p, TestStrategy::exhaustive));
    std::size_t arrows = 0;
    for (std::size_t xs = 0; xs <= 3; ++xs)
        for (std::size_t ys = 0; ys <= 3; ++ys) {
            const auto px = pre.enumerate(FiniteSet::letters(xs));
            const auto py = pre.enumerate(FiniteSet::letters(ys));
            for (const auto& f : enumerate_functions(FiniteSet::letters(xs), FiniteSet::letters(ys)))
                for (const auto& p : px)
                    for (const auto& q : py) {
                        if (!arrow_exists(pre, f, p, q)) continue;
                        ++arrows;
                        CHECK(lift_arrow(pre, pow, family, f, p, q, TestStrategy::exhaustive));
                    }
        }
    CHECK(arrows > 0);
    CHECK_THROWS_AS(lift_arrow(pre, pow, family, SetFunction::identity(ab), pre.top(ab), Relation::identity(ab),
                               TestStrategy::exhaustive),
                    InvalidInput);
}

TEST_CASE("grid lifts are functorial on PMet") {
    const PMet pmet(Rational(1), Rational(1, 2));
    const ParameterFamily<PMet, Powerset> family{{"inf", pmet.omega(), algebra::infimum(pmet.grid(), Rational(1))}};
    const auto fib2 = pmet.enumerate(ab);
    for (const auto& f : enumerate_functions(ab, ab))
        for (const auto& p : fib2)
            for (const auto& q : fib2)
                if (arrow_exists(pmet, f, p, q)) CHECK(lift_arrow(pmet, Powerset{}, family, f, p, q, TestStrategy::grid));
}

TEST_CASE("fewer tests give a higher lift") {
    const Pre pre;
    const Powerset pow;
    const auto x = FiniteSet::letters(3);
    for (const auto& p : pre.enumerate(x)) {
        const auto all = hom_set(pre, p, omega_pre(), TestStrategy::exhaustive);
        std::vector<SetFunction> half;
        for (std::size_t i = 0; i < all.size(); i += 2) half.push_back(all[i]);
        const auto full_lift = lift_over_tests(pre, pow, pre_diamond(), x, all);
        const auto half_lift = lift_over_tests(pre, pow, pre_diamond(), x, half);
        CHECK(pre.leq(full_lift, half_lift));
    }
}

TEST_CASE("meets do not depend on the order of the family") {
    reference::Rng rng(11);
    const Pre pre;
    const auto x = FiniteSet::letters(3);
    const auto fx = functor_object(Powerset{}, x);
    const auto elems = Powerset{}.elements(x);
    for (const auto& p : pre.enumerate(x)) {
        auto tests = hom_set(pre, p, omega_pre(), TestStrategy::exhaustive);
        const auto ordered = lift_over_tests(pre, Powerset{}, pre_diamond(), x, tests);
        std::shuffle(tests.begin(), tests.end(), rng);
        CHECK(lift_over_tests(pre, Powerset{}, pre_diamond(), x, tests) == ordered);
    }
    const TopFibration top;
    auto fiber = top.enumerate(x);
    const auto m = top.meet(fiber, x);
    std::shuffle(fiber.begin(), fiber.end(), rng);
    CHECK(top.meet(fiber, x) == m);
}

TEST_CASE("threshold family: a denser sample of r gives the same lift") {
    const EqRel eqrel;
    for (std::uint32_t den = 1; den <= 3; ++den) {
        const Subdistribution dist(den);
        ParameterFamily<EqRel, Subdistribution> coarse, dense;
        for (std::uint32_t k = 0; k <= den; ++k)
            coarse.push_back({"thr", omega_eqrel(), algebra::threshold(Rational(k, den), den)});
        for (std::uint32_t k = 0; k <= 2 * den; ++k)
            dense.push_back({"thr", omega_eqrel(), algebra::threshold(Rational(k, 2 * den), den)});
        for (const auto& p : eqrel.enumerate(FiniteSet::letters(2)))
            CHECK(codensity_lift(eqrel, dist, coarse, p, TestStrategy::exhaustive) ==
                  codensity_lift(eqrel, dist, dense, p, TestStrategy::exhaustive));
    }
}

TEST_CASE("Kantorovich lift on Dirac pairs") {
    for (const Rational eps : {Rational(1, 2), Rational(1, 4)}) {
        const PMet pmet(Rational(1), eps);
        const Subdistribution dist(2);
        const ParameterFamily<PMet, Subdistribution> family{
            {"e", pmet.omega(), algebra::expectation(pmet.grid(), 2)}};
        const auto lifted = codensity_lift(pmet, dist, family, metric2(1), TestStrategy::grid);
        const auto elems = dist.elements(ab);
        auto index = [&](const Subdist& p) {
            return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), p) - elems.begin());
        };
        CHECK(lifted(index(dist.dirac(2, 0)), index(dist.dirac(2, 1))) == Rational(1));
        CHECK(lifted(index(dist.dirac(2, 0)), index(Subdist{0, 0})) == Rational(1));
        CHECK(lifted(index(dist.dirac(2, 0)), index(dist.dirac(2, 0))) == Rational(0));
    }
}

TEST_CASE("lifting preconditions") {
    const Pre pre;
    CHECK_THROWS_AS(codensity_lift(pre, Powerset{}, pre_diamond(), Relation::from_labels(ab, {{"a", "b"}}),
                                   TestStrategy::exhaustive),
                    InvalidInput);
    CHECK_THROWS_AS(codensity_lift(pre, Powerset{}, pre_diamond(), Relation::identity(FiniteSet::letters(13)),
                                   TestStrategy::exhaustive),
                    InvalidInput);
}
