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

#include "codensity/rational.hpp"
#include "codensity/set.hpp"

using namespace codensity;

TEST_CASE("finite sets are sorted and compared by labels") {
    const FiniteSet x({"b", "a", "c"});
    CHECK(x.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(x == FiniteSet({"c", "b", "a"}));
    CHECK(x.index_of("c") == 2);
    CHECK_FALSE(x.find("z"));
    CHECK_THROWS_AS(x.index_of("z"), InvalidInput);
    CHECK_THROWS_AS(FiniteSet({"a", "a"}), InvalidInput);
    CHECK(FiniteSet().empty());
    CHECK(FiniteSet::two().labels() == std::vector<std::string>{"bot", "top"});
}

TEST_CASE("compose") {
    const FiniteSet a({"a"}), b({"b"}), c({"c"});
    const auto f = SetFunction::from_labels(a, b, {{"a", "b"}});
    const auto g = SetFunction::from_labels(b, c, {{"b", "c"}});
    const auto gf = compose(g, f);
    CHECK(gf.dom() == a);
    CHECK(gf.cod() == c);
    CHECK(gf(0) == 0);
    CHECK(compose(SetFunction::identity(b), f) == f);
    CHECK(compose(f, SetFunction::identity(a)) == f);
    CHECK_THROWS_AS(compose(f, g), InvalidInput);
}

TEST_CASE("compose matches pointwise evaluation and is associative on 3-element sets") {
    const FiniteSet x = FiniteSet::letters(3);
    const auto all = enumerate_functions(x, x);
    REQUIRE(all.size() == 27);
    for (const auto& f : all) {
        for (const auto& g : all) {
            const auto gf = compose(g, f);
            for (std::size_t i = 0; i < 3; ++i) CHECK(gf(i) == g(f(i)));
        }
    }
    // Associativity on a stride sample keeps the triple loop small.
    for (std::size_t i = 0; i < all.size(); i += 2)
        for (std::size_t j = 0; j < all.size(); j += 3)
            for (std::size_t k = 0; k < all.size(); k += 5)
                CHECK(compose(all[i], compose(all[j], all[k])) == compose(compose(all[i], all[j]), all[k]));
}

TEST_CASE("compose is unital and associative exhaustively over sizes up to 2") {
    for (std::size_t n = 0; n <= 2; ++n) {
        const FiniteSet x = FiniteSet::letters(n);
        const auto all = enumerate_functions(x, x);
        for (const auto& f : all) {
            CHECK(compose(SetFunction::identity(x), f) == f);
            for (const auto& g : all)
                for (const auto& h : all) CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
        }
    }
}

TEST_CASE("enumerate_functions counts") {
    CHECK(enumerate_functions(FiniteSet({"a"}), FiniteSet({"0", "1"})).size() == 2);
    CHECK(enumerate_functions(FiniteSet({"a", "b"}), FiniteSet({"0", "1", "2"})).size() == 9);
    CHECK(enumerate_functions(FiniteSet(), FiniteSet({"0"})).size() == 1);
    CHECK(enumerate_functions(FiniteSet(), FiniteSet()).size() == 1);
    CHECK(enumerate_functions(FiniteSet({"a"}), FiniteSet()).empty());
    for (std::size_t m = 0; m <= 3; ++m)
        for (std::size_t n = 0; n <= 3; ++n)
            CHECK(enumerate_functions(FiniteSet::letters(m), FiniteSet::letters(n)).size() == count_functions(m, n));
    CHECK(count_functions(0, 0) == 1);
    CHECK_THROWS_AS(count_functions(40, 4, 1000), InvalidInput);
}

TEST_CASE("function enumeration is lexicographic with the first element slowest") {
    FunctionEnumerator e(FiniteSet::letters(2), FiniteSet::letters(2));
    std::vector<std::vector<std::size_t>> tables;
    while (e.next()) tables.push_back(e.current().table());
    CHECK(tables == std::vector<std::vector<std::size_t>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    e.reset();
    REQUIRE(e.next());
    CHECK(e.current().table() == std::vector<std::size_t>{0, 0});
}

TEST_CASE("set function predicates and rendering") {
    const FiniteSet x({"a", "b"}), y({"x", "y", "z"});
    const auto f = SetFunction::from_labels(x, y, {{"a", "x"}, {"b", "y"}});
    CHECK(f.injective());
    CHECK_FALSE(f.surjective());
    CHECK(f.to_string() == "{a->x, b->y}");
    CHECK_FALSE(SetFunction::constant(x, y, 0).injective());
    CHECK_THROWS_AS(SetFunction::from_labels(x, y, {{"a", "x"}}), InvalidInput);
    CHECK_THROWS_AS(SetFunction(x, y, {0, 3}), InvalidInput);
}

TEST_CASE("rational text") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-2") == Rational(-2));
    CHECK(format_rational(Rational(4, 2)) == "2");
    CHECK(format_rational(Rational(3, 4)) == "3/4");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("0.5"), InvalidInput);
    CHECK_THROWS_AS(parse_rational(""), InvalidInput);
    CHECK(abs_diff(Rational(1, 4), Rational(3, 4)) == Rational(1, 2));
}
