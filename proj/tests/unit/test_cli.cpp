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
#include "commands.hpp"
#include "reference.hpp"

using namespace codensity;
using namespace codensity::cli;

namespace {

Options with_doc(const std::string& file) {
    Options o;
    o.doc = load_document(reference::corpus(file));
    return o;
}

const Json* result_named(const Json& out, const std::string& key, const std::string& name) {
    for (const auto& r : out.at("results"))
        if (r.at(key) == name) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("lift: lower preorder document") {
    Options o = with_doc("lower_preorder.json");
    o.names = {"chain2", "chain3"};
    const auto out = cmd_lift(o);
    CHECK(out.exit_code == kPass);
    const Pre pre;
    for (const auto& name : o.names) {
        const auto p = document_element(pre, *o.doc, name);
        const Json* r = result_named(out.json, "element", name);
        REQUIRE(r);
        CHECK(r->at("lifted") == element_to_json(oracle::lower_preorder(p)));
    }
}

TEST_CASE("lift: empty parameter list gives the fiber top") {
    Options o = with_doc("lower_preorder.json");
    o.doc->setup.parameters.clear();
    o.names = {"chain2"};
    const auto out = cmd_lift(o);
    const Pre pre;
    CHECK(out.json.at("results").at(0).at("lifted") ==
          element_to_json(pre.top(functor_object(Powerset{}, FiniteSet({"a", "b"})))));
}

TEST_CASE("lift: oversized carrier names the cap") {
    Options o;
    Json states = Json::array();
    for (int i = 0; i < 13; ++i) states.push_back("s" + std::to_string(i));
    Json pairs = Json::array();
    for (int i = 0; i < 13; ++i) pairs.push_back({"s" + std::to_string(i), "s" + std::to_string(i)});
    o.doc = parse_document(Json{{"codensity", 1},
                                {"fibration", "EqRel"},
                                {"functor", {{"name", "powerset"}}},
                                {"parameters", {"diamond"}},
                                {"elements", {{"big", {{"carrier", states}, {"pairs", pairs}}}}}});
    try {
        cmd_lift(o);
        FAIL("expected an error");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find(std::to_string(kMaxObjectSize)) != std::string::npos);
    }
}

TEST_CASE("bisim: Kripke self-loops, traces and single states") {
    Options o = with_doc("kripke.json");
    o.names = {"loops", "loop"};
    o.trace = true;
    const auto out = cmd_bisim(o);
    const Json* loops = result_named(out.json, "coalgebra", "loops");
    REQUIRE(loops);
    CHECK(loops->at("result") == element_to_json(EqRel{}.top(FiniteSet({"x", "y"}))));
    CHECK(loops->at("trace").size() == 2);
    const Json* loop = result_named(out.json, "coalgebra", "loop");
    REQUIRE(loop);
    CHECK(loop->at("converged_at") == 1);
    CHECK(out.text.find("nu_1") != std::string::npos);
}

TEST_CASE("bisim: language topology separates distinct languages") {
    Options o = with_doc("language_topology.json");
    const auto out = cmd_bisim(o);
    CHECK(out.exit_code == kPass);
    const Json* parity = result_named(out.json, "coalgebra", "parity");
    REQUIRE(parity);
    CHECK(parity->at("separated").size() == 1);
    CHECK(parity->at("indistinguishable").empty());
    const Json* redundant = result_named(out.json, "coalgebra", "redundant_parity");
    REQUIRE(redundant);
    CHECK(redundant->at("indistinguishable") == Json::parse(R"([["e0","e1"]])"));
}

TEST_CASE("bisim: iteration cap reports non-convergence") {
    Options o = with_doc("kripke.json");
    o.names = {"deadlock_chain"};
    o.max_iter = 1;
    CHECK(cmd_bisim(o).exit_code == kFail);
}

TEST_CASE("check: exit codes and witnesses") {
    Options o;
    o.instance = "ERel";
    o.omega = "two_leq";
    const auto c = cmd_check("cinjective", o);
    CHECK(c.exit_code == kFail);
    const auto& w = c.json.at("report").at("witness");
    CHECK(w.at(4) == Json{{"name", "Q"}, {"value", "{(x,z),(z,y)}"}});

    o.instance = "EqRel";
    o.omega = "two_eq";
    CHECK(cmd_check("cinjective", o).exit_code == kPass);

    Options b;
    CHECK(cmd_check("battery", b).exit_code == kPass);

    Options e;
    e.entry = "bisimulation_topology";
    CHECK(cmd_check("fibered", e).exit_code == kPass);

    CHECK(cmd_check("stability", with_doc("automaton.json")).exit_code == kPass);
    CHECK_THROWS_AS(cmd_check("stability", Options{}), InvalidInput);
    CHECK_THROWS_AS(cmd_check("nope", Options{}), InvalidInput);
}

TEST_CASE("compare: oracle agreement") {
    Options h = with_doc("hausdorff.json");
    h.epsilon = Rational(1, 4);
    h.bound = 2;
    const auto hc = cmd_compare("hausdorff", h);
    CHECK(hc.exit_code == kPass);
    CHECK(hc.json.at("tolerance") == "1/2");

    Options l;
    l.bound = 3;
    const auto lc = cmd_compare("lower_preorder", l);
    CHECK(lc.exit_code == kPass);
    CHECK(lc.json.at("tolerance") == "exact");
    CHECK(lc.json.at("cases") == 1 + 4 + 29);

    Options k = with_doc("kantorovich.json");
    k.names = {"unit_pair"};
    for (const Rational eps : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
        k.epsilon = eps;
        const auto kc = cmd_compare("kantorovich", k);
        CHECK(kc.exit_code == kPass);
    }

    CHECK(cmd_compare("kripke_bisimilarity", with_doc("kripke.json")).exit_code == kPass);
    CHECK(cmd_compare("markov_bisimilarity", with_doc("markov.json")).exit_code == kPass);
    Options v;
    v.bound = 2;
    for (const auto* name : {"vietoris_lower", "vietoris_upper", "vietoris_full"}) CHECK(cmd_compare(name, v).exit_code == kPass);
}

TEST_CASE("outputs are deterministic") {
    for (const auto* file : {"kripke.json", "markov.json", "automaton.json", "language_topology.json"}) {
        const auto a = cmd_bisim(with_doc(file));
        const auto b = cmd_bisim(with_doc(file));
        CHECK(canonical_text(a.json) == canonical_text(b.json));
        CHECK(a.text == b.text);
    }
    CHECK(canonical_text(cmd_catalog(Options{}).json) == canonical_text(cmd_catalog(Options{}).json));
}

TEST_CASE("catalog and format") {
    const auto cat = cmd_catalog(Options{});
    CHECK(cat.json.at("entries").size() == 15);
    const auto fmt = cmd_format(with_doc("kripke.json"));
    CHECK(fmt.text == serialize(*with_doc("kripke.json").doc));
}
