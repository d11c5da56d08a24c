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

#include "codensity/catalog.hpp"

#include <algorithm>

namespace codensity {

const std::vector<std::string>& omega_names() {
    static const std::vector<std::string> names{"two_leq", "two_eq", "diamond_lattice", "antichain2", "sierpinski",
                                                "interval"};
    return names;
}

std::string default_omega(const std::string& fibration) {
    if (fibration == "ERel" || fibration == "Pre") return "two_leq";
    if (fibration == "EqRel") return "two_eq";
    if (fibration == "Top") return "sierpinski";
    if (fibration == "PMet") return "interval";
    throw InvalidInput("/fibration: unknown fibration '" + fibration + "'");
}

std::string BatteryRow::to_text() const {
    std::string s = entry + ": ";
    if (!asserted) s += "not asserted (an observation object is not c-injective), ";
    s += pass ? "pass" : "FAIL";
    s += "\n";
    for (const auto& r : cinjective) s += "  " + r.to_text();
    s += "  " + fibered.to_text();
    return s;
}

namespace {

ParameterSpec param(std::string tau, std::string omega = "") {
    ParameterSpec p;
    p.omega = std::move(omega);
    p.tau = std::move(tau);
    return p;
}

CatalogEntry entry(std::string name, std::string characterizes, std::string fibration, FunctorSpec functor,
                   std::vector<ParameterSpec> params, std::size_t max_bound = 3) {
    CatalogEntry e;
    e.name = std::move(name);
    e.characterizes = std::move(characterizes);
    e.setup.fibration = std::move(fibration);
    e.setup.functor = std::move(functor);
    e.setup.parameters = std::move(params);
    e.max_bound = max_bound;
    return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        const FunctorSpec pow{"powerset", {}, 0};
        const FunctorSpec dist{"subdist", {}, 2};
        std::vector<CatalogEntry> out{
            entry("hausdorff", "Hausdorff pseudometric on subsets", "PMet", pow, {param("inf")}),
            entry("kantorovich", "Kantorovich pseudometric on subdistributions", "PMet", dist, {param("e")}),
            entry("lower_preorder", "lower (simulation) preorder on subsets", "Pre", pow, {param("diamond")}),
            entry("upper_preorder", "upper preorder on subsets", "Pre", pow, {param("box")}),
            entry("convex_preorder", "convex preorder on subsets", "Pre", pow, {param("diamond"), param("box")}),
            entry("kripke_bisimilarity", "bisimilarity of Kripke frames", "EqRel", pow, {param("diamond")}),
            entry("markov_bisimilarity", "probabilistic bisimilarity of Markov chains", "EqRel", dist,
                  {param("thr")}),
            entry("lower_vietoris", "lower Vietoris topology", "Top", pow, {param("diamond")}, 2),
            entry("upper_vietoris", "upper Vietoris topology", "Top", pow, {param("box")}, 2),
            entry("vietoris", "Vietoris topology", "Top", pow, {param("diamond"), param("box")}, 2),
            entry("bisimulation_topology", "bisimulation topology of deterministic automata", "Top",
                  {"machine", {"a"}, 0}, {param("acc"), param("next")}, 2),
            entry("automaton_bisimilarity", "language equivalence of deterministic automata", "EqRel",
                  {"machine", {"a", "b"}, 0}, {param("acc"), param("next")}),
            entry("detlts_bisimilarity", "bisimilarity of deterministic labelled transition systems", "EqRel",
                  {"detlts", {"a", "b"}, 0}, {param("guard")}),
            entry("identity_preorder", "the identity lifting", "Pre", {"identity", {}, 0}, {param("id")}),
            entry("erel_lower", "lower lifting of endorelations (observation object not c-injective)", "ERel",
                  pow, {param("diamond")}),
        };
        return out;
    }();
    return entries;
}

std::optional<CatalogEntry> find_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    return std::nullopt;
}

std::vector<BatteryRow> run_battery(const std::vector<CatalogEntry>& entries, std::size_t n) {
    std::vector<BatteryRow> rows;
    rows.reserve(entries.size());
    for (const auto& e : entries) {
        const std::size_t bound = std::min(n, e.max_bound);
        rows.push_back(visit_setup(e.setup, [&](const auto& fib, const auto& func, const auto& family) {
            return theorem_row(e.name, fib, func, family, bound, default_strategy(fib));
        }));
    }
    return rows;
}

}  // namespace codensity
