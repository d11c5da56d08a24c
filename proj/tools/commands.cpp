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

#include "commands.hpp"

#include <algorithm>
#include <map>

#include "codensity/catalog.hpp"
#include "codensity/checkers.hpp"
#include "codensity/oracles.hpp"

namespace codensity::cli {

namespace {

const Document& require_doc(const Options& o, const std::string& command) {
    if (!o.doc) throw InvalidInput(command + ": an --input document is required");
    return *o.doc;
}

Json report_json(const CheckReport& r) {
    Json witness = Json::array();
    for (const auto& [k, v] : r.witness) witness.push_back({{"name", k}, {"value", v}});
    Json out{{"check", r.check},          {"subject", r.subject}, {"pass", r.pass},
             {"advisory", r.advisory},    {"search_bound", r.search_bound}};
    if (!r.witness.empty()) out["witness"] = witness;
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

Json battery_json(const BatteryRow& row) {
    Json cinj = Json::array();
    for (const auto& r : row.cinjective) cinj.push_back(report_json(r));
    return {{"entry", row.entry},
            {"asserted", row.asserted},
            {"pass", row.pass},
            {"cinjective", cinj},
            {"fibered", report_json(row.fibered)}};
}

/// The setup a command runs under: a catalog entry, ad hoc flags, or the document.
Setup effective_setup(const Options& o) {
    Setup s;
    if (!o.entry.empty()) {
        auto e = find_entry(o.entry);
        if (!e) throw InvalidInput("--entry: no catalog entry named '" + o.entry + "'");
        s = e->setup;
    } else if (!o.instance.empty()) {
        s.fibration = o.instance;
        s.functor.name = o.functor.empty() ? "powerset" : o.functor;
        if (s.functor.name == "machine" || s.functor.name == "detlts") s.functor.alphabet = {"a"};
        if (s.functor.name == "subdist") s.functor.denominator = 2;
        for (const auto& p : o.params) {
            ParameterSpec spec;
            spec.omega = o.omega;
            spec.tau = p;
            s.parameters.push_back(spec);
        }
    } else if (o.doc) {
        s = o.doc->setup;
    } else {
        throw InvalidInput("no setup given: pass --input, --entry or --instance");
    }
    if (o.epsilon) s.metric.epsilon = *o.epsilon;
    if (!o.alphabet.empty()) s.functor.alphabet = FiniteSet(o.alphabet).labels();
    if (o.denominator != 0) s.functor.denominator = o.denominator;
    return s;
}

std::vector<std::string> selected(const Options& o, const std::vector<std::string>& all) {
    return o.names.empty() ? all : o.names;
}

template <class Map>
std::vector<std::string> keys(const Map& m) {
    std::vector<std::string> out;
    for (const auto& [k, v] : m) out.push_back(k);
    return out;
}

template <Fibration Fib, SetEndofunctor F>
Json describe_family(const ParameterFamily<Fib, F>& family) {
    Json out = Json::array();
    for (const auto& p : family) out.push_back(p.name);
    return out;
}

Rational max_difference(const Pseudometric& a, const Pseudometric& b) {
    Rational m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, abs_diff(a(i, j), b(i, j)));
    return m;
}

}  // namespace

Outcome cmd_lift(const Options& o) {
    const Document& doc = require_doc(o, "lift");
    Setup s = doc.setup;
    if (o.epsilon) s.metric.epsilon = *o.epsilon;
    return visit_setup(s, [&](const auto& fib, const auto& func, const auto& family) {
        Outcome out;
        Json results = Json::array();
        for (const auto& name : selected(o, keys(doc.elements))) {
            const auto p = document_element(fib, doc, name);
            const auto lifted = codensity_lift(fib, func, family, p, default_strategy(fib));
            results.push_back({{"element", name}, {"lifted", element_to_json(lifted)}});
            out.text += name + " -> " + fib.to_string(lifted) + "\n";
        }
        out.json = {{"command", "lift"},
                    {"fibration", fib.name()},
                    {"functor", func.name()},
                    {"parameters", describe_family(family)},
                    {"results", results}};
        return out;
    });
}

Outcome cmd_bisim(const Options& o) {
    const Document& doc = require_doc(o, "bisim");
    Setup s = doc.setup;
    if (o.epsilon) s.metric.epsilon = *o.epsilon;
    return visit_setup(s, [&](const auto& fib, const auto& func, const auto& family) {
        using Fib = std::decay_t<decltype(fib)>;
        Outcome out;
        Json results = Json::array();
        for (const auto& name : selected(o, keys(doc.coalgebras))) {
            const auto coalg = document_coalgebra(func, doc, name);
            Json r{{"coalgebra", name}};
            try {
                const auto trace = gfp(fib, family, coalg, default_strategy(fib), o.max_iter);
                const auto& nu = trace.result();
                r["result"] = element_to_json(nu);
                r["converged_at"] = trace.converged_at;
                out.text += name + ": " + fib.to_string(nu) + "  (stable at iterate " +
                            std::to_string(trace.converged_at) + ")\n";
                if (o.trace) {
                    Json iterates = Json::array();
                    for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
                        iterates.push_back(element_to_json(trace.iterates[k]));
                        out.text += "  nu_" + std::to_string(k) + " = " + fib.to_string(trace.iterates[k]) + "\n";
                    }
                    r["trace"] = iterates;
                }
                if constexpr (std::is_same_v<Fib, EqRel>) {
                    out.text += "  classes: " + nu.blocks_to_string() + "\n";
                }
                if constexpr (std::is_same_v<Fib, TopFibration>) {
                    const FiniteSet& x = coalg.carrier();
                    Json separated = Json::array();
                    Json together = Json::array();
                    for (std::size_t i = 0; i < x.size(); ++i) {
                        for (std::size_t j = i + 1; j < x.size(); ++j) {
                            if (auto u = nu.separating_open(i, j)) {
                                separated.push_back({{"states", {x.label(i), x.label(j)}},
                                                     {"open", subset_to_string(x, *u)}});
                                out.text += "  " + x.label(i) + " / " + x.label(j) + " separated by " +
                                            subset_to_string(x, *u) + "\n";
                            } else {
                                together.push_back({x.label(i), x.label(j)});
                                out.text += "  " + x.label(i) + " / " + x.label(j) + " indistinguishable\n";
                            }
                        }
                    }
                    r["separated"] = separated;
                    r["indistinguishable"] = together;
                }
            } catch (const NonConvergence& e) {
                r["error"] = e.what();
                out.text += name + ": " + e.what() + "\n";
                out.exit_code = kFail;
            }
            results.push_back(r);
        }
        out.json = {{"command", "bisim"},
                    {"fibration", fib.name()},
                    {"functor", func.name()},
                    {"parameters", describe_family(family)},
                    {"results", results}};
        return out;
    });
}

Outcome cmd_check(const std::string& which, const Options& o) {
    Outcome out;
    if (which == "cinjective") {
        Setup s = effective_setup(o);
        const std::size_t n = o.bound.value_or(3);
        return visit_fibration(s, [&](const auto& fib) {
            ParameterSpec spec;
            spec.omega = o.omega;
            if (o.omega.empty() && !s.parameters.empty()) spec = s.parameters.front();
            const auto omega = resolve_omega(fib, spec, "--omega");
            const std::string name =
                spec.omega_inline.is_null() ? (spec.omega.empty() ? default_omega(fib.name()) : spec.omega) : "inline";
            const auto result = check_cinjective(fib, omega, n, name);
            Outcome r;
            r.json = {{"command", "check"}, {"report", report_json(result.report)}};
            r.text = result.report.to_text();
            r.exit_code = result.report.pass ? kPass : kFail;
            return r;
        });
    }
    if (which == "fibered") {
        Setup s = effective_setup(o);
        std::size_t n = o.bound.value_or(3);
        if (!o.bound && !o.entry.empty()) n = find_entry(o.entry)->max_bound;
        return visit_setup(s, [&](const auto& fib, const auto& func, const auto& family) {
            const auto report = check_fibered(fib, func, family, n, default_strategy(fib));
            Outcome r;
            r.json = {{"command", "check"}, {"parameters", describe_family(family)}, {"report", report_json(report)}};
            r.text = report.to_text();
            r.exit_code = report.pass ? kPass : kFail;
            return r;
        });
    }
    if (which == "stability") {
        const Document& doc = require_doc(o, "check stability");
        Setup s = doc.setup;
        if (o.epsilon) s.metric.epsilon = *o.epsilon;
        return visit_setup(s, [&](const auto& fib, const auto& func, const auto& family) {
            Outcome r;
            Json reports = Json::array();
            for (const auto& name : selected(o, keys(doc.morphisms))) {
                auto report = check_stability(fib, family, document_morphism(func, doc, name), default_strategy(fib));
                report.subject = name;
                reports.push_back(report_json(report));
                r.text += report.to_text();
                if (!report.pass) r.exit_code = kFail;
            }
            r.json = {{"command", "check"}, {"parameters", describe_family(family)}, {"reports", reports}};
            return r;
        });
    }
    if (which == "battery") {
        std::vector<CatalogEntry> entries;
        if (o.names.empty()) {
            entries = catalog();
        } else {
            for (const auto& name : o.names) {
                auto e = find_entry(name);
                if (!e) throw InvalidInput("battery: no catalog entry named '" + name + "'");
                entries.push_back(*e);
            }
        }
        const auto rows = run_battery(entries, o.bound.value_or(3));
        Json js = Json::array();
        for (const auto& row : rows) {
            js.push_back(battery_json(row));
            out.text += row.to_text();
            if (!row.pass) out.exit_code = kFail;
        }
        out.json = {{"command", "check"}, {"battery", js}};
        return out;
    }
    throw InvalidInput("check: unknown check '" + which + "' (expected cinjective, fibered, stability or battery)");
}

const std::vector<std::string>& oracle_names() {
    static const std::vector<std::string> names{
        "hausdorff",           "kantorovich",         "lower_preorder", "upper_preorder",
        "convex_preorder",     "kripke_bisimilarity", "markov_bisimilarity",
        "vietoris_lower",      "vietoris_upper",      "vietoris_full"};
    return names;
}

namespace {

std::string oracle_entry(const std::string& oracle) {
    static const std::map<std::string, std::string> entries{
        {"hausdorff", "hausdorff"},
        {"kantorovich", "kantorovich"},
        {"lower_preorder", "lower_preorder"},
        {"upper_preorder", "upper_preorder"},
        {"convex_preorder", "convex_preorder"},
        {"kripke_bisimilarity", "kripke_bisimilarity"},
        {"markov_bisimilarity", "markov_bisimilarity"},
        {"vietoris_lower", "lower_vietoris"},
        {"vietoris_upper", "upper_vietoris"},
        {"vietoris_full", "vietoris"}};
    auto it = entries.find(oracle);
    if (it == entries.end()) throw InvalidInput("compare: unknown oracle '" + oracle + "'");
    return it->second;
}

/// Named inputs: document elements, or every fiber element on 1..bound points.
template <Fibration Fib>
std::vector<std::pair<std::string, typename Fib::Element>> compare_inputs(const Fib& fib, const Options& o) {
    std::vector<std::pair<std::string, typename Fib::Element>> out;
    if (o.bound) {
        require_check_bound("compare", *o.bound);
        for (std::size_t n = 1; n <= *o.bound; ++n)
            for (auto& p : fib.enumerate(FiniteSet::letters(n))) out.emplace_back(fib.to_string(p), std::move(p));
        return out;
    }
    const Document& doc = require_doc(o, "compare");
    for (const auto& name : selected(o, keys(doc.elements)))
        out.emplace_back(name, document_element(fib, doc, name));
    return out;
}

struct Tally {
    std::size_t cases = 0;
    Json mismatches = Json::array();
    Rational max_diff = 0;
};

Outcome finish(const std::string& oracle, const std::string& method, Tally t, std::optional<Rational> tolerance) {
    Outcome out;
    const bool agree = t.mismatches.empty();
    out.exit_code = agree ? kPass : kFail;
    out.json = {{"command", "compare"},
                {"oracle", oracle},
                {"method", method},
                {"cases", t.cases},
                {"agree", agree},
                {"tolerance", tolerance ? format_rational(*tolerance) : "exact"}};
    if (tolerance) out.json["max_difference"] = format_rational(t.max_diff);
    if (!agree) out.json["mismatches"] = t.mismatches;
    out.text = oracle + " (" + method + "): " + std::to_string(t.cases) + " cases, " +
               (agree ? "agree" : std::to_string(t.mismatches.size()) + " mismatches");
    if (tolerance)
        out.text += ", max difference " + format_rational(t.max_diff) + " (tolerance " + format_rational(*tolerance) + ")";
    out.text += "\n";
    for (const auto& m : t.mismatches)
        out.text += "  " + m.at("input").get<std::string>() + ": engine " + m.at("engine").get<std::string>() +
                    " vs oracle " + m.at("oracle").get<std::string>() + "\n";
    return out;
}

}  // namespace

Outcome cmd_compare(const std::string& oracle, const Options& o) {
    Setup s = find_entry(oracle_entry(oracle))->setup;
    if (o.doc) {
        if (s.fibration == "PMet" && o.doc->setup.fibration == "PMet") s.metric = o.doc->setup.metric;
        if (s.functor.name == "subdist" && o.doc->setup.functor.name == "subdist")
            s.functor.denominator = o.doc->setup.functor.denominator;
    }
    if (o.epsilon) s.metric.epsilon = *o.epsilon;
    if (o.denominator != 0) s.functor.denominator = o.denominator;

    return visit_setup(s, [&](const auto& fib, const auto& func, const auto& family) -> Outcome {
        using Fib = std::decay_t<decltype(fib)>;
        using F = std::decay_t<decltype(func)>;
        const auto strategy = default_strategy(fib);
        Tally t;

        if (oracle == "kripke_bisimilarity" || oracle == "markov_bisimilarity") {
            if constexpr (std::is_same_v<Fib, EqRel> &&
                          (std::is_same_v<F, Powerset> || std::is_same_v<F, Subdistribution>)) {
                const Document& doc = require_doc(o, "compare");
                if (doc.setup.functor.name != func.name())
                    throw InvalidInput("/functor/name: " + oracle + " compares " + func.name() + " coalgebras");
                for (const auto& name : selected(o, keys(doc.coalgebras))) {
                    const auto coalg = document_coalgebra(func, doc, name);
                    const auto engine = gfp(fib, family, coalg, strategy, o.max_iter).result();
                    Relation expected;
                    if constexpr (std::is_same_v<F, Powerset>) expected = oracle::kripke_bisimilarity(coalg);
                    else expected = oracle::prob_bisimilarity(coalg);
                    ++t.cases;
                    if (!(engine == expected))
                        t.mismatches.push_back({{"input", name},
                                                {"engine", engine.blocks_to_string()},
                                                {"oracle", expected.blocks_to_string()}});
                }
                return finish(oracle, "partition refinement", std::move(t), std::nullopt);
            }
        } else {
            const auto inputs = compare_inputs(fib, o);
            for (const auto& [name, p] : inputs) {
                const auto engine = codensity_lift(fib, func, family, p, strategy);
                typename Fib::Element expected;
                if constexpr (std::is_same_v<Fib, PMet> && std::is_same_v<F, Powerset>) {
                    expected = oracle::hausdorff(p);
                } else if constexpr (std::is_same_v<Fib, PMet> && std::is_same_v<F, Subdistribution>) {
                    expected = oracle::kantorovich_grid_matrix(p, func, fib.step());
                } else if constexpr (std::is_same_v<Fib, Pre> && std::is_same_v<F, Powerset>) {
                    if (oracle == "lower_preorder") expected = oracle::lower_preorder(p);
                    else if (oracle == "upper_preorder") expected = oracle::upper_preorder(p);
                    else expected = oracle::convex_preorder(p);
                } else if constexpr (std::is_same_v<Fib, TopFibration> && std::is_same_v<F, Powerset>) {
                    if (oracle == "vietoris_lower") expected = oracle::vietoris_lower(p);
                    else if (oracle == "vietoris_upper") expected = oracle::vietoris_upper(p);
                    else expected = oracle::vietoris_full(p);
                } else {
                    throw InvalidInput("compare: no oracle for " + fib.name() + " " + func.name());
                }
                ++t.cases;
                if constexpr (std::is_same_v<Fib, PMet>) {
                    const Rational diff = max_difference(engine, expected);
                    t.max_diff = std::max(t.max_diff, diff);
                    if (diff > 2 * fib.step())
                        t.mismatches.push_back(
                            {{"input", name}, {"engine", engine.to_string()}, {"oracle", expected.to_string()}});
                } else {
                    if (!(engine == expected))
                        t.mismatches.push_back({{"input", name},
                                                {"engine", fib.to_string(engine)},
                                                {"oracle", fib.to_string(expected)}});
                }
            }
            std::optional<Rational> tolerance;
            if constexpr (std::is_same_v<Fib, PMet>) tolerance = 2 * fib.step();
            const std::string method = oracle == "kantorovich" ? "brute force over grid nonexpansive maps"
                                       : oracle == "hausdorff" ? "closed form"
                                                               : "closed form over subsets";
            return finish(oracle, method, std::move(t), tolerance);
        }
        throw InvalidInput("compare: oracle '" + oracle + "' does not match the setup");
    });
}

Outcome cmd_catalog(const Options& o) {
    Outcome out;
    Json entries = Json::array();
    for (const auto& e : catalog()) {
        if (!o.names.empty() && std::find(o.names.begin(), o.names.end(), e.name) == o.names.end()) continue;
        const auto family = visit_setup(e.setup, [](const auto&, const auto&, const auto& fam) {
            std::vector<std::string> names;
            for (const auto& p : fam) names.push_back(p.name);
            return names;
        });
        Json functor{{"name", e.setup.functor.name}};
        if (!e.setup.functor.alphabet.empty()) functor["alphabet"] = e.setup.functor.alphabet;
        if (e.setup.functor.denominator != 0) functor["denominator"] = e.setup.functor.denominator;
        entries.push_back({{"name", e.name},
                           {"characterizes", e.characterizes},
                           {"fibration", e.setup.fibration},
                           {"functor", functor},
                           {"parameters", family},
                           {"max_bound", e.max_bound}});
        std::string params;
        for (const auto& p : family) params += (params.empty() ? "" : " ") + p;
        out.text += e.name + "\n  " + e.setup.fibration + " / " + e.setup.functor.name + " / " + params + "\n  " +
                    e.characterizes + "\n";
    }
    out.json = {{"command", "catalog"}, {"entries", entries}};
    return out;
}

Outcome cmd_format(const Options& o) {
    Outcome out;
    out.json = to_json(require_doc(o, "format"));
    out.text = canonical_text(out.json);
    return out;
}

}  // namespace codensity::cli
