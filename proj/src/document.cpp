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

#include "codensity/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace codensity {

namespace {

/// Largest carrier a document may declare.
constexpr std::size_t kMaxDocumentCarrier = 64;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw InvalidInput((path.empty() ? std::string("/") : path) + ": " + what);
}

void require_object(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok |= key == a;
        if (!ok) fail(path + "/" + key, "unknown key");
    }
}

const Json& member(const Json& j, const char* key, const std::string& path) {
    if (!j.contains(key)) fail(path, std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string get_string(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

Rational get_rational(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a rational written as a \"p/q\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const InvalidInput& e) {
        fail(path, e.what());
    }
}

std::size_t get_label(const FiniteSet& x, const Json& j, const std::string& path) {
    const auto label = get_string(j, path);
    auto i = x.find(label);
    if (!i) fail(path, "'" + label + "' is not in the carrier");
    return *i;
}

template <class Fn>
auto prefixed(const std::string& path, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const InvalidInput& e) {
        const std::string what = e.what();
        if (!what.empty() && what[0] == '/') throw;
        fail(path, what);
    }
}

std::vector<std::string> get_labels(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of labels");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_string(j[i], path + "/" + std::to_string(i)));
    return out;
}

Json labels_of(const FiniteSet& x, Subset s) {
    Json out = Json::array();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (subset_contains(s, i)) out.push_back(x.label(i));
    return out;
}

Subset subset_from_json(const Json& j, const FiniteSet& x, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of labels");
    Subset s = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::size_t k = get_label(x, j[i], path + "/" + std::to_string(i));
        if (subset_contains(s, k)) fail(path + "/" + std::to_string(i), "repeated label");
        s |= Subset{1} << k;
    }
    return s;
}

}  // namespace

FiniteSet carrier_from_json(const Json& j, const std::string& path) {
    auto labels = get_labels(j, path);
    if (labels.size() > kMaxDocumentCarrier) {
        fail(path, std::to_string(labels.size()) + " states exceed the carrier cap of " +
                       std::to_string(kMaxDocumentCarrier));
    }
    return prefixed(path, [&] { return FiniteSet(std::move(labels)); });
}

template <RelationKind K>
Relation element_from_json(const RelationFibration<K>& fib, const Json& j, const std::string& path) {
    require_object(j, path, {"carrier", "pairs"});
    const FiniteSet x = carrier_from_json(member(j, "carrier", path), path + "/carrier");
    const Json& pairs = member(j, "pairs", path);
    if (!pairs.is_array()) fail(path + "/pairs", "expected an array of [from, to] pairs");
    Relation r(x);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const std::string p = path + "/pairs/" + std::to_string(k);
        if (!pairs[k].is_array() || pairs[k].size() != 2) fail(p, "expected a [from, to] pair");
        r.set(get_label(x, pairs[k][0], p + "/0"), get_label(x, pairs[k][1], p + "/1"));
    }
    if (!fib.well_formed(r)) fail(path, "not an object of " + fib.name());
    return r;
}

template Relation element_from_json(const ERel&, const Json&, const std::string&);
template Relation element_from_json(const Pre&, const Json&, const std::string&);
template Relation element_from_json(const EqRel&, const Json&, const std::string&);

Pseudometric element_from_json(const PMet& fib, const Json& j, const std::string& path) {
    require_object(j, path, {"carrier", "distances"});
    const FiniteSet x = carrier_from_json(member(j, "carrier", path), path + "/carrier");
    const Json& ds = member(j, "distances", path);
    if (!ds.is_array()) fail(path + "/distances", "expected an array of [a, b, \"p/q\"] entries");
    Pseudometric d(x, fib.top_value());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < ds.size(); ++k) {
        const std::string p = path + "/distances/" + std::to_string(k);
        if (!ds[k].is_array() || ds[k].size() != 3) fail(p, "expected an [a, b, \"p/q\"] entry");
        std::size_t a = get_label(x, ds[k][0], p + "/0");
        std::size_t b = get_label(x, ds[k][1], p + "/1");
        if (a == b) fail(p, "distances from a point to itself are always 0");
        if (a > b) std::swap(a, b);
        if (!seen.emplace(a, b).second) fail(p, "distance given twice");
        const Rational v = get_rational(ds[k][2], p + "/2");
        if (v < 0 || v > fib.top_value()) fail(p + "/2", "distance outside [0, " + format_rational(fib.top_value()) + "]");
        d.set(a, b, v);
    }
    if (!fib.well_formed(d)) fail(path, "violates the triangle inequality");
    return d;
}

Topology element_from_json(const TopFibration& fib, const Json& j, const std::string& path) {
    require_object(j, path, {"carrier", "opens"});
    const FiniteSet x = carrier_from_json(member(j, "carrier", path), path + "/carrier");
    const Json& os = member(j, "opens", path);
    if (!os.is_array()) fail(path + "/opens", "expected an array of open sets");
    std::set<Subset> opens;
    for (std::size_t k = 0; k < os.size(); ++k)
        opens.insert(subset_from_json(os[k], x, path + "/opens/" + std::to_string(k)));
    Topology t(x, std::vector<Subset>(opens.begin(), opens.end()));
    if (!fib.well_formed(t)) fail(path, "the opens are not closed under union and intersection or miss the empty set or the carrier");
    return t;
}

Json element_to_json(const Relation& r) {
    Json pairs = Json::array();
    for (auto [i, j] : r.pairs()) pairs.push_back({r.base().label(i), r.base().label(j)});
    return {{"carrier", r.base().labels()}, {"pairs", pairs}};
}

Json element_to_json(const Pseudometric& d) {
    Json ds = Json::array();
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d(i, j) != Rational(0)) ds.push_back({d.base().label(i), d.base().label(j), format_rational(d(i, j))});
    return {{"carrier", d.base().labels()}, {"distances", ds}};
}

Json element_to_json(const Topology& t) {
    Json os = Json::array();
    for (Subset u : t.opens()) os.push_back(labels_of(t.base(), u));
    return {{"carrier", t.base().labels()}, {"opens", os}};
}

Subset transition_from_json(const Powerset&, const Json& j, const FiniteSet& x, const std::string& path) {
    return subset_from_json(j, x, path);
}

Subdist transition_from_json(const Subdistribution& f, const Json& j, const FiniteSet& x, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object from states to \"p/q\" weights");
    std::vector<Rational> w(x.size(), Rational(0));
    for (const auto& [label, value] : j.items()) {
        const std::string p = path + "/" + label;
        auto i = x.find(label);
        if (!i) fail(p, "'" + label + "' is not in the carrier");
        w[*i] = get_rational(value, p);
        if (w[*i] < 0) fail(p, "negative weight");
    }
    return prefixed(path, [&] { return f.from_weights(w); });
}

DetLts::Element transition_from_json(const DetLts& f, const Json& j, const FiniteSet& x, const std::string& path) {
    require_object(j, path, {"letter", "next"});
    const std::size_t a = get_label(f.alphabet(), member(j, "letter", path), path + "/letter");
    return {a, get_label(x, member(j, "next", path), path + "/next")};
}

Machine::Element transition_from_json(const Machine& f, const Json& j, const FiniteSet& x, const std::string& path) {
    require_object(j, path, {"accept", "next"});
    const Json& acc = member(j, "accept", path);
    if (!acc.is_boolean()) fail(path + "/accept", "expected true or false");
    Machine::Element e{acc.get<bool>(), std::vector<std::size_t>(f.alphabet().size(), 0)};
    const Json& next = member(j, "next", path);
    if (!next.is_object()) fail(path + "/next", "expected an object from letters to states");
    for (std::size_t a = 0; a < f.alphabet().size(); ++a) {
        const auto& letter = f.alphabet().label(a);
        if (!next.contains(letter)) fail(path + "/next", "no successor for letter '" + letter + "'");
        e.next[a] = get_label(x, next.at(letter), path + "/next/" + letter);
    }
    if (next.size() != f.alphabet().size()) fail(path + "/next", "successors for letters outside the alphabet");
    return e;
}

std::size_t transition_from_json(const IdentityFunctor&, const Json& j, const FiniteSet& x,
                                 const std::string& path) {
    return get_label(x, j, path);
}

Json transition_to_json(const Powerset&, Subset s, const FiniteSet& x) { return labels_of(x, s); }

Json transition_to_json(const Subdistribution& f, const Subdist& p, const FiniteSet& x) {
    Json out = Json::object();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (p[i] != 0) out[x.label(i)] = format_rational(f.weight(p, i));
    return out;
}

Json transition_to_json(const DetLts& f, const DetLts::Element& e, const FiniteSet& x) {
    return {{"letter", f.alphabet().label(e.letter)}, {"next", x.label(e.next)}};
}

Json transition_to_json(const Machine& f, const Machine::Element& e, const FiniteSet& x) {
    Json next = Json::object();
    for (std::size_t a = 0; a < f.alphabet().size(); ++a) next[f.alphabet().label(a)] = x.label(e.next[a]);
    return {{"accept", e.accept}, {"next", next}};
}

Json transition_to_json(const IdentityFunctor&, std::size_t e, const FiniteSet& x) { return x.label(e); }

namespace {

ParameterSpec parameter_from_json(const Json& j, const std::string& path) {
    ParameterSpec p;
    if (j.is_string()) {
        p.tau = j.get<std::string>();
        return p;
    }
    require_object(j, path, {"omega", "tau"});
    if (j.contains("omega")) {
        const Json& o = j.at("omega");
        if (o.is_string()) p.omega = o.get<std::string>();
        else if (o.is_object()) p.omega_inline = o;
        else fail(path + "/omega", "expected an object name or an inline object");
    }
    const Json& t = member(j, "tau", path);
    if (t.is_string()) p.tau = t.get<std::string>();
    else if (t.is_object()) p.tau_table = t;
    else fail(path + "/tau", "expected a modality name or a table");
    return p;
}

Json parameter_to_json(const ParameterSpec& p) {
    if (p.omega.empty() && p.omega_inline.is_null() && p.tau_table.is_null()) return p.tau;
    Json out = Json::object();
    if (!p.omega_inline.is_null()) out["omega"] = p.omega_inline;
    else if (!p.omega.empty()) out["omega"] = p.omega;
    out["tau"] = p.tau_table.is_null() ? Json(p.tau) : p.tau_table;
    return out;
}

FunctorSpec functor_from_json(const Json& j, const std::string& path) {
    require_object(j, path, {"name", "alphabet", "denominator"});
    FunctorSpec f;
    f.name = get_string(member(j, "name", path), path + "/name");
    const bool lettered = f.name == "detlts" || f.name == "machine";
    if (lettered) {
        f.alphabet = carrier_from_json(member(j, "alphabet", path), path + "/alphabet").labels();
    } else if (j.contains("alphabet")) {
        fail(path + "/alphabet", "only detlts and machine take an alphabet");
    }
    if (f.name == "subdist") {
        const Json& d = member(j, "denominator", path);
        if (!d.is_number_unsigned() || d.get<std::uint64_t>() < 1 || d.get<std::uint64_t>() > 64)
            fail(path + "/denominator", "expected an integer between 1 and 64");
        f.denominator = d.get<std::uint32_t>();
    } else if (j.contains("denominator")) {
        fail(path + "/denominator", "only subdist takes a denominator");
    }
    return f;
}

Json functor_to_json(const FunctorSpec& f) {
    Json out{{"name", f.name}};
    if (f.name == "detlts" || f.name == "machine") out["alphabet"] = f.alphabet;
    if (f.name == "subdist") out["denominator"] = f.denominator;
    return out;
}

}  // namespace

Document parse_document(const Json& j) {
    require_object(j, "", {"codensity", "fibration", "functor", "metric", "parameters", "coalgebras", "morphisms",
                           "elements"});
    const Json& version = member(j, "codensity", "");
    if (!version.is_number_integer() || version.get<int>() != kDocumentVersion)
        fail("/codensity", "unsupported document version (expected " + std::to_string(kDocumentVersion) + ")");

    Document doc;
    Setup& s = doc.setup;
    s.fibration = get_string(member(j, "fibration", ""), "/fibration");
    s.functor = functor_from_json(member(j, "functor", ""), "/functor");
    if (j.contains("metric")) {
        if (s.fibration != "PMet") fail("/metric", "only PMet takes metric options");
        const Json& m = j.at("metric");
        require_object(m, "/metric", {"top", "epsilon"});
        s.metric.top = get_rational(member(m, "top", "/metric"), "/metric/top");
        s.metric.epsilon = get_rational(member(m, "epsilon", "/metric"), "/metric/epsilon");
    }
    const Json& params = member(j, "parameters", "");
    if (!params.is_array()) fail("/parameters", "expected an array");
    for (std::size_t i = 0; i < params.size(); ++i)
        s.parameters.push_back(parameter_from_json(params[i], "/parameters/" + std::to_string(i)));

    auto section = [&](const char* key) -> const Json& {
        static const Json empty = Json::object();
        if (!j.contains(key)) return empty;
        if (!j.at(key).is_object()) fail(std::string("/") + key, "expected an object keyed by name");
        return j.at(key);
    };

    for (const auto& [name, c] : section("coalgebras").items()) {
        const std::string path = "/coalgebras/" + name;
        require_object(c, path, {"carrier", "transitions"});
        CoalgebraSpec spec;
        spec.carrier = carrier_from_json(member(c, "carrier", path), path + "/carrier").labels();
        spec.transitions = member(c, "transitions", path);
        if (!spec.transitions.is_object()) fail(path + "/transitions", "expected an object keyed by state");
        doc.coalgebras.emplace(name, std::move(spec));
    }
    for (const auto& [name, m] : section("morphisms").items()) {
        const std::string path = "/morphisms/" + name;
        require_object(m, path, {"from", "to", "map"});
        MorphismSpec spec;
        spec.from = get_string(member(m, "from", path), path + "/from");
        spec.to = get_string(member(m, "to", path), path + "/to");
        if (!doc.coalgebras.count(spec.from)) fail(path + "/from", "no coalgebra named '" + spec.from + "'");
        if (!doc.coalgebras.count(spec.to)) fail(path + "/to", "no coalgebra named '" + spec.to + "'");
        const Json& map = member(m, "map", path);
        if (!map.is_object()) fail(path + "/map", "expected an object from source states to target states");
        for (const auto& [a, b] : map.items()) spec.map.emplace_back(a, get_string(b, path + "/map/" + a));
        doc.morphisms.emplace(name, std::move(spec));
    }
    for (const auto& [name, e] : section("elements").items()) doc.elements.emplace(name, e);

    // Typed validation; replaces every payload with its canonical form.
    visit_setup(s, [&](const auto& fib, const auto& func, const auto&) {
        for (auto& [name, spec] : doc.coalgebras) {
            const auto coalg = build_coalgebra(func, spec, "/coalgebras/" + name);
            Json canon = Json::object();
            for (std::size_t x = 0; x < coalg.carrier().size(); ++x)
                canon[coalg.carrier().label(x)] = transition_to_json(func, coalg(x), coalg.carrier());
            spec.transitions = std::move(canon);
        }
        for (auto& [name, spec] : doc.morphisms) {
            const auto m = document_morphism(func, doc, name);
            spec.map.clear();
            for (std::size_t x = 0; x < m.map().dom().size(); ++x)
                spec.map.emplace_back(m.map().dom().label(x), m.map().cod().label(m.map()(x)));
        }
        for (auto& [name, e] : doc.elements) e = element_to_json(element_from_json(fib, e, "/elements/" + name));
        for (std::size_t i = 0; i < s.parameters.size(); ++i) {
            auto& p = s.parameters[i];
            if (!p.omega_inline.is_null())
                p.omega_inline = element_to_json(resolve_omega(fib, p, "/parameters/" + std::to_string(i)));
        }
    });
    return doc;
}

Document parse_document_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("JSON syntax error: ") + e.what());
    }
    return parse_document(j);
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_document_text(ss.str());
    } catch (const InvalidInput& e) {
        throw InvalidInput(path + ":" + e.what());
    }
}

Json to_json(const Document& doc) {
    const Setup& s = doc.setup;
    Json out{{"codensity", kDocumentVersion}, {"fibration", s.fibration}, {"functor", functor_to_json(s.functor)}};
    if (s.fibration == "PMet")
        out["metric"] = {{"top", format_rational(s.metric.top)}, {"epsilon", format_rational(s.metric.epsilon)}};
    Json params = Json::array();
    for (const auto& p : s.parameters) params.push_back(parameter_to_json(p));
    out["parameters"] = params;
    if (!doc.coalgebras.empty()) {
        Json cs = Json::object();
        for (const auto& [name, c] : doc.coalgebras) cs[name] = {{"carrier", c.carrier}, {"transitions", c.transitions}};
        out["coalgebras"] = cs;
    }
    if (!doc.morphisms.empty()) {
        Json ms = Json::object();
        for (const auto& [name, m] : doc.morphisms) {
            Json map = Json::object();
            for (const auto& [a, b] : m.map) map[a] = b;
            ms[name] = {{"from", m.from}, {"to", m.to}, {"map", map}};
        }
        out["morphisms"] = ms;
    }
    if (!doc.elements.empty()) out["elements"] = doc.elements;
    return out;
}

std::string canonical_text(const Json& j) { return j.dump(2) + "\n"; }

std::string serialize(const Document& doc) { return canonical_text(to_json(doc)); }

}  // namespace codensity
