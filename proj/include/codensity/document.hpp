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

#pragma once

// JSON input documents. Every error message starts with the JSON pointer of
// the offending value. Rationals are written as "p/q" strings.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "codensity/bisimilarity.hpp"
#include "codensity/setup.hpp"

namespace codensity {

/// Value of the top-level version key "codensity".
constexpr int kDocumentVersion = 1;

struct CoalgebraSpec {
    std::vector<std::string> carrier;
    /// State label -> transition, in canonical form.
    Json transitions;
};

struct MorphismSpec {
    std::string from;
    std::string to;
    std::vector<std::pair<std::string, std::string>> map;
};

struct Document {
    Setup setup;
    std::map<std::string, CoalgebraSpec> coalgebras;
    std::map<std::string, MorphismSpec> morphisms;
    /// Named fiber elements, in canonical form.
    std::map<std::string, Json> elements;
};

/// Validates `j` completely: cross-references, transitions against the
/// functor, elements against the fibration and morphism equations.
Document parse_document(const Json& j);
Document parse_document_text(const std::string& text);
Document load_document(const std::string& path);

Json to_json(const Document& doc);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize(const Document& doc);
std::string canonical_text(const Json& j);

// Transition codecs, one per functor.
Subset transition_from_json(const Powerset& f, const Json& j, const FiniteSet& x, const std::string& path);
Subdist transition_from_json(const Subdistribution& f, const Json& j, const FiniteSet& x, const std::string& path);
DetLts::Element transition_from_json(const DetLts& f, const Json& j, const FiniteSet& x, const std::string& path);
Machine::Element transition_from_json(const Machine& f, const Json& j, const FiniteSet& x, const std::string& path);
std::size_t transition_from_json(const IdentityFunctor& f, const Json& j, const FiniteSet& x,
                                 const std::string& path);

Json transition_to_json(const Powerset& f, Subset s, const FiniteSet& x);
Json transition_to_json(const Subdistribution& f, const Subdist& p, const FiniteSet& x);
Json transition_to_json(const DetLts& f, const DetLts::Element& e, const FiniteSet& x);
Json transition_to_json(const Machine& f, const Machine::Element& e, const FiniteSet& x);
Json transition_to_json(const IdentityFunctor& f, std::size_t e, const FiniteSet& x);

FiniteSet carrier_from_json(const Json& j, const std::string& path);

template <SetEndofunctor F>
Coalgebra<F> build_coalgebra(const F& func, const CoalgebraSpec& spec, const std::string& path) {
    FiniteSet x(spec.carrier);
    std::vector<typename F::Element> transitions;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& label = x.label(i);
        if (!spec.transitions.contains(label)) throw InvalidInput(path + "/transitions: no transition for '" + label + "'");
        transitions.push_back(
            transition_from_json(func, spec.transitions.at(label), x, path + "/transitions/" + label));
    }
    if (spec.transitions.size() != x.size())
        throw InvalidInput(path + "/transitions: transitions for states outside the carrier");
    try {
        return Coalgebra<F>(func, x, std::move(transitions));
    } catch (const InvalidInput& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

template <SetEndofunctor F>
Coalgebra<F> document_coalgebra(const F& func, const Document& doc, const std::string& name) {
    auto it = doc.coalgebras.find(name);
    if (it == doc.coalgebras.end()) throw InvalidInput("/coalgebras: no coalgebra named '" + name + "'");
    return build_coalgebra(func, it->second, "/coalgebras/" + name);
}

template <SetEndofunctor F>
CoalgebraMorphism<F> document_morphism(const F& func, const Document& doc, const std::string& name) {
    const std::string path = "/morphisms/" + name;
    auto it = doc.morphisms.find(name);
    if (it == doc.morphisms.end()) throw InvalidInput("/morphisms: no morphism named '" + name + "'");
    const MorphismSpec& m = it->second;
    auto from = document_coalgebra(func, doc, m.from);
    auto to = document_coalgebra(func, doc, m.to);
    try {
        auto map = SetFunction::from_labels(from.carrier(), to.carrier(), m.map);
        return CoalgebraMorphism<F>(std::move(from), std::move(to), std::move(map));
    } catch (const InvalidInput& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

template <Fibration Fib>
typename Fib::Element document_element(const Fib& fib, const Document& doc, const std::string& name) {
    auto it = doc.elements.find(name);
    if (it == doc.elements.end()) throw InvalidInput("/elements: no element named '" + name + "'");
    return element_from_json(fib, it->second, "/elements/" + name);
}

}  // namespace codensity
