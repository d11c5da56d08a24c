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

// Runtime selection of a fibration, a functor and a parameter family by name.

#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "codensity/algebras.hpp"
#include "codensity/lifting.hpp"
#include "codensity/pseudometric.hpp"
#include "codensity/relation.hpp"
#include "codensity/topology.hpp"

namespace codensity {

using Json = nlohmann::json;

struct FunctorSpec {
    std::string name;
    /// Letters for detlts and machine.
    std::vector<std::string> alphabet;
    /// Weight denominator for subdist.
    std::uint32_t denominator = 0;
};

struct MetricSpec {
    Rational top{1};
    Rational epsilon{1, 2};
};

/// An observation object and a modality, each named or given inline.
/// An empty `omega` selects the fibration's default object.
struct ParameterSpec {
    std::string omega;
    Json omega_inline;
    std::string tau;
    /// FΩ label -> Ω label, when the modality is given as a table.
    Json tau_table;
};

struct Setup {
    std::string fibration;
    FunctorSpec functor;
    MetricSpec metric;
    std::vector<ParameterSpec> parameters;
};

// Document codecs for fiber elements, shared by inline observation objects.
template <RelationKind K>
Relation element_from_json(const RelationFibration<K>& fib, const Json& j, const std::string& path);
Pseudometric element_from_json(const PMet& fib, const Json& j, const std::string& path);
Topology element_from_json(const TopFibration& fib, const Json& j, const std::string& path);

Json element_to_json(const Relation& r);
Json element_to_json(const Pseudometric& d);
Json element_to_json(const Topology& t);

extern template Relation element_from_json(const ERel&, const Json&, const std::string&);
extern template Relation element_from_json(const Pre&, const Json&, const std::string&);
extern template Relation element_from_json(const EqRel&, const Json&, const std::string&);

/// Names accepted for built-in observation objects.
const std::vector<std::string>& omega_names();
/// The fibration's default observation object name.
std::string default_omega(const std::string& fibration);

template <Fibration Fib>
typename Fib::Element named_omega(const Fib& fib, const std::string& name, const std::string& path) {
    typename Fib::Element out;
    bool known = false;
    if constexpr (std::is_same_v<typename Fib::Element, Relation>) {
        known = true;
        if (name == "two_leq") out = omega_pre();
        else if (name == "two_eq") out = omega_eqrel();
        else if (name == "diamond_lattice") out = diamond_lattice();
        else if (name == "antichain2") out = antichain(2);
        else known = false;
    } else if constexpr (std::is_same_v<Fib, TopFibration>) {
        known = name == "sierpinski";
        if (known) out = omega_sierpinski();
    } else if constexpr (std::is_same_v<Fib, PMet>) {
        known = name == "interval";
        if (known) out = fib.omega();
    }
    if (!known) throw InvalidInput(path + ": no observation object '" + name + "' for " + fib.name());
    if (!fib.well_formed(out)) throw InvalidInput(path + ": '" + name + "' is not an object of " + fib.name());
    return out;
}

template <Fibration Fib>
typename Fib::Element resolve_omega(const Fib& fib, const ParameterSpec& spec, const std::string& path) {
    if (!spec.omega_inline.is_null()) {
        auto omega = element_from_json(fib, spec.omega_inline, path + "/omega");
        if (!fib.well_formed(omega)) throw InvalidInput(path + "/omega: not an object of " + fib.name());
        return omega;
    }
    return named_omega(fib, spec.omega.empty() ? default_omega(fib.name()) : spec.omega, path + "/omega");
}

namespace detail {

inline std::string parameter_label(const ParameterSpec& spec, const std::string& omega, const std::string& tau) {
    std::string o = spec.omega_inline.is_null() ? omega : "inline";
    return "(" + o + ", " + tau + ")";
}

inline std::size_t letter_index(const FiniteSet& alphabet, const std::string& letter, const std::string& path) {
    auto i = alphabet.find(letter);
    if (!i) throw InvalidInput(path + ": '" + letter + "' is not a letter of the alphabet");
    return *i;
}

}  // namespace detail

/// The modalities named by `spec` over `omega`. Family names expand:
/// "thr" to thr:k/D for k = 0..D, "next" and "guard" to every letter.
template <Fibration Fib, SetEndofunctor F>
ParameterFamily<Fib, F> resolve_parameter(const Fib& fib, const F& func, const ParameterSpec& spec,
                                          const std::string& path) {
    using Value = typename Fib::Value;
    using Element = typename F::Element;
    const auto omega = resolve_omega(fib, spec, path);
    const std::string omega_name = spec.omega.empty() ? default_omega(fib.name()) : spec.omega;
    ParameterFamily<Fib, F> out;
    auto add = [&](const std::string& tau_name, std::function<Value(const Element&)> tau) {
        out.push_back({detail::parameter_label(spec, omega_name, tau_name), omega, std::move(tau)});
    };
    const std::string& tau = spec.tau;
    const std::string tpath = path + "/tau";

    if (!spec.tau_table.is_null()) {
        if constexpr (std::is_same_v<Value, std::size_t>) {
            if (!spec.tau_table.is_object()) throw InvalidInput(tpath + ": a modality table must be an object");
            const FiniteSet& w = omega.base();
            std::map<Element, std::size_t> table;
            for (const auto& e : func.elements(w)) {
                const auto key = func.label(e, w);
                if (!spec.tau_table.contains(key)) throw InvalidInput(tpath + ": no value for '" + key + "'");
                const auto& v = spec.tau_table.at(key);
                if (!v.is_string()) throw InvalidInput(tpath + "/" + key + ": expected a label of omega");
                table.emplace(e, detail::letter_index(w, v.template get<std::string>(), tpath + "/" + key));
            }
            if (table.size() != spec.tau_table.size())
                throw InvalidInput(tpath + ": the table has entries outside F(omega)");
            add("table", [table](const Element& e) { return table.at(e); });
            return out;
        } else {
            throw InvalidInput(tpath + ": modality tables are not available for " + fib.name());
        }
    }

    if constexpr (std::is_same_v<F, IdentityFunctor>) {
        if (tau == "id") {
            if constexpr (std::is_same_v<Value, Rational>) {
                add("id", [grid = fib.grid()](const std::size_t& i) { return grid[i]; });
            } else {
                add("id", algebra::identity());
            }
            return out;
        }
    }

    if constexpr (std::is_same_v<Value, Rational>) {
        if constexpr (std::is_same_v<F, Powerset>) {
            if (tau == "inf") {
                add("inf", algebra::infimum(fib.grid(), fib.top_value()));
                return out;
            }
        } else if constexpr (std::is_same_v<F, Subdistribution>) {
            if (tau == "e") {
                add("e", algebra::expectation(fib.grid(), func.denominator()));
                return out;
            }
        }
    } else {
        const bool two_valued = omega.base() == FiniteSet::two();
        auto require_two = [&]() {
            if (!two_valued) throw InvalidInput(tpath + ": '" + tau + "' is defined over the truth values only");
        };
        if constexpr (std::is_same_v<F, Powerset>) {
            if (tau == "diamond" || tau == "box") {
                require_two();
                add(tau, tau == "diamond" ? algebra::diamond() : algebra::box());
                return out;
            }
        } else if constexpr (std::is_same_v<F, Subdistribution>) {
            if (tau == "thr") {
                require_two();
                for (std::uint32_t k = 0; k <= func.denominator(); ++k) {
                    const Rational r(k, func.denominator());
                    add("thr:" + format_rational(r), algebra::threshold(r, func.denominator()));
                }
                return out;
            }
            if (tau.rfind("thr:", 0) == 0) {
                require_two();
                const Rational r = parse_rational(tau.substr(4));
                add("thr:" + format_rational(r), algebra::threshold(r, func.denominator()));
                return out;
            }
        } else if constexpr (std::is_same_v<F, Machine>) {
            require_two();
            if (tau == "acc") {
                add("acc", algebra::accept());
                return out;
            }
            if (tau == "next") {
                for (std::size_t a = 0; a < func.alphabet().size(); ++a)
                    add("next:" + func.alphabet().label(a), algebra::next(a));
                return out;
            }
            if (tau.rfind("next:", 0) == 0) {
                const std::size_t a = detail::letter_index(func.alphabet(), tau.substr(5), tpath);
                add(tau, algebra::next(a));
                return out;
            }
        } else if constexpr (std::is_same_v<F, DetLts>) {
            require_two();
            if (tau == "guard") {
                for (std::size_t a = 0; a < func.alphabet().size(); ++a)
                    add("guard:" + func.alphabet().label(a), algebra::guard(a));
                return out;
            }
            if (tau.rfind("guard:", 0) == 0) {
                const std::size_t a = detail::letter_index(func.alphabet(), tau.substr(6), tpath);
                add(tau, algebra::guard(a));
                return out;
            }
        }
    }
    throw InvalidInput(tpath + ": no modality '" + tau + "' for " + func.name() + " over " + fib.name());
}

template <Fibration Fib, SetEndofunctor F>
ParameterFamily<Fib, F> resolve_family(const Fib& fib, const F& func, const std::vector<ParameterSpec>& specs) {
    ParameterFamily<Fib, F> out;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        auto part = resolve_parameter(fib, func, specs[i], "/parameters/" + std::to_string(i));
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

/// Calls v(fib) with the fibration named by the setup.
template <class Visitor>
decltype(auto) visit_fibration(const Setup& s, Visitor&& v) {
    if (s.fibration == "ERel") return v(ERel{});
    if (s.fibration == "Pre") return v(Pre{});
    if (s.fibration == "EqRel") return v(EqRel{});
    if (s.fibration == "Top") return v(TopFibration{});
    if (s.fibration == "PMet") return v(PMet(s.metric.top, s.metric.epsilon));
    throw InvalidInput("/fibration: unknown fibration '" + s.fibration + "'");
}

/// Calls v(func) with the functor named by the spec.
template <class Visitor>
decltype(auto) visit_functor(const FunctorSpec& f, Visitor&& v) {
    if (f.name == "powerset") return v(Powerset{});
    if (f.name == "subdist") return v(Subdistribution(f.denominator));
    if (f.name == "detlts") return v(DetLts(FiniteSet(f.alphabet)));
    if (f.name == "machine") return v(Machine(FiniteSet(f.alphabet)));
    if (f.name == "identity") return v(IdentityFunctor{});
    throw InvalidInput("/functor/name: unknown functor '" + f.name + "'");
}

/// Calls v(fib, func, family) with the resolved setup.
template <class Visitor>
decltype(auto) visit_setup(const Setup& s, Visitor&& v) {
    return visit_fibration(s, [&](const auto& fib) -> decltype(auto) {
        return visit_functor(s.functor, [&](const auto& func) -> decltype(auto) {
            const auto family = resolve_family(fib, func, s.parameters);
            return v(fib, func, family);
        });
    });
}

}  // namespace codensity
