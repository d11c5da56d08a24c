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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "codensity/fibration.hpp"
#include "codensity/functors.hpp"
#include "codensity/lifting.hpp"
#include "codensity/report.hpp"

namespace codensity {

/// Largest carrier size the brute-force checkers accept.
constexpr std::size_t kMaxCheckBound = 4;

/// Search carriers: sources {a, b, c, d}, targets {x, y, z, z2}.
inline FiniteSet source_carrier(std::size_t n) { return FiniteSet::letters(n); }

inline FiniteSet target_carrier(std::size_t n) {
    static const std::vector<std::string> names{"x", "y", "z", "z2"};
    return FiniteSet(std::vector<std::string>(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(n)));
}

inline void require_check_bound(const std::string& check, std::size_t n) {
    if (n > kMaxCheckBound) {
        throw InvalidInput(check + ": bound " + std::to_string(n) + " exceeds the cap of " +
                           std::to_string(kMaxCheckBound));
    }
}

/// A Cartesian arrow f : P → Q (P = f*Q) and a map g : P → Ω̂ with no extension along f.
template <Fibration Fib>
struct ExtensionFailure {
    SetFunction f;
    typename Fib::Element p;
    typename Fib::Element q;
    SetFunction g;
};

template <Fibration Fib>
struct CInjectivityResult {
    CheckReport report;
    std::optional<ExtensionFailure<Fib>> witness;
};

/// Re-evaluates the definitions on a witness: true iff P = f*Q, g is an arrow
/// P → Ω̂, and no arrow h : Q → Ω̂ has h∘f = g.
template <Fibration Fib>
bool replay_extension_failure(const Fib& fib, const typename Fib::Element& omega, const ExtensionFailure<Fib>& w) {
    if (!(w.p == fib.pullback(w.f, w.q))) return false;
    if (!arrow_exists(fib, w.g, w.p, omega)) return false;
    FunctionEnumerator h(w.q.base(), omega.base());
    while (h.next()) {
        if (compose(h.current(), w.f) == w.g && arrow_exists(fib, h.current(), w.q, omega)) return false;
    }
    return true;
}

/// Bounded search for a Cartesian arrow and a map into Ω̂ that does not extend.
/// Embeddings are searched before non-injective base maps; within each phase
/// sizes ascend (|X| then |Y|), then f, Q and g follow enumeration order.
template <Fibration Fib>
CInjectivityResult<Fib> check_cinjective(const Fib& fib, const typename Fib::Element& omega, std::size_t n,
                                         const std::string& omega_name = "omega") {
    require_check_bound("check_cinjective", n);
    if (!fib.well_formed(omega)) throw InvalidInput("check_cinjective: observation object is not well formed");
    CInjectivityResult<Fib> result;
    CheckReport& report = result.report;
    report.check = "cinjective";
    report.subject = fib.name() + " " + omega_name;
    report.search_bound = "|X|,|Y| <= " + std::to_string(n);

    std::vector<std::vector<typename Fib::Element>> fibers;
    for (std::size_t k = 0; k <= n; ++k) fibers.push_back(fib.enumerate(target_carrier(k)));

    for (const bool injective_phase : {true, false}) {
        for (std::size_t xs = 0; xs <= n; ++xs) {
            const FiniteSet x = source_carrier(xs);
            const auto gs = enumerate_functions(x, omega.base());
            for (std::size_t ys = 0; ys <= n; ++ys) {
                const FiniteSet y = target_carrier(ys);
                FunctionEnumerator fe(x, y);
                while (fe.next()) {
                    const SetFunction& f = fe.current();
                    if (f.injective() != injective_phase) continue;
                    for (const auto& q : fibers[ys]) {
                        const auto p = fib.pullback(f, q);
                        std::vector<SetFunction> hs;
                        FunctionEnumerator he(y, omega.base());
                        while (he.next())
                            if (arrow_exists(fib, he.current(), q, omega)) hs.push_back(he.current());
                        for (const auto& g : gs) {
                            if (!arrow_exists(fib, g, p, omega)) continue;
                            bool extends = false;
                            for (const auto& h : hs) {
                                if (compose(h, f) == g) {
                                    extends = true;
                                    break;
                                }
                            }
                            if (extends) continue;
                            report.pass = false;
                            report.witness = {{"X", subset_to_string(x, full_subset(xs))},
                                              {"Y", subset_to_string(y, full_subset(ys))},
                                              {"f", f.to_string()},
                                              {"P", fib.to_string(p)},
                                              {"Q", fib.to_string(q)},
                                              {"g", g.to_string()}};
                            report.note = "no arrow h : Q -> omega with h . f = g";
                            result.witness = ExtensionFailure<Fib>{f, p, q, g};
                            return result;
                        }
                    }
                }
            }
        }
    }
    return result;
}

/// Ḟ(f*P) = (Ff)*(ḞP) for every f : X → Y and P over Y with |X|, |Y| ≤ n.
/// Grid-strategy verdicts are marked advisory.
template <Fibration Fib, SetEndofunctor F>
CheckReport check_fibered(const Fib& fib, const F& func, const ParameterFamily<Fib, F>& family, std::size_t n,
                          TestStrategy strategy, const std::string& subject = "") {
    require_check_bound("check_fibered", n);
    CheckReport report;
    report.check = "fibered";
    report.subject = subject.empty() ? fib.name() + " " + func.name() : subject;
    report.search_bound = "|X|,|Y| <= " + std::to_string(n);
    report.advisory = strategy == TestStrategy::grid;

    // Lifts memoized by carrier label and rendered element.
    std::map<std::string, typename Fib::Element> memo;
    auto lift = [&](const typename Fib::Element& p) -> const typename Fib::Element& {
        std::string key = fib.to_string(p);
        for (const auto& l : p.base().labels()) key += " " + l;
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(std::move(key), codensity_lift(fib, func, family, p, strategy)).first;
        return it->second;
    };

    for (std::size_t xs = 0; xs <= n; ++xs) {
        const FiniteSet x = source_carrier(xs);
        for (std::size_t ys = 0; ys <= n; ++ys) {
            const FiniteSet y = target_carrier(ys);
            const auto fiber = fib.enumerate(y);
            FunctionEnumerator fe(x, y);
            while (fe.next()) {
                const SetFunction& f = fe.current();
                const SetFunction ff = functor_arrow(func, f);
                for (const auto& p : fiber) {
                    const auto& lhs = lift(fib.pullback(f, p));
                    const auto rhs = fib.pullback(ff, lift(p));
                    if (lhs == rhs) continue;
                    report.pass = false;
                    report.witness = {{"f", f.to_string()},
                                      {"P", fib.to_string(p)},
                                      {"lift(f*P)", fib.to_string(lhs)},
                                      {"(Ff)*(lift P)", fib.to_string(rhs)}};
                    const auto down = fib.leq(lhs, rhs);
                    report.note = down ? "lift(f*P) is strictly below (Ff)*(lift P)"
                                       : "lift(f*P) is not below (Ff)*(lift P): " + down.witness;
                    return report;
                }
            }
        }
    }
    return report;
}

/// One row of the theorem battery: c-injectivity of every observation object
/// and fiberedness of the lifting. The implication is asserted only when every
/// object passes.
struct BatteryRow {
    std::string entry;
    std::vector<CheckReport> cinjective;
    CheckReport fibered;
    bool asserted = false;
    bool pass = true;

    std::string to_text() const;
};

template <Fibration Fib, SetEndofunctor F>
BatteryRow theorem_row(const std::string& entry, const Fib& fib, const F& func,
                       const ParameterFamily<Fib, F>& family, std::size_t n, TestStrategy strategy) {
    BatteryRow row;
    row.entry = entry;
    bool all_injective = true;
    std::vector<std::string> seen;
    for (const auto& param : family) {
        const auto rendered = fib.to_string(param.omega);
        bool repeated = false;
        for (const auto& s : seen) repeated |= s == rendered;
        if (repeated) continue;
        seen.push_back(rendered);
        auto result = check_cinjective(fib, param.omega, n, param.name);
        all_injective &= result.report.pass;
        row.cinjective.push_back(std::move(result.report));
    }
    row.fibered = check_fibered(fib, func, family, n, strategy, entry);
    row.asserted = all_injective;
    row.pass = !all_injective || row.fibered.pass;
    return row;
}

}  // namespace codensity
