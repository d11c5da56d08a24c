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

#include "codensity/set.hpp"

#include <algorithm>
#include <unordered_set>

namespace codensity {

namespace {

void require_distinct(const std::vector<std::string>& labels) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw InvalidInput("duplicate element label '" + l + "'");
        }
    }
}

}  // namespace

FiniteSet::FiniteSet() : labels_(std::make_shared<const std::vector<std::string>>()) {}

FiniteSet::FiniteSet(std::vector<std::string> labels) {
    require_distinct(labels);
    std::sort(labels.begin(), labels.end());
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

FiniteSet::FiniteSet(Unchecked, std::vector<std::string> labels)
    : labels_(std::make_shared<const std::vector<std::string>>(std::move(labels))) {}

FiniteSet FiniteSet::in_order(std::vector<std::string> labels) {
    require_distinct(labels);
    return FiniteSet(Unchecked{}, std::move(labels));
}

FiniteSet FiniteSet::letters(std::size_t n, std::string_view alphabet) {
    if (n > alphabet.size()) {
        throw InvalidInput("letters: at most " + std::to_string(alphabet.size()) + " elements");
    }
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, alphabet[i]);
    return FiniteSet(std::move(out));
}

const FiniteSet& FiniteSet::two() {
    static const FiniteSet kTwo = FiniteSet::in_order({"bot", "top"});
    return kTwo;
}

std::optional<std::size_t> FiniteSet::find(std::string_view label) const {
    const auto& ls = *labels_;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (ls[i] == label) return i;
    }
    return std::nullopt;
}

std::size_t FiniteSet::index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw InvalidInput("unknown element '" + std::string(label) + "'");
}

SetFunction::SetFunction(FiniteSet dom, FiniteSet cod, std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (table_.size() != dom_.size()) {
        throw InvalidInput("function table has " + std::to_string(table_.size()) +
                           " entries for a domain of size " + std::to_string(dom_.size()));
    }
    for (std::size_t v : table_) {
        if (v >= cod_.size()) throw InvalidInput("function image outside codomain");
    }
}

SetFunction SetFunction::identity(const FiniteSet& x) {
    std::vector<std::size_t> t(x.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
    return SetFunction(x, x, std::move(t));
}

SetFunction SetFunction::constant(const FiniteSet& dom, const FiniteSet& cod, std::size_t value) {
    return SetFunction(dom, cod, std::vector<std::size_t>(dom.size(), value));
}

SetFunction SetFunction::from_labels(const FiniteSet& dom, const FiniteSet& cod,
                                     const std::vector<std::pair<std::string, std::string>>& graph) {
    std::vector<std::size_t> t(dom.size(), cod.size());
    for (const auto& [from, to] : graph) {
        std::size_t i = dom.index_of(from);
        if (t[i] != cod.size()) throw InvalidInput("element '" + from + "' mapped twice");
        t[i] = cod.index_of(to);
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == cod.size()) throw InvalidInput("function undefined on '" + dom.label(i) + "'");
    }
    return SetFunction(dom, cod, std::move(t));
}

bool SetFunction::injective() const {
    std::vector<bool> hit(cod_.size(), false);
    for (std::size_t v : table_) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

bool SetFunction::surjective() const {
    std::vector<bool> hit(cod_.size(), false);
    for (std::size_t v : table_) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::string SetFunction::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < table_.size(); ++i) {
        if (i) s += ", ";
        s += dom_.label(i) + "->" + cod_.label(table_[i]);
    }
    return s + "}";
}

SetFunction compose(const SetFunction& g, const SetFunction& f) {
    if (!(f.cod() == g.dom())) throw InvalidInput("compose: cod(f) differs from dom(g)");
    std::vector<std::size_t> t(f.dom().size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
    return SetFunction(f.dom(), g.cod(), std::move(t));
}

FunctionEnumerator::FunctionEnumerator(FiniteSet dom, FiniteSet cod)
    : dom_(std::move(dom)), cod_(std::move(cod)), digits_(dom_.size(), 0) {}

void FunctionEnumerator::reset() {
    std::fill(digits_.begin(), digits_.end(), 0);
    started_ = false;
    done_ = false;
}

bool FunctionEnumerator::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (!dom_.empty() && cod_.empty()) {
            done_ = true;
            return false;
        }
    } else {
        std::size_t i = digits_.size();
        while (i > 0) {
            --i;
            if (++digits_[i] < cod_.size()) break;
            digits_[i] = 0;
            if (i == 0) {
                done_ = true;
                return false;
            }
        }
        if (digits_.empty()) {
            done_ = true;
            return false;
        }
    }
    current_ = SetFunction(dom_, cod_, digits_);
    return true;
}

std::vector<SetFunction> enumerate_functions(const FiniteSet& dom, const FiniteSet& cod) {
    std::vector<SetFunction> out;
    FunctionEnumerator e(dom, cod);
    while (e.next()) out.push_back(e.current());
    return out;
}

std::uint64_t count_functions(std::size_t dom_size, std::size_t cod_size, std::uint64_t cap) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < dom_size; ++i) {
        n *= cod_size;
        if (n > cap) throw InvalidInput("function space exceeds the limit of " + std::to_string(cap));
    }
    return n;
}

}  // namespace codensity
