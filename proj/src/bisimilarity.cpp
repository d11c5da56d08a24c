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

#include "codensity/bisimilarity.hpp"

namespace codensity {

std::string CheckReport::to_text() const {
    std::string s = check;
    if (!subject.empty()) s += " [" + subject + "]";
    s += pass ? ": pass" : ": FAIL";
    if (advisory) s += " (advisory)";
    if (!search_bound.empty()) s += "  bound: " + search_bound;
    s += "\n";
    for (const auto& [k, v] : witness) s += "  " + k + " = " + v + "\n";
    if (!note.empty()) s += "  note: " + note + "\n";
    return s;
}

std::vector<std::vector<std::string>> language_map(const Coalgebra<Machine>& dfa, std::size_t depth) {
    const FiniteSet& sigma = dfa.functor().alphabet();
    const std::size_t n = dfa.carrier().size();
    std::vector<std::vector<std::string>> out(n);
    // Words of the current length, with the state each one reaches from every start state.
    struct Frontier {
        std::string word;
        std::vector<std::size_t> reached;
    };
    std::vector<Frontier> frontier(1);
    frontier[0].reached.resize(n);
    for (std::size_t x = 0; x < n; ++x) frontier[0].reached[x] = x;
    for (std::size_t len = 0; len <= depth; ++len) {
        for (const auto& w : frontier)
            for (std::size_t x = 0; x < n; ++x)
                if (dfa(w.reached[x]).accept) out[x].push_back(w.word);
        if (len == depth) break;
        std::vector<Frontier> longer;
        longer.reserve(frontier.size() * sigma.size());
        for (const auto& w : frontier) {
            for (std::size_t a = 0; a < sigma.size(); ++a) {
                Frontier v{w.word + sigma.label(a), std::vector<std::size_t>(n)};
                for (std::size_t x = 0; x < n; ++x) v.reached[x] = dfa(w.reached[x]).next[a];
                longer.push_back(std::move(v));
            }
        }
        frontier = std::move(longer);
    }
    return out;
}

}  // namespace codensity
