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

#include "codensity/functors.hpp"

#include <numeric>

namespace codensity {

void require_object_size(const std::string& functor, std::size_t size) {
    if (size > kMaxObjectSize) {
        throw InvalidInput(functor + ": F(X) would have " + std::to_string(size) +
                           " elements, above the cap of " + std::to_string(kMaxObjectSize));
    }
}

namespace {

// Saturating n^k, enough to compare against the object cap.
std::size_t saturating_pow(std::size_t n, std::size_t k) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (n != 0 && out > (kMaxObjectSize + 1) / n + 1) return kMaxObjectSize + 1;
        out *= n;
    }
    return out;
}

}  // namespace

std::size_t Powerset::object_size(std::size_t n) const {
    return n >= 20 ? kMaxObjectSize + 1 : (std::size_t{1} << n);
}

std::vector<Subset> Powerset::elements(const FiniteSet& x) const {
    require_object_size(name(), object_size(x.size()));
    std::vector<Subset> out;
    for (Subset s = 0; s <= full_subset(x.size()); ++s) out.push_back(s);
    return out;
}

Subset Powerset::map(const SetFunction& f, Subset s) const {
    Subset image = 0;
    for (std::size_t i = 0; i < f.dom().size(); ++i)
        if (subset_contains(s, i)) image |= Subset{1} << f(i);
    return image;
}

bool Powerset::valid(Subset s, const FiniteSet& x) const {
    return x.size() <= kMaxTopologyCarrier && (s & ~full_subset(x.size())) == 0;
}

Subdistribution::Subdistribution(std::uint32_t denominator) : denominator_(denominator) {
    if (denominator_ < 1) throw InvalidInput("subdist: denominator bound must be at least 1");
}

std::size_t Subdistribution::object_size(std::size_t n) const {
    // Compositions of at most D into n parts: C(D + n, n).
    std::size_t c = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        c = c * (denominator_ + k) / k;
        if (c > kMaxObjectSize) return kMaxObjectSize + 1;
    }
    return c;
}

namespace {

void compositions(std::size_t i, std::uint32_t left, Subdist& cur, std::vector<Subdist>& out) {
    if (i == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
        cur[i] = k;
        compositions(i + 1, left - k, cur, out);
    }
    cur[i] = 0;
}

}  // namespace

std::vector<Subdist> Subdistribution::elements(const FiniteSet& x) const {
    require_object_size(name(), object_size(x.size()));
    std::vector<Subdist> out;
    Subdist cur(x.size(), 0);
    compositions(0, denominator_, cur, out);
    return out;
}

Subdist Subdistribution::map(const SetFunction& f, const Subdist& p) const {
    Subdist out(f.cod().size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) out[f(i)] += p[i];
    return out;
}

std::string Subdistribution::label(const Subdist& p, const FiniteSet& x) const {
    std::string s = "[";
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (!first) s += ",";
        first = false;
        s += x.label(i) + ":" + format_rational(weight(p, i));
    }
    return s + "]";
}

bool Subdistribution::valid(const Subdist& p, const FiniteSet& x) const {
    if (p.size() != x.size()) return false;
    std::uint64_t total = std::accumulate(p.begin(), p.end(), std::uint64_t{0});
    return total <= denominator_;
}

Rational Subdistribution::mass(const Subdist& p) const {
    std::uint64_t total = std::accumulate(p.begin(), p.end(), std::uint64_t{0});
    return Rational(static_cast<std::int64_t>(total), denominator_);
}

Subdist Subdistribution::dirac(std::size_t n, std::size_t i) const {
    Subdist p(n, 0);
    p.at(i) = denominator_;
    return p;
}

Subdist Subdistribution::from_weights(const std::vector<Rational>& weights) const {
    Subdist p(weights.size(), 0);
    Rational total = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0) throw InvalidInput("subdist: negative weight");
        Rational k = weights[i] * static_cast<std::int64_t>(denominator_);
        if (k.denominator() != 1) {
            throw InvalidInput("subdist: weight " + format_rational(weights[i]) +
                               " has a denominator not dividing " + std::to_string(denominator_));
        }
        p[i] = static_cast<std::uint32_t>(k.numerator());
        total += weights[i];
    }
    if (total > 1) throw InvalidInput("subdist: total mass " + format_rational(total) + " exceeds 1");
    return p;
}

DetLts::DetLts(FiniteSet alphabet) : alphabet_(std::move(alphabet)) {}

std::vector<DetLts::Element> DetLts::elements(const FiniteSet& x) const {
    require_object_size(name(), object_size(x.size()));
    std::vector<Element> out;
    for (std::size_t a = 0; a < alphabet_.size(); ++a)
        for (std::size_t i = 0; i < x.size(); ++i) out.push_back({a, i});
    return out;
}

std::string DetLts::label(const Element& e, const FiniteSet& x) const {
    return "(" + alphabet_.label(e.letter) + "," + x.label(e.next) + ")";
}

bool DetLts::valid(const Element& e, const FiniteSet& x) const {
    return e.letter < alphabet_.size() && e.next < x.size();
}

Machine::Machine(FiniteSet alphabet) : alphabet_(std::move(alphabet)) {}

std::size_t Machine::object_size(std::size_t n) const {
    std::size_t p = saturating_pow(n, alphabet_.size());
    return p > kMaxObjectSize ? kMaxObjectSize + 1 : 2 * p;
}

std::vector<Machine::Element> Machine::elements(const FiniteSet& x) const {
    require_object_size(name(), object_size(x.size()));
    std::vector<Element> out;
    const std::size_t k = alphabet_.size();
    const std::size_t per_flag = saturating_pow(x.size(), k);
    for (int t = 0; t <= 1; ++t) {
        for (std::size_t code = 0; code < per_flag; ++code) {
            Element e{t == 1, std::vector<std::size_t>(k, 0)};
            std::size_t c = code;
            for (std::size_t a = k; a > 0; --a) {
                e.next[a - 1] = c % x.size();
                c /= x.size();
            }
            out.push_back(std::move(e));
        }
    }
    return out;
}

Machine::Element Machine::map(const SetFunction& f, const Element& e) const {
    Element out{e.accept, {}};
    out.next.reserve(e.next.size());
    for (std::size_t s : e.next) out.next.push_back(f(s));
    return out;
}

std::string Machine::label(const Element& e, const FiniteSet& x) const {
    std::string s = std::string("(") + (e.accept ? "1" : "0") + ";";
    for (std::size_t a = 0; a < e.next.size(); ++a) {
        if (a) s += ",";
        s += alphabet_.label(a) + ":" + x.label(e.next[a]);
    }
    return s + ")";
}

bool Machine::valid(const Element& e, const FiniteSet& x) const {
    if (e.next.size() != alphabet_.size()) return false;
    for (std::size_t s : e.next)
        if (s >= x.size()) return false;
    return true;
}

std::size_t Machine::index(const Element& e, const FiniteSet& x) const {
    std::size_t code = 0;
    for (std::size_t s : e.next) code = code * x.size() + s;
    return (e.accept ? saturating_pow(x.size(), alphabet_.size()) : 0) + code;
}

std::vector<std::size_t> IdentityFunctor::elements(const FiniteSet& x) const {
    std::vector<std::size_t> out(x.size());
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

}  // namespace codensity
