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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace codensity {

/// Raised for any input that violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A finite carrier: an ordered list of distinct atom labels.
///
/// Sets built with the public constructor are sorted lexicographically, so
/// two sets are equal iff they have the same labels. Carriers derived from a
/// structural enumeration (FX, the truth values, a metric grid) are built with
/// `in_order` and keep that order so element indices stay arithmetic.
class FiniteSet {
public:
    FiniteSet();
    explicit FiniteSet(std::vector<std::string> labels);

    static FiniteSet in_order(std::vector<std::string> labels);
    /// {prefix0, prefix1, ...} or {a, b, c, ...} style carriers for brute-force search.
    static FiniteSet letters(std::size_t n, std::string_view alphabet = "abcdefghijklmnop");
    /// The two-point set {bot, top}; index 0 is ⊥, index 1 is ⊤.
    static const FiniteSet& two();

    std::size_t size() const noexcept { return labels_->size(); }
    bool empty() const noexcept { return labels_->empty(); }
    const std::string& label(std::size_t i) const { return (*labels_)[i]; }
    const std::vector<std::string>& labels() const noexcept { return *labels_; }

    std::optional<std::size_t> find(std::string_view label) const;
    /// Index of `label`, throwing InvalidInput when absent.
    std::size_t index_of(std::string_view label) const;

    friend bool operator==(const FiniteSet& a, const FiniteSet& b) noexcept {
        return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
    }

private:
    struct Unchecked {};
    FiniteSet(Unchecked, std::vector<std::string> labels);

    std::shared_ptr<const std::vector<std::string>> labels_;
};

/// A total function between finite sets, stored as an index table.
class SetFunction {
public:
    SetFunction() = default;
    SetFunction(FiniteSet dom, FiniteSet cod, std::vector<std::size_t> table);

    static SetFunction identity(const FiniteSet& x);
    static SetFunction constant(const FiniteSet& dom, const FiniteSet& cod, std::size_t value);
    /// Build from (domain label -> codomain label) pairs; every domain label must appear once.
    static SetFunction from_labels(const FiniteSet& dom, const FiniteSet& cod,
                                   const std::vector<std::pair<std::string, std::string>>& graph);

    const FiniteSet& dom() const noexcept { return dom_; }
    const FiniteSet& cod() const noexcept { return cod_; }
    const std::vector<std::size_t>& table() const noexcept { return table_; }
    std::size_t operator()(std::size_t x) const { return table_[x]; }

    bool injective() const;
    bool surjective() const;
    std::string to_string() const;

    friend bool operator==(const SetFunction& a, const SetFunction& b) {
        return a.table_ == b.table_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
    }

private:
    FiniteSet dom_;
    FiniteSet cod_;
    std::vector<std::size_t> table_;
};

/// g ∘ f. Throws InvalidInput unless cod(f) = dom(g).
SetFunction compose(const SetFunction& g, const SetFunction& f);

/// Restartable stream over all |Y|^|X| total functions X → Y, in
/// lexicographic order of their tables (the first domain element varies slowest).
class FunctionEnumerator {
public:
    FunctionEnumerator(FiniteSet dom, FiniteSet cod);

    /// Advance to the next function; returns false once exhausted.
    bool next();
    const SetFunction& current() const { return current_; }
    void reset();

private:
    FiniteSet dom_;
    FiniteSet cod_;
    std::vector<std::size_t> digits_;
    SetFunction current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<SetFunction> enumerate_functions(const FiniteSet& dom, const FiniteSet& cod);

/// |Y|^|X| with 0^0 = 1; throws InvalidInput on overflow past `cap`.
std::uint64_t count_functions(std::size_t dom_size, std::size_t cod_size,
                              std::uint64_t cap = std::uint64_t{1} << 40);

}  // namespace codensity
