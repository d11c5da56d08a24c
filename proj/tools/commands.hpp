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

#include <optional>
#include <string>
#include <vector>

#include "codensity/document.hpp"

namespace codensity::cli {

/// Exit codes.
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

/// What a command prints: a human-readable table and a machine form.
struct Outcome {
    Json json;
    std::string text;
    int exit_code = kPass;
};

struct Options {
    std::optional<Document> doc;
    std::optional<Rational> epsilon;
    std::size_t max_iter = 10'000;
    std::optional<std::size_t> bound;
    bool trace = false;
    /// Selects elements, coalgebras, morphisms or catalog entries by name.
    std::vector<std::string> names;
    // Ad hoc setup for `check`.
    std::string instance;
    std::string omega;
    std::string functor;
    std::vector<std::string> params;
    std::vector<std::string> alphabet;
    std::uint32_t denominator = 0;
    std::string entry;
};

Outcome cmd_lift(const Options& o);
Outcome cmd_bisim(const Options& o);
/// which: cinjective, fibered, stability or battery.
Outcome cmd_check(const std::string& which, const Options& o);
Outcome cmd_compare(const std::string& oracle, const Options& o);
Outcome cmd_catalog(const Options& o);
Outcome cmd_format(const Options& o);

/// Oracles accepted by cmd_compare.
const std::vector<std::string>& oracle_names();

}  // namespace codensity::cli
