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

#include "codensity/checkers.hpp"
#include "codensity/setup.hpp"

namespace codensity {

/// A built-in lifting: a fibration, a functor and a parameter family.
struct CatalogEntry {
    std::string name;
    std::string characterizes;
    Setup setup;
    /// Largest check bound the entry supports; powerset-like functors on Top
    /// grow as 2^|X| and stop at 2.
    std::size_t max_bound = 3;
};

/// Every built-in entry, in a fixed order.
const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> find_entry(const std::string& name);

/// Runs the theorem battery on each entry at min(n, max_bound).
std::vector<BatteryRow> run_battery(const std::vector<CatalogEntry>& entries, std::size_t n);

}  // namespace codensity
