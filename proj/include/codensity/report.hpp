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

#include <string>
#include <utility>
#include <vector>

namespace codensity {

/// Outcome of a bounded property check. A failing report always carries a
/// witness, as ordered (name, rendered value) fields.
struct CheckReport {
    std::string check;
    std::string subject;
    bool pass = true;
    /// Set when a verdict rests on an assumption the caller overrode.
    bool advisory = false;
    std::string search_bound;
    std::vector<std::pair<std::string, std::string>> witness;
    std::string note;

    std::string to_text() const;
};

}  // namespace codensity
