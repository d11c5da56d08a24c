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

// Closed-form characterizations and classical algorithms, written without
// the lifting engine so they can serve as its ground truth.

#include "codensity/bisimilarity.hpp"
#include "codensity/pseudometric.hpp"
#include "codensity/relation.hpp"
#include "codensity/topology.hpp"

namespace codensity::oracle {

/// Hausdorff distance on 𝒫X, with sup ∅ = 0 and inf ∅ = ⊤.
Pseudometric hausdorff(const Pseudometric& d);

/// max |Σ f·p − Σ f·q| over nonexpansive f : X → {0, ε, …, ⊤}, by brute force.
Rational kantorovich_grid(const Pseudometric& d, const Subdistribution& dist, const Subdist& p, const Subdist& q,
                          const Rational& step);
/// kantorovich_grid for every pair of F(X) under the given subdistribution functor.
Pseudometric kantorovich_grid_matrix(const Pseudometric& d, const Subdistribution& dist, const Rational& step);

/// S ≤ T iff ∀x∈S ∃y∈T. x ≤ y.
Relation lower_preorder(const Relation& order);
/// S ≤ T iff ∀y∈T ∃x∈S. x ≤ y.
Relation upper_preorder(const Relation& order);
/// Intersection of the lower and upper preorders.
Relation convex_preorder(const Relation& order);

/// Coarsest relational bisimulation of a Kripke frame, by partition refinement.
Relation kripke_bisimilarity(const Coalgebra<Powerset>& frame);
/// Coarsest equivalence whose related states give equal mass to every class.
Relation prob_bisimilarity(const Coalgebra<Subdistribution>& chain);

/// Coarsest topology on 𝒫X making {V | V∩U ≠ ∅} open for each open U.
Topology vietoris_lower(const Topology& t);
/// Coarsest topology on 𝒫X making {V | V ⊆ U} open for each open U.
Topology vietoris_upper(const Topology& t);
/// Generated by both subbases.
Topology vietoris_full(const Topology& t);

/// Closure of a family under binary ∪ and ∩ together with ∅ and the carrier,
/// by naive saturation.
Topology saturate(const FiniteSet& base, std::vector<Subset> family);

}  // namespace codensity::oracle
