// SPDX-License-Identifier: Apache-2.0
//
// risdof: sum-DoF analysis of active-RIS-assisted two-user MIMO interference channels
// Copyright (C) 2026 The risdof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Brute-force reference for the closed forms in dof.hpp.
//
// Nothing here calls into dof.hpp: the search space, the unsimplified
// objectives and the sub-case stream counting are restated from the
// integer programs so that the two routes stay independent.

#pragma once

#include <functional>

#include "risdof/model.hpp"

namespace risdof::oracle {

struct SearchSpace {
  int f1_max = 0;
  int f2_max = 0;
  int cost1 = 1;
  int cost2 = 1;
  int budget = 0;
};

struct Optimum {
  int f1 = 0;
  int f2 = 0;
  int value = 0;

  friend bool operator==(const Optimum&, const Optimum&) = default;
};

using Objective = std::function<int(int f1, int f2)>;

// Largest points allowed in one enumeration.
inline constexpr long kMaxSearchPoints = 1'000'000;

// Enumerates every feasible (f1, f2) with cost1*f1 + cost2*f2 <= budget and
// returns a maximizer. Ties go to the smallest f1, then the smallest f2.
Optimum brute_force_optimum(const SearchSpace& space, const Objective& objective);

// Box and per-unit costs of the case's integer program.
SearchSpace search_space(const AntennaConfig& cfg, RisConfig ris, CaseLabel label);

// Full four-term min-form objective of the case, before simplification.
Objective per_case_objective(const AntennaConfig& cfg, CaseLabel label);

// Sum-DoF recomputed from zero-forcing and interference-decoding space
// counting, dispatched on the case's sub-case conditions and capped by the
// transmit dimension m1 + m2.
int subcase_sumdof(const AntennaConfig& cfg, CaseLabel label, int f1, int f2);

// brute_force_optimum over search_space with per_case_objective.
Optimum case_optimum(const AntennaConfig& cfg, RisConfig ris, CaseLabel label);

}  // namespace risdof::oracle
