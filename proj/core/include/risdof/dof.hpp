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

// Closed-form achievable sum-DoF of the RIS-assisted two-user MIMO IC.
//
// The RIS cancels the first f1 rows/columns of the Tx2->Rx1 cross channel
// and the first f2 rows/columns of the Tx1->Rx2 cross channel. Each case of
// the antenna taxonomy fixes the elimination direction and the per-unit RIS
// cost of f1 and f2; the best (f1, f2) under the budget r has a closed form.
// All arithmetic is exact integer arithmetic.

#pragma once

#include <string_view>
#include <vector>

#include "risdof/model.hpp"

namespace risdof {

enum class ElimMode { Row, Column };

std::string_view to_string(ElimMode mode) noexcept;

struct EliminationPlan {
  int f1 = 0;  // rows/columns of H21 cancelled
  int f2 = 0;  // rows/columns of H12 cancelled
  ElimMode mode1 = ElimMode::Row;
  ElimMode mode2 = ElimMode::Row;
  int cost = 0;  // RIS elements consumed

  friend bool operator==(const EliminationPlan&, const EliminationPlan&) = default;
};

// Per-case limits: f1 in [0, f1_max], f2 in [0, f2_max], cost = cost1*f1 + cost2*f2.
struct PlanLimits {
  int f1_max = 0;
  int f2_max = 0;
  int cost1 = 1;
  int cost2 = 1;
  ElimMode mode1 = ElimMode::Row;
  ElimMode mode2 = ElimMode::Row;
};

PlanLimits plan_limits(const AntennaConfig& cfg, CaseLabel label);

// Builds a plan with its cost; throws InvalidArgument when f1/f2 leave the
// case's box.
EliminationPlan make_plan(const AntennaConfig& cfg, CaseLabel label, int f1, int f2);

// The case objective after the simplifications valid under the case premises:
//   Case1:  min{m2 + f1, m1 + f2, n1 + n2}
//   Case2:  min{n1 + f1, m1 + f2, m1 + m2, n1 + n2}
//   Case3:  min{n1 + f1, n2 + f2, m1 + m2}
int elimination_objective(const AntennaConfig& cfg, CaseLabel label, int f1, int f2);

// RIS budget at which the high-budget branch of `label` starts.
int budget_threshold(const AntennaConfig& cfg, CaseLabel label);

// Sum-DoF of the two-user MIMO IC without RIS:
// min{m1 + m2, n1 + n2, max(m1, n2), max(m2, n1)}.
int baseline_sumdof(const AntennaConfig& cfg);

// Closed-form optimizer (f1*, f2*) of the case's integer program.
// Throws InvalidArgument if `label` does not apply to `cfg`.
EliminationPlan optimal_elimination(const AntennaConfig& cfg, RisConfig ris, CaseLabel label);

// Achievable sum-DoF of `label` evaluated from the closed-form table entry.
int case_sumdof(const AntennaConfig& cfg, RisConfig ris, CaseLabel label);

struct CaseResult {
  CaseLabel label = CaseLabel::Case1;
  EliminationPlan plan;
  int sumdof = 0;
};

struct DofReport {
  AntennaConfig config;  // canonical; config.swapped tells if users were relabelled
  RisConfig ris;
  std::vector<CaseResult> per_case;
  int achievable = 0;
  int baseline = 0;
  int gain = 0;
  bool ris_helps = false;

  // First per-case entry attaining `achievable`.
  const CaseResult& best() const;
};

// Evaluates every applicable case and keeps the maximum. Non-canonical
// configurations are canonicalized first.
DofReport achievable_sumdof(const AntennaConfig& cfg, RisConfig ris);

// Sufficient condition for a strictly positive RIS gain; the disjunction of
// the applicable cases' conditions. Not a necessary condition.
bool ris_help_condition(const AntennaConfig& cfg, RisConfig ris);

// RIS gain for m1 = m2 = m, n1 = n2 = n.
int ris_gain_symmetric(int m, int n, int r);

}  // namespace risdof
