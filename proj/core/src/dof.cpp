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

#include "risdof/dof.hpp"

#include <algorithm>
#include <string>

#include "risdof/errors.hpp"

namespace risdof {

namespace {

// Floor of num / den for den > 0, exact for negative numerators too.
constexpr int floor_div(int num, int den) noexcept {
  const int q = num / den;
  return (num % den != 0 && num < 0) ? q - 1 : q;
}

void require_applies(const AntennaConfig& cfg, CaseLabel label) {
  if (!cfg.is_canonical()) {
    throw InvalidArgument("configuration is not canonical");
  }
  if (!case_applies(cfg, label)) {
    throw InvalidArgument(std::string(to_string(label)) +
                          " does not apply to (" + std::to_string(cfg.m1) +
                          ", " + std::to_string(cfg.m2) + ", " +
                          std::to_string(cfg.n1) + ", " +
                          std::to_string(cfg.n2) + ")");
  }
}

void require_budget(RisConfig ris) {
  if (ris.r < 0 || ris.r > kMaxRisElements) {
    throw InvalidArgument("RIS element count out of range: " + std::to_string(ris.r));
  }
}

// High-budget branch. For bottleneck terms a + f1 and b + f2 with unit costs
// a and b, equalizing the terms while spending the budget r gives
//   f1 = (r - a*b + b^2) / (a + b),  f2 = (r - a*b + a^2) / (a + b).
int balanced_count(int r, int x, int y, int sq) { return floor_div(r - x * y + sq, x + y); }

// The common value of the balanced terms, floor((r + x^2 + y^2) / (x + y)).
int balanced_value(int r, int x, int y) { return floor_div(r + x * x + y * y, x + y); }

}  // namespace

std::string_view to_string(ElimMode mode) noexcept {
  return mode == ElimMode::Row ? "Row" : "Column";
}

PlanLimits plan_limits(const AntennaConfig& c, CaseLabel label) {
  switch (label) {
    case CaseLabel::Case1:
      return {c.n1, c.n2, c.m2, c.m1, ElimMode::Row, ElimMode::Row};
    case CaseLabel::Case2_1:
    case CaseLabel::Case2_2:
      return {c.m2, c.n2, c.n1, c.m1, ElimMode::Column, ElimMode::Row};
    case CaseLabel::Case3:
      return {c.m2, c.m1, c.n1, c.n2, ElimMode::Column, ElimMode::Column};
  }
  return {};
}

EliminationPlan make_plan(const AntennaConfig& cfg, CaseLabel label, int f1, int f2) {
  const PlanLimits lim = plan_limits(cfg, label);
  if (f1 < 0 || f1 > lim.f1_max || f2 < 0 || f2 > lim.f2_max) {
    throw InvalidArgument("elimination counts (" + std::to_string(f1) + ", " +
                          std::to_string(f2) + ") outside the box of " +
                          std::string(to_string(label)));
  }
  return EliminationPlan{f1, f2, lim.mode1, lim.mode2, lim.cost1 * f1 + lim.cost2 * f2};
}

int elimination_objective(const AntennaConfig& c, CaseLabel label, int f1, int f2) {
  switch (label) {
    case CaseLabel::Case1:
      return std::min({c.m2 + f1, c.m1 + f2, c.n1 + c.n2});
    case CaseLabel::Case2_1:
    case CaseLabel::Case2_2:
      return std::min({c.n1 + f1, c.m1 + f2, c.m1 + c.m2, c.n1 + c.n2});
    case CaseLabel::Case3:
      return std::min({c.n1 + f1, c.n2 + f2, c.m1 + c.m2});
  }
  return 0;
}

int budget_threshold(const AntennaConfig& c, CaseLabel label) {
  switch (label) {
    case CaseLabel::Case1:
      return c.m1 * c.m2 - c.m2 * c.m2;
    case CaseLabel::Case2_1:
      return c.m1 * c.n1 - c.n1 * c.n1;
    case CaseLabel::Case2_2:
      return c.m1 * c.n1 - c.m1 * c.m1;
    case CaseLabel::Case3:
      return c.n1 * c.n2 - c.n2 * c.n2;
  }
  return 0;
}

int baseline_sumdof(const AntennaConfig& c) {
  return std::min({c.m1 + c.m2, c.n1 + c.n2, std::max(c.m1, c.n2), std::max(c.m2, c.n1)});
}

EliminationPlan optimal_elimination(const AntennaConfig& c, RisConfig ris, CaseLabel label) {
  require_applies(c, label);
  require_budget(ris);
  const int r = ris.r;
  const bool high = r >= budget_threshold(c, label);
  int f1 = 0;
  int f2 = 0;
  switch (label) {
    case CaseLabel::Case1:
      if (high) {
        f1 = std::min(balanced_count(r, c.m1, c.m2, c.m1 * c.m1), c.n1);
        f2 = std::min(balanced_count(r, c.m1, c.m2, c.m2 * c.m2), c.n2);
      } else {
        f1 = std::min(r / c.m2, c.n1);
      }
      break;
    case CaseLabel::Case2_1:
    case CaseLabel::Case2_2:
      if (high) {
        f1 = std::min(balanced_count(r, c.m1, c.n1, c.m1 * c.m1), c.m2);
        f2 = std::min(balanced_count(r, c.m1, c.n1, c.n1 * c.n1), c.n2);
      } else if (label == CaseLabel::Case2_1) {
        f1 = std::min(r / c.n1, c.m2);
      } else {
        f2 = std::min(r / c.m1, c.n2);
      }
      break;
    case CaseLabel::Case3:
      if (high) {
        f1 = std::min(balanced_count(r, c.n1, c.n2, c.n2 * c.n2), c.m2);
        f2 = std::min(balanced_count(r, c.n1, c.n2, c.n1 * c.n1), c.m1);
      } else {
        f2 = std::min(r / c.n2, c.m1);
      }
      break;
  }
  return make_plan(c, label, f1, f2);
}

int case_sumdof(const AntennaConfig& c, RisConfig ris, CaseLabel label) {
  require_applies(c, label);
  require_budget(ris);
  const int r = ris.r;
  const bool high = r >= budget_threshold(c, label);
  switch (label) {
    case CaseLabel::Case1:
      return std::min({high ? balanced_value(r, c.m1, c.m2) : c.m2 + r / c.m2,
                       c.m2 + c.n1, c.n1 + c.n2});
    case CaseLabel::Case2_1:
      return std::min({high ? balanced_value(r, c.m1, c.n1) : c.n1 + r / c.n1,
                       c.m2 + c.n1, c.n1 + c.n2});
    case CaseLabel::Case2_2:
      return std::min({high ? balanced_value(r, c.m1, c.n1) : c.m1 + r / c.m1,
                       c.m1 + c.n2, c.m1 + c.m2});
    case CaseLabel::Case3:
      return std::min({high ? balanced_value(r, c.n1, c.n2) : c.n2 + r / c.n2,
                       c.m1 + c.n2, c.m1 + c.m2});
  }
  return 0;
}

const CaseResult& DofReport::best() const {
  const auto it = std::find_if(per_case.begin(), per_case.end(),
                               [this](const CaseResult& cr) { return cr.sumdof == achievable; });
  if (it == per_case.end()) throw std::logic_error("DofReport has no case attaining its maximum");
  return *it;
}

DofReport achievable_sumdof(const AntennaConfig& cfg, RisConfig ris) {
  require_budget(ris);
  DofReport report;
  report.config = canonicalize(cfg);
  report.ris = ris;
  for (CaseLabel label : classify_cases(report.config)) {
    CaseResult cr;
    cr.label = label;
    cr.plan = optimal_elimination(report.config, ris, label);
    cr.sumdof = case_sumdof(report.config, ris, label);
    report.achievable = std::max(report.achievable, cr.sumdof);
    report.per_case.push_back(cr);
  }
  report.baseline = baseline_sumdof(report.config);
  report.gain = report.achievable - report.baseline;
  report.ris_helps = ris_help_condition(report.config, ris);
  return report;
}

bool ris_help_condition(const AntennaConfig& cfg, RisConfig ris) {
  require_budget(ris);
  const AntennaConfig c = canonicalize(cfg);
  const int r = ris.r;
  for (CaseLabel label : classify_cases(c)) {
    bool holds = false;
    switch (label) {
      case CaseLabel::Case1:
        holds = r >= c.m2 + (c.m1 == c.m2 ? c.m2 : 0) && c.m2 < c.n1 + c.n2;
        break;
      case CaseLabel::Case2_1:
        holds = r >= c.n1 + (c.m1 == c.n1 ? c.n1 : 0);
        break;
      case CaseLabel::Case2_2:
        holds = r >= c.m1;
        break;
      case CaseLabel::Case3:
        holds = r >= c.n2 + (c.n1 == c.n2 ? c.n2 : 0) && c.n2 < c.m1 + c.m2;
        break;
    }
    if (holds) return true;
  }
  return false;
}

int ris_gain_symmetric(int m, int n, int r) {
  if (m < 1 || n < 1 || m > kMaxAntennas || n > kMaxAntennas) {
    throw InvalidArgument("symmetric antenna counts must lie in [1, " +
                          std::to_string(kMaxAntennas) + "]");
  }
  require_budget(RisConfig{r});
  if (n <= m && m < 2 * n) return std::min(r / (2 * m), 2 * n - m);
  if (m < n && n < 2 * m) return std::min(r / (2 * n), 2 * m - n);
  return 0;
}

}  // namespace risdof
