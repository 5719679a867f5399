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

#include "risdof/oracle.hpp"

#include <algorithm>
#include <string>

#include "risdof/errors.hpp"

namespace risdof::oracle {

Optimum brute_force_optimum(const SearchSpace& space, const Objective& objective) {
  if (space.f1_max < 0 || space.f2_max < 0 || space.budget < 0 || space.cost1 < 1 ||
      space.cost2 < 1) {
    throw InvalidArgument("malformed search space");
  }
  const long points = static_cast<long>(space.f1_max + 1) * (space.f2_max + 1);
  if (points > kMaxSearchPoints) {
    throw InvalidArgument("search space too large for enumeration: " + std::to_string(points));
  }
  Optimum best{0, 0, objective(0, 0)};
  for (int f1 = 0; f1 <= space.f1_max; ++f1) {
    for (int f2 = 0; f2 <= space.f2_max; ++f2) {
      const long cost = static_cast<long>(space.cost1) * f1 + static_cast<long>(space.cost2) * f2;
      if (cost > space.budget) break;
      const int value = objective(f1, f2);
      // Strict improvement keeps the lexicographically smallest maximizer.
      if (value > best.value) best = Optimum{f1, f2, value};
    }
  }
  return best;
}

SearchSpace search_space(const AntennaConfig& c, RisConfig ris, CaseLabel label) {
  switch (label) {
    case CaseLabel::Case1:  // rows of H21 (m2 entries each), rows of H12 (m1 each)
      return {c.n1, c.n2, c.m2, c.m1, ris.r};
    case CaseLabel::Case2_1:
    case CaseLabel::Case2_2:  // columns of H21 (n1 each), rows of H12 (m1 each)
      return {c.m2, c.n2, c.n1, c.m1, ris.r};
    case CaseLabel::Case3:  // columns of H21 (n1 each), columns of H12 (n2 each)
      return {c.m2, c.m1, c.n1, c.n2, ris.r};
  }
  return {};
}

Objective per_case_objective(const AntennaConfig& cfg, CaseLabel label) {
  const int m1 = cfg.m1, m2 = cfg.m2, n1 = cfg.n1, n2 = cfg.n2;
  switch (label) {
    case CaseLabel::Case1:
      return [=](int f1, int f2) { return std::min({m2 + f1, m1 + f2, n1 + n2, m1 + m2}); };
    case CaseLabel::Case2_1:
    case CaseLabel::Case2_2:
      return [=](int f1, int f2) { return std::min({n1 + f1, m1 + f2, m1 + m2, n1 + n2}); };
    case CaseLabel::Case3:
      return [=](int f1, int f2) { return std::min({n1 + f1, n2 + f2, m1 + m2, n1 + n2}); };
  }
  return [](int, int) { return 0; };
}

int subcase_sumdof(const AntennaConfig& cfg, CaseLabel label, int f1, int f2) {
  const int m1 = cfg.m1, m2 = cfg.m2, n1 = cfg.n1, n2 = cfg.n2;
  int total = 0;
  switch (label) {
    case CaseLabel::Case1: {
      // Zero-forcing dimensions left once the cancelled rows are gone.
      const int zf1 = m1 - (n2 - f2);
      const int zf2 = m2 - (n1 - f1);
      if (zf1 <= n1 && zf2 <= n2) {
        total = zf1 + zf2 + std::min(n1 + n2 - m1 - f2, n1 + n2 - m2 - f1);
      } else if (zf1 > n1 && zf2 > n2) {
        total = n1 + n2;
      } else if (zf1 <= n1) {
        total = zf1 + n2;
      } else {
        total = n1 + zf2;
      }
      break;
    }
    case CaseLabel::Case2_1:
    case CaseLabel::Case2_2: {
      const int zf1 = m1 - (n2 - f2);
      if (zf1 <= n1 && f1 <= n2) {
        total = zf1 + f1 + std::min(n2 - f1, n1 + n2 - m1 - f2);
      } else if (zf1 > n1 && f1 > n2) {
        total = n1 + n2;
      } else if (zf1 <= n1) {
        total = zf1 + n2;
      } else {
        total = n1 + f1;
      }
      break;
    }
    case CaseLabel::Case3:
      if (f1 <= n2) {
        total = f2 + f1 + std::min(n1 - f2, n2 - f1);
      } else {
        total = f2 + n2;
      }
      break;
  }
  return std::min(total, m1 + m2);
}

Optimum case_optimum(const AntennaConfig& cfg, RisConfig ris, CaseLabel label) {
  return brute_force_optimum(search_space(cfg, ris, label), per_case_objective(cfg, label));
}

}  // namespace risdof::oracle
