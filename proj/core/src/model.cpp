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

#include "risdof/model.hpp"

#include <algorithm>
#include <string>

#include "risdof/errors.hpp"

namespace risdof {

namespace {

void check_count(int value, const char* name) {
  if (value < 1 || value > kMaxAntennas) {
    throw InvalidArgument(std::string(name) + " must lie in [1, " +
                          std::to_string(kMaxAntennas) + "], got " +
                          std::to_string(value));
  }
}

}  // namespace

bool AntennaConfig::is_canonical() const noexcept {
  return std::max(m1, n1) >= std::max(m2, n2);
}

std::string_view to_string(CaseLabel label) noexcept {
  switch (label) {
    case CaseLabel::Case1:
      return "Case1";
    case CaseLabel::Case2_1:
      return "Case2_1";
    case CaseLabel::Case2_2:
      return "Case2_2";
    case CaseLabel::Case3:
      return "Case3";
  }
  return "?";
}

std::optional<CaseLabel> parse_case_label(std::string_view text) noexcept {
  for (CaseLabel label : kAllCases) {
    if (to_string(label) == text) return label;
  }
  return std::nullopt;
}

RisConfig make_ris(int r) {
  if (r < 0 || r > kMaxRisElements) {
    throw InvalidArgument("RIS element count must lie in [0, " +
                          std::to_string(kMaxRisElements) + "], got " +
                          std::to_string(r));
  }
  return RisConfig{r};
}

AntennaConfig canonicalize(int m1, int m2, int n1, int n2) {
  return canonicalize(AntennaConfig{m1, m2, n1, n2, false});
}

AntennaConfig canonicalize(const AntennaConfig& cfg) {
  check_count(cfg.m1, "m1");
  check_count(cfg.m2, "m2");
  check_count(cfg.n1, "n1");
  check_count(cfg.n2, "n2");
  if (cfg.is_canonical()) return cfg;
  return AntennaConfig{cfg.m2, cfg.m1, cfg.n2, cfg.n1, !cfg.swapped};
}

bool case_applies(const AntennaConfig& c, CaseLabel label) noexcept {
  switch (label) {
    case CaseLabel::Case1:
      return c.m1 >= std::max({c.m2, c.n1, c.n2}) && c.m2 >= c.n1;
    case CaseLabel::Case2_1:
      return c.m1 >= c.n2 && c.n1 >= c.m2 && c.m1 >= c.n1;
    case CaseLabel::Case2_2:
      return c.m1 >= c.n2 && c.n1 >= c.m2 && c.n1 > c.m1;
    case CaseLabel::Case3:
      return c.n1 >= std::max({c.m1, c.m2, c.n2}) && c.n2 >= c.m1;
  }
  return false;
}

std::vector<CaseLabel> classify_cases(const AntennaConfig& cfg) {
  if (!cfg.is_canonical()) {
    throw InvalidArgument("classify_cases expects a canonical configuration");
  }
  std::vector<CaseLabel> labels;
  for (CaseLabel label : kAllCases) {
    if (case_applies(cfg, label)) labels.push_back(label);
  }
  if (labels.empty()) {
    throw CoverageViolation("no case applies to (" + std::to_string(cfg.m1) +
                            ", " + std::to_string(cfg.m2) + ", " +
                            std::to_string(cfg.n1) + ", " +
                            std::to_string(cfg.n2) + ")");
  }
  return labels;
}

}  // namespace risdof
