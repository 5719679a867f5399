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

#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace risdof {

// Upper bounds accepted on inputs. They keep every budget product
// (e.g. 2 * m * n, r + m1^2 + m2^2) comfortably inside an int.
inline constexpr int kMaxAntennas = 4096;
inline constexpr int kMaxRisElements = 100'000'000;

// Antenna counts of the two transmitter/receiver pairs.
//
// m1, m2: antennas at Tx1, Tx2.  n1, n2: antennas at Rx1, Rx2.
// `swapped` records that canonicalize() exchanged the user indices so that
// max{m1, n1} >= max{m2, n2}; per-user quantities in reports refer to the
// canonical labelling and must be swapped back for the caller.
struct AntennaConfig {
  int m1 = 1;
  int m2 = 1;
  int n1 = 1;
  int n2 = 1;
  bool swapped = false;

  bool is_canonical() const noexcept;
  friend bool operator==(const AntennaConfig&, const AntennaConfig&) = default;
};

// Number of reflecting elements of the active RIS; r == 0 means no RIS.
struct RisConfig {
  int r = 0;
  friend bool operator==(const RisConfig&, const RisConfig&) = default;
};

enum class CaseLabel { Case1, Case2_1, Case2_2, Case3 };

inline constexpr std::array<CaseLabel, 4> kAllCases = {
    CaseLabel::Case1, CaseLabel::Case2_1, CaseLabel::Case2_2, CaseLabel::Case3};

std::string_view to_string(CaseLabel label) noexcept;
std::optional<CaseLabel> parse_case_label(std::string_view text) noexcept;

// Validates the budget (0 <= r <= kMaxRisElements).
RisConfig make_ris(int r);

// Validates the four counts and relabels users when max{m2, n2} exceeds
// max{m1, n1}. Throws InvalidArgument on counts outside [1, kMaxAntennas].
AntennaConfig canonicalize(int m1, int m2, int n1, int n2);

// Idempotent form: a canonical input is returned unchanged (swapped flag
// included); otherwise the users are exchanged and `swapped` is toggled.
AntennaConfig canonicalize(const AntennaConfig& cfg);

// Whether the row conditions of `label` hold for a canonical configuration.
bool case_applies(const AntennaConfig& cfg, CaseLabel label) noexcept;

// Every applicable label, in enumeration order. Throws CoverageViolation if
// none applies, and InvalidArgument if `cfg` is not canonical.
std::vector<CaseLabel> classify_cases(const AntennaConfig& cfg);

}  // namespace risdof
