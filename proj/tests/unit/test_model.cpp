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

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "risdof/errors.hpp"
#include "risdof/model.hpp"
#include "support/reference.hpp"

using namespace risdof;

namespace {

std::vector<CaseLabel> labels(int m1, int m2, int n1, int n2) {
  return classify_cases(canonicalize(m1, m2, n1, n2));
}

}  // namespace

TEST_CASE("canonicalize keeps canonical inputs") {
  const auto c = canonicalize(6, 4, 3, 3);
  CHECK(c == AntennaConfig{6, 4, 3, 3, false});
  CHECK(canonicalize(4, 4, 4, 4) == AntennaConfig{4, 4, 4, 4, false});
}

TEST_CASE("canonicalize swaps users when the second pair is larger") {
  CHECK(canonicalize(2, 5, 3, 6) == AntennaConfig{5, 2, 6, 3, true});
}

TEST_CASE("canonicalize rejects counts outside the valid range") {
  CHECK_THROWS_AS(canonicalize(0, 1, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(canonicalize(1, -3, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(canonicalize(1, 1, kMaxAntennas + 1, 1), InvalidArgument);
  CHECK_NOTHROW(canonicalize(1, 1, 1, kMaxAntennas));
}

TEST_CASE("make_ris validates the budget") {
  CHECK(make_ris(0).r == 0);
  CHECK(make_ris(kMaxRisElements).r == kMaxRisElements);
  CHECK_THROWS_AS(make_ris(-1), InvalidArgument);
  CHECK_THROWS_AS(make_ris(kMaxRisElements + 1), InvalidArgument);
}

TEST_CASE("case labels round-trip through text") {
  for (CaseLabel label : kAllCases) {
    CHECK(parse_case_label(to_string(label)) == label);
  }
  CHECK_FALSE(parse_case_label("Case2").has_value());
}

TEST_CASE("classify_cases on fixed configurations") {
  using V = std::vector<CaseLabel>;
  CHECK(labels(6, 4, 3, 3) == V{CaseLabel::Case1});
  CHECK(labels(4, 3, 5, 2) == V{CaseLabel::Case2_2});
  CHECK(labels(3, 3, 5, 4) == V{CaseLabel::Case3});
  CHECK(labels(5, 3, 3, 3) == V{CaseLabel::Case1, CaseLabel::Case2_1});
  CHECK(labels(10, 10, 10, 10) == V{CaseLabel::Case1, CaseLabel::Case2_1, CaseLabel::Case3});
}

TEST_CASE("classify_cases rejects non-canonical input") {
  CHECK_THROWS_AS(classify_cases(AntennaConfig{2, 5, 3, 6, false}), InvalidArgument);
}

TEST_CASE("property: canonicalize is idempotent and preserves the pairs") {
  for (int m1 = 1; m1 <= 7; ++m1)
    for (int m2 = 1; m2 <= 7; ++m2)
      for (int n1 = 1; n1 <= 7; ++n1)
        for (int n2 = 1; n2 <= 7; ++n2) {
          const auto c = canonicalize(m1, m2, n1, n2);
          REQUIRE(c.is_canonical());
          CHECK(canonicalize(c) == c);
          if (c.swapped) {
            CHECK(c == AntennaConfig{m2, m1, n2, n1, true});
          } else {
            CHECK(c == AntennaConfig{m1, m2, n1, n2, false});
          }
        }
}

TEST_CASE("property: classification covers [1,12]^4 and matches the row conditions") {
  for (int m1 = 1; m1 <= 12; ++m1)
    for (int m2 = 1; m2 <= 12; ++m2)
      for (int n1 = 1; n1 <= 12; ++n1)
        for (int n2 = 1; n2 <= 12; ++n2) {
          const auto c = canonicalize(m1, m2, n1, n2);
          const auto got = classify_cases(c);
          REQUIRE_FALSE(got.empty());
          std::vector<CaseLabel> want;
          for (CaseLabel label : kAllCases) {
            if (testing::ref_applies(c.m1, c.m2, c.n1, c.n2, label)) want.push_back(label);
          }
          CHECK(got == want);
          // The pre-swap order does not matter. With max(m1, n1) == max(m2, n2)
          // both orders are canonical and are distinct configurations.
          if (std::max(m1, n1) != std::max(m2, n2)) {
            CHECK(classify_cases(canonicalize(m2, m1, n2, n1)) == got);
          }
        }
}
