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

#include <complex>
#include <random>

#include <json.hpp>

#include "risdof/dof.hpp"
#include "risdof/errors.hpp"
#include "risdof/scheme.hpp"
#include "support/reference.hpp"

using namespace risdof;

namespace {

AntennaConfig cfg(int m1, int m2, int n1, int n2) { return canonicalize(m1, m2, n1, n2); }

CVector random_vector(Eigen::Index n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal;
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = {normal(rng), normal(rng)};
  return v;
}

// Entries of g diag(psi) d that a cancellation row should reproduce, read
// off the product itself in the requested order.
CVector reflected_entries(const CMatrix& g, const CMatrix& d, const CVector& psi, int f,
                          ElimMode mode) {
  const CMatrix product = g * psi.asDiagonal() * d;
  const Eigen::Index per_unit = mode == ElimMode::Row ? product.cols() : product.rows();
  CVector out(f * per_unit);
  for (int k = 0; k < f; ++k)
    for (Eigen::Index i = 0; i < per_unit; ++i)
      out(k * per_unit + i) = mode == ElimMode::Row ? product(k, i) : product(i, k);
  return out;
}

struct Sample {
  AntennaConfig config;
  int r;
  CaseLabel label;
};

// At least one configuration per label, budgets from low to saturating.
const Sample kSamples[] = {
    {cfg(6, 4, 3, 3), 8, CaseLabel::Case1},     {cfg(5, 3, 3, 4), 10, CaseLabel::Case1},
    {cfg(8, 6, 5, 4), 30, CaseLabel::Case1},    {cfg(5, 3, 3, 3), 12, CaseLabel::Case2_1},
    {cfg(7, 3, 5, 4), 25, CaseLabel::Case2_1},  {cfg(4, 3, 5, 2), 9, CaseLabel::Case2_2},
    {cfg(4, 4, 6, 3), 20, CaseLabel::Case2_2},  {cfg(3, 3, 5, 4), 12, CaseLabel::Case3},
    {cfg(3, 2, 6, 4), 20, CaseLabel::Case3},    {cfg(4, 4, 4, 4), 32, CaseLabel::Case3},
};

}  // namespace

TEST_CASE("generate_channels is deterministic and full rank") {
  const auto a = generate_channels(cfg(6, 4, 3, 3), RisConfig{8}, 1);
  const auto b = generate_channels(cfg(6, 4, 3, 3), RisConfig{8}, 1);
  CHECK(a.h11 == b.h11);
  CHECK(a.h21 == b.h21);
  CHECK(a.d2 == b.d2);
  CHECK(a.g2 == b.g2);
  for (const CMatrix* m : {&a.h11, &a.h21, &a.h12, &a.h22, &a.d1, &a.d2, &a.g1, &a.g2}) {
    CHECK(numeric_rank(*m) == std::min(m->rows(), m->cols()));
  }
  CHECK(a.h21.rows() == 3);
  CHECK(a.h21.cols() == 4);
  CHECK(a.h12.rows() == 3);
  CHECK(a.h12.cols() == 6);
  CHECK(a.d1.rows() == 8);
  CHECK(a.g1.cols() == 8);

  const auto c = generate_channels(cfg(6, 4, 3, 3), RisConfig{8}, 2);
  CHECK(a.h11 != c.h11);
}

TEST_CASE("generate_channels without RIS leaves the RIS links empty") {
  const auto ch = generate_channels(cfg(6, 4, 3, 3), RisConfig{0}, 3);
  CHECK(ch.d1.size() == 0);
  CHECK(ch.d2.size() == 0);
  CHECK(ch.g1.size() == 0);
  CHECK(ch.g2.size() == 0);
}

TEST_CASE("build_gamma row counts") {
  const auto c = cfg(6, 4, 3, 3);
  const auto ch = generate_channels(c, RisConfig{20}, 5);
  CHECK(build_gamma(ch, make_plan(c, CaseLabel::Case1, 0, 0)).rows() == 0);
  const auto sys = build_gamma(ch, make_plan(c, CaseLabel::Case1, 1, 0));
  CHECK(sys.gamma1.rows() == 4);
  CHECK(sys.gamma2.rows() == 0);
  CHECK(sys.rhs.size() == 4);

  const auto c2 = cfg(7, 3, 5, 4);
  const auto ch2 = generate_channels(c2, RisConfig{40}, 5);
  const auto sys2 = build_gamma(ch2, make_plan(c2, CaseLabel::Case2_1, 2, 1));
  CHECK(sys2.gamma1.rows() == 2 * 5);
  CHECK(sys2.gamma2.rows() == 1 * 7);

  const auto c3 = cfg(3, 2, 6, 4);
  const auto ch3 = generate_channels(c3, RisConfig{40}, 5);
  const auto sys3 = build_gamma(ch3, make_plan(c3, CaseLabel::Case3, 1, 2));
  CHECK(sys3.gamma1.rows() == 1 * 6);
  CHECK(sys3.gamma2.rows() == 2 * 4);
}

TEST_CASE("build_gamma entries follow the channel products") {
  const auto c = cfg(6, 4, 3, 3);
  const auto ch = generate_channels(c, RisConfig{12}, 9);
  const auto sys = build_gamma(ch, make_plan(c, CaseLabel::Case1, 2, 1));
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 12; ++j) {
        CHECK(std::abs(sys.gamma1(k * 4 + i, j) - ch.g1(k, j) * ch.d2(j, i)) == 0.0);
      }
  for (int i = 0; i < 4; ++i) CHECK(sys.rhs(i) == -ch.h21(0, i));
}

TEST_CASE("property: Gamma psi reproduces the reflected entries in every mode") {
  for (const auto& s : kSamples) {
    const auto ch = generate_channels(s.config, RisConfig{s.r}, 11);
    const auto lim = plan_limits(s.config, s.label);
    const auto plan = make_plan(s.config, s.label, lim.f1_max, lim.f2_max);
    const auto sys = build_gamma(ch, plan);
    const CVector psi = random_vector(s.r, 4);
    const CVector want1 = reflected_entries(ch.g1, ch.d2, psi, plan.f1, plan.mode1);
    const CVector want2 = reflected_entries(ch.g2, ch.d1, psi, plan.f2, plan.mode2);
    CHECK((sys.gamma1 * psi - want1).norm() <= 1e-12 * (1.0 + want1.norm()));
    CHECK((sys.gamma2 * psi - want2).norm() <= 1e-12 * (1.0 + want2.norm()));
  }
}

TEST_CASE("solve_psi on an empty system returns the zero vector") {
  GammaSystem sys;
  sys.gamma1.resize(0, 5);
  sys.gamma2.resize(0, 5);
  const auto psi = solve_psi(sys, RisConfig{5});
  CHECK(psi.psi.size() == 5);
  CHECK(psi.psi.norm() == 0.0);
}

TEST_CASE("solve_psi rejects an over-budget system") {
  const auto c = cfg(6, 4, 3, 3);
  const auto ch = generate_channels(c, RisConfig{6}, 1);
  const auto sys = build_gamma(ch, make_plan(c, CaseLabel::Case1, 2, 0));
  CHECK_THROWS_AS(solve_psi(sys, RisConfig{6}), InfeasibleBudget);
}

TEST_CASE("solve_psi on a square system matches an LU solve") {
  const auto c = cfg(6, 4, 3, 3);
  const auto ch = generate_channels(c, RisConfig{8}, 21);
  const auto sys = build_gamma(ch, make_plan(c, CaseLabel::Case1, 2, 0));
  REQUIRE(sys.rows() == 8);
  const auto psi = solve_psi(sys, RisConfig{8});
  const CVector lu = sys.stacked().fullPivLu().solve(sys.rhs);
  CHECK((psi.psi - lu).norm() <= 1e-9 * (1.0 + lu.norm()));
  CHECK(psi.residual <= 1e-9 * (1.0 + psi.rhs_norm));
}

TEST_CASE("solve_psi returns the minimum-norm solution") {
  const auto c = cfg(6, 4, 3, 3);
  const auto ch = generate_channels(c, RisConfig{15}, 22);
  const auto sys = build_gamma(ch, make_plan(c, CaseLabel::Case1, 1, 1));
  const auto psi = solve_psi(sys, RisConfig{15});
  const CVector ref = sys.stacked().completeOrthogonalDecomposition().solve(sys.rhs);
  CHECK((psi.psi - ref).norm() <= 1e-9 * (1.0 + ref.norm()));
}

TEST_CASE("solve_psi flags a rank-deficient system") {
  GammaSystem sys;
  sys.gamma1 = CMatrix::Zero(2, 4);
  sys.gamma1.row(0) = random_vector(4, 1).transpose();
  sys.gamma1.row(1) = sys.gamma1.row(0);
  sys.gamma2.resize(0, 4);
  sys.rhs = random_vector(2, 2);
  CHECK_THROWS_AS(solve_psi(sys, RisConfig{4}), IllConditioned);
}

TEST_CASE("effective_channels with a zero RIS vector are the direct channels") {
  const auto c = cfg(6, 4, 3, 3);
  const auto ch = generate_channels(c, RisConfig{8}, 4);
  RisVector psi;
  psi.psi = CVector::Zero(8);
  const auto eff = effective_channels(ch, psi, make_plan(c, CaseLabel::Case1, 0, 0));
  CHECK(eff.hbar11 == ch.h11);
  CHECK(eff.hbar21 == ch.h21);
  CHECK(eff.hbar12 == ch.h12);
  CHECK(eff.hbar22 == ch.h22);
}

TEST_CASE("effective_channels rejects a RIS vector that misses the zero block") {
  const auto c = cfg(6, 4, 3, 3);
  const auto ch = generate_channels(c, RisConfig{8}, 4);
  RisVector psi;
  psi.psi = random_vector(8, 3);
  CHECK_THROWS_AS(effective_channels(ch, psi, make_plan(c, CaseLabel::Case1, 1, 0)),
                  ZeroBlockViolation);
}

TEST_CASE("synthesize examples") {
  const auto inst = synthesize(cfg(6, 4, 3, 3), RisConfig{8}, CaseLabel::Case1, 7);
  CHECK(inst.plan.cost <= 8);
  CHECK(diagnose(inst).all_ok());

  const auto none = synthesize(cfg(6, 4, 3, 3), RisConfig{0}, CaseLabel::Case1, 7);
  CHECK(none.psi.psi.size() == 0);
  CHECK(none.effective.hbar21 == none.channels.h21);

  const auto full = synthesize(cfg(10, 10, 10, 10), RisConfig{200}, CaseLabel::Case1, 1);
  CHECK(full.plan.f1 == 10);
  CHECK(full.plan.f2 == 10);
  CHECK(full.effective.hbar21.cwiseAbs().maxCoeff() <= 1e-9 * (1.0 + full.channels.h21.norm()));
  CHECK(full.effective.hbar12.cwiseAbs().maxCoeff() <= 1e-9 * (1.0 + full.channels.h12.norm()));
}

TEST_CASE("synthesize_with_plan rejects an unaffordable plan") {
  const auto c = cfg(6, 4, 3, 3);
  CHECK_THROWS_AS(synthesize_with_plan(c, RisConfig{7}, CaseLabel::Case1,
                                       make_plan(c, CaseLabel::Case1, 2, 0), 1),
                  InfeasibleBudget);
}

TEST_CASE("Case-3 single column elimination drops the cross rank by one") {
  const auto c = cfg(3, 3, 5, 4);
  const auto inst = synthesize_with_plan(c, RisConfig{12}, CaseLabel::Case3,
                                         make_plan(c, CaseLabel::Case3, 1, 0), 3);
  CHECK(numeric_rank(inst.effective.hbar21) == 3 - 1);
}

TEST_CASE("diagnose fails on an unreachable tolerance") {
  const auto inst = synthesize(cfg(6, 4, 3, 3), RisConfig{8}, CaseLabel::Case1, 7);
  Tolerances tight;
  tight.residual = tight.zero_block = 1e-30;
  const auto d = diagnose(inst, tight);
  CHECK_FALSE(d.residual_ok);
  CHECK_FALSE(d.all_ok());
}

TEST_CASE("property: seeded instances cancel, keep rank and stay generic") {
  for (const auto& s : kSamples) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto inst = synthesize(s.config, RisConfig{s.r}, s.label, seed);
      const auto d = diagnose(inst);
      REQUIRE(d.residual_ok);
      REQUIRE(d.zero_blocks_ok);
      REQUIRE(d.rank21 == d.expected_rank21);
      REQUIRE(d.rank12 == d.expected_rank12);
      REQUIRE(d.residual_blocks_full_rank);
      REQUIRE(d.direct_links_full_rank);
    }
  }
}

TEST_CASE("property: every affordable optimal plan on [1,6]^4 is solvable") {
  int resampled = 0;
  for (const auto& c : testing::canonical_grid(1, 6)) {
    for (CaseLabel label : classify_cases(c)) {
      for (int r = 0; r <= 40; r += 2) {
        const auto inst = synthesize(c, RisConfig{r}, label, 1000 + r);
        REQUIRE(inst.attempts <= 2);
        resampled += inst.attempts - 1;
      }
    }
  }
  MESSAGE("instances that needed a second draw: " << resampled);
}

TEST_CASE("instance_to_json carries the instance") {
  const auto inst = synthesize(cfg(6, 4, 3, 3), RisConfig{8}, CaseLabel::Case1, 7);
  const auto doc = nlohmann::json::parse(instance_to_json(inst));
  CHECK(doc["r"] == 8);
  CHECK(doc["case"] == "Case1");
  CHECK(doc["plan"]["f1"] == inst.plan.f1);
  CHECK(doc["psi"].size() == 8);
  CHECK(doc["psi"][0][0].get<double>() == inst.psi.psi(0).real());
  CHECK(doc["channels"]["h21"].size() == 3);
  CHECK(doc["channels"]["h21"][0].size() == 4);
}

TEST_CASE("numeric_rank measures a cancelled matrix against its reference scale") {
  CMatrix tiny = CMatrix::Identity(3, 3) * 1e-15;
  CHECK(numeric_rank(tiny) == 3);
  CHECK(numeric_rank(tiny, 1e-8, 1.0) == 0);
  CHECK(numeric_rank(CMatrix::Zero(2, 2)) == 0);

  const auto c = cfg(4, 4, 4, 4);
  const auto inst = synthesize(c, RisConfig{32}, CaseLabel::Case3, 1);
  REQUIRE(inst.plan.f1 == 4);
  const auto d = diagnose(inst);
  CHECK(d.rank21 == 0);
  CHECK(d.expected_rank21 == 0);
}
