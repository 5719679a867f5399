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

#include "risdof/scheme.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "risdof/errors.hpp"

namespace risdof {

namespace {

constexpr int kMaxDraws = 10;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

CMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = {re, im};
    }
  }
  return m;
}

bool full_rank(const CMatrix& m, double rel_tol = 1e-8, double reference = 0.0) {
  return numeric_rank(m, rel_tol, reference) == std::min(m.rows(), m.cols());
}

// Appends the cancellation rows of one cross link. `h` is the cross channel
// (n x m), `g` the RIS -> receiver channel (n x r), `d` the transmitter -> RIS
// channel (r x m).
void append_link(const CMatrix& h, const CMatrix& g, const CMatrix& d, int f, ElimMode mode,
                 CMatrix& gamma, std::vector<std::complex<double>>& rhs) {
  const Eigen::Index r = g.cols();
  const Eigen::Index per_unit = mode == ElimMode::Row ? h.cols() : h.rows();
  gamma.resize(f * per_unit, r);
  Eigen::Index row = 0;
  for (int k = 0; k < f; ++k) {
    for (Eigen::Index i = 0; i < per_unit; ++i, ++row) {
      // Entry (a, b) of g diag(psi) d is sum_j g(a, j) d(j, b) psi_j.
      const Eigen::Index a = mode == ElimMode::Row ? k : i;
      const Eigen::Index b = mode == ElimMode::Row ? i : k;
      gamma.row(row) = g.row(a).transpose().cwiseProduct(d.col(b)).transpose();
      rhs.push_back(-h(a, b));
    }
  }
}

// Max magnitude over the cancelled leading rows/columns of `hbar`.
double cancelled_max(const CMatrix& hbar, int f, ElimMode mode) {
  if (f == 0) return 0.0;
  const CMatrix block = mode == ElimMode::Row ? CMatrix(hbar.topRows(f)) : CMatrix(hbar.leftCols(f));
  return block.size() == 0 ? 0.0 : block.cwiseAbs().maxCoeff();
}

CMatrix residual_block(const CMatrix& hbar, int f, ElimMode mode) {
  return mode == ElimMode::Row ? CMatrix(hbar.bottomRows(hbar.rows() - f))
                               : CMatrix(hbar.rightCols(hbar.cols() - f));
}

int expected_rank(const CMatrix& hbar, int f, ElimMode mode) {
  return static_cast<int>(mode == ElimMode::Row ? hbar.rows() - f : hbar.cols() - f);
}

}  // namespace

CMatrix GammaSystem::stacked() const {
  CMatrix a(rows(), std::max(gamma1.cols(), gamma2.cols()));
  if (gamma1.rows() > 0) a.topRows(gamma1.rows()) = gamma1;
  if (gamma2.rows() > 0) a.bottomRows(gamma2.rows()) = gamma2;
  return a;
}

int numeric_rank(const CMatrix& m, double rel_tol, double reference) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  const double scale = std::max(sv.size() > 0 ? sv(0) : 0.0, reference);
  if (scale == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > rel_tol * scale) ++rank;
  }
  return rank;
}

namespace {

double spectral_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::BDCSVD<CMatrix>(m).singularValues()(0);
}

}  // namespace

ChannelSet generate_channels(const AntennaConfig& cfg, RisConfig ris, std::uint64_t seed) {
  if (ris.r < 0) throw InvalidArgument("negative RIS element count");
  std::mt19937_64 rng(seed);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    ChannelSet ch;
    ch.seed = seed;
    ch.h11 = complex_gaussian(cfg.n1, cfg.m1, rng);
    ch.h21 = complex_gaussian(cfg.n1, cfg.m2, rng);
    ch.h12 = complex_gaussian(cfg.n2, cfg.m1, rng);
    ch.h22 = complex_gaussian(cfg.n2, cfg.m2, rng);
    ch.d1 = complex_gaussian(ris.r, cfg.m1, rng);
    ch.d2 = complex_gaussian(ris.r, cfg.m2, rng);
    ch.g1 = complex_gaussian(cfg.n1, ris.r, rng);
    ch.g2 = complex_gaussian(cfg.n2, ris.r, rng);
    if (full_rank(ch.h11) && full_rank(ch.h21) && full_rank(ch.h12) && full_rank(ch.h22) &&
        full_rank(ch.d1) && full_rank(ch.d2) && full_rank(ch.g1) && full_rank(ch.g2)) {
      return ch;
    }
  }
  throw IllConditioned("could not draw full-rank channels for seed " + std::to_string(seed));
}

GammaSystem build_gamma(const ChannelSet& ch, const EliminationPlan& plan) {
  assert(plan.mode1 == ElimMode::Row ? plan.f1 <= ch.h21.rows() : plan.f1 <= ch.h21.cols());
  assert(plan.mode2 == ElimMode::Row ? plan.f2 <= ch.h12.rows() : plan.f2 <= ch.h12.cols());
  GammaSystem sys;
  std::vector<std::complex<double>> rhs;
  append_link(ch.h21, ch.g1, ch.d2, plan.f1, plan.mode1, sys.gamma1, rhs);
  append_link(ch.h12, ch.g2, ch.d1, plan.f2, plan.mode2, sys.gamma2, rhs);
  sys.rhs = Eigen::Map<const CVector>(rhs.data(), static_cast<Eigen::Index>(rhs.size()));
  return sys;
}

RisVector solve_psi(const GammaSystem& sys, RisConfig ris, const Tolerances& tol) {
  const Eigen::Index k = sys.rows();
  if (k > ris.r) {
    throw InfeasibleBudget(std::to_string(k) + " cancelled entries exceed " +
                           std::to_string(ris.r) + " RIS elements");
  }
  RisVector out;
  out.psi = CVector::Zero(ris.r);
  out.rhs_norm = sys.rhs.norm();
  if (k == 0) return out;

  const CMatrix a = sys.stacked();
  Eigen::BDCSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  out.sigma_ratio = sv(0) > 0.0 ? sv(k - 1) / sv(0) : 0.0;
  if (out.sigma_ratio < tol.ill_conditioned) {
    throw IllConditioned("stacked cancellation system is rank deficient (sigma ratio " +
                         std::to_string(out.sigma_ratio) + ")");
  }
  const CVector coeffs = (svd.matrixU().adjoint() * sys.rhs).cwiseQuotient(sv.cast<std::complex<double>>());
  out.psi = svd.matrixV() * coeffs;
  out.residual = (a * out.psi - sys.rhs).norm();
  out.max_magnitude = out.psi.cwiseAbs().maxCoeff();
  if (out.residual > tol.residual * (1.0 + out.rhs_norm)) {
    throw IllConditioned("cancellation residual " + std::to_string(out.residual) +
                         " above tolerance");
  }
  return out;
}

EffectiveChannels effective_channels(const ChannelSet& ch, const RisVector& psi,
                                     const EliminationPlan& plan, const Tolerances& tol) {
  EffectiveChannels eff;
  eff.plan = plan;
  const auto reflect = [&](const CMatrix& h, const CMatrix& g, const CMatrix& d) {
    if (g.cols() == 0) return h;
    return CMatrix(h + g * psi.psi.asDiagonal() * d);
  };
  eff.hbar11 = reflect(ch.h11, ch.g1, ch.d1);
  eff.hbar21 = reflect(ch.h21, ch.g1, ch.d2);
  eff.hbar12 = reflect(ch.h12, ch.g2, ch.d1);
  eff.hbar22 = reflect(ch.h22, ch.g2, ch.d2);

  const double bound21 = tol.zero_block * (1.0 + ch.h21.norm());
  const double bound12 = tol.zero_block * (1.0 + ch.h12.norm());
  if (cancelled_max(eff.hbar21, plan.f1, plan.mode1) > bound21 ||
      cancelled_max(eff.hbar12, plan.f2, plan.mode2) > bound12) {
    throw ZeroBlockViolation("cancelled entries of the cross channels exceed tolerance");
  }
  return eff;
}

SchemeInstance synthesize_with_plan(const AntennaConfig& cfg, RisConfig ris, CaseLabel label,
                                    const EliminationPlan& plan, std::uint64_t seed,
                                    const Tolerances& tol) {
  if (plan.cost > ris.r) {
    throw InfeasibleBudget("plan cost " + std::to_string(plan.cost) + " exceeds r = " +
                           std::to_string(ris.r));
  }
  std::string last_error;
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    const std::uint64_t draw_seed = attempt == 0 ? seed : splitmix64(seed + attempt);
    try {
      SchemeInstance inst;
      inst.config = cfg;
      inst.ris = ris;
      inst.label = label;
      inst.plan = plan;
      inst.requested_seed = seed;
      inst.attempts = attempt + 1;
      inst.channels = generate_channels(cfg, ris, draw_seed);
      inst.gamma = build_gamma(inst.channels, plan);
      inst.psi = solve_psi(inst.gamma, ris, tol);
      inst.effective = effective_channels(inst.channels, inst.psi, plan, tol);
      return inst;
    } catch (const IllConditioned& e) {
      last_error = e.what();
    } catch (const ZeroBlockViolation& e) {
      last_error = e.what();
    }
  }
  throw IllConditioned("no well-conditioned channel draw after " + std::to_string(kMaxDraws) +
                       " attempts: " + last_error);
}

SchemeInstance synthesize(const AntennaConfig& cfg, RisConfig ris, CaseLabel label,
                          std::uint64_t seed, const Tolerances& tol) {
  const EliminationPlan plan = optimal_elimination(cfg, ris, label);
  return synthesize_with_plan(cfg, ris, label, plan, seed, tol);
}

SchemeDiagnostics diagnose(const SchemeInstance& inst, const Tolerances& tol) {
  SchemeDiagnostics d;
  const EliminationPlan& plan = inst.plan;
  const EffectiveChannels& eff = inst.effective;

  if (inst.gamma.rows() > 0) {
    const double res = (inst.gamma.stacked() * inst.psi.psi - inst.gamma.rhs).norm();
    d.residual_ratio = res / (1.0 + inst.gamma.rhs.norm());
  }
  d.zero_block_ratio =
      std::max(cancelled_max(eff.hbar21, plan.f1, plan.mode1) / (1.0 + inst.channels.h21.norm()),
               cancelled_max(eff.hbar12, plan.f2, plan.mode2) / (1.0 + inst.channels.h12.norm()));

  const double scale21 = spectral_norm(inst.channels.h21);
  const double scale12 = spectral_norm(inst.channels.h12);
  d.rank21 = numeric_rank(eff.hbar21, tol.rank, scale21);
  d.rank12 = numeric_rank(eff.hbar12, tol.rank, scale12);
  d.expected_rank21 = expected_rank(eff.hbar21, plan.f1, plan.mode1);
  d.expected_rank12 = expected_rank(eff.hbar12, plan.f2, plan.mode2);

  d.residual_blocks_full_rank =
      full_rank(residual_block(eff.hbar21, plan.f1, plan.mode1), tol.rank, scale21) &&
      full_rank(residual_block(eff.hbar12, plan.f2, plan.mode2), tol.rank, scale12);
  d.direct_links_full_rank = full_rank(eff.hbar11, tol.rank) && full_rank(eff.hbar22, tol.rank);

  d.residual_ok = d.residual_ratio <= tol.residual;
  d.zero_blocks_ok = d.zero_block_ratio <= tol.zero_block;
  d.ranks_ok = d.rank21 == d.expected_rank21 && d.rank12 == d.expected_rank12;
  return d;
}

}  // namespace risdof
