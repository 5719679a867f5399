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

// Numerical RIS beamforming: random channels, the linear system that
// cancels the planned cross-channel entries, its minimum-norm solution and
// the resulting effective channels.
//
// Channel naming follows the link direction: hij is Tx i -> Rx j, so h21 is
// n1 x m2 and h12 is n2 x m1. di is Tx i -> RIS (r x mi) and gj is
// RIS -> Rx j (nj x r). The effective channel is hbar_ij = hij + gj diag(psi) di.

#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "risdof/dof.hpp"
#include "risdof/model.hpp"

namespace risdof {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct Tolerances {
  double residual = 1e-9;         // ||A psi - b|| <= residual * (1 + ||b||)
  double zero_block = 1e-9;       // |cancelled entry| <= zero_block * (1 + ||H||_F)
  double rank = 1e-8;             // singular values below rank * sigma_max are zero
  double ill_conditioned = 1e-10; // sigma_min / sigma_max floor of the stacked system
};

struct ChannelSet {
  CMatrix h11, h21, h12, h22;
  CMatrix d1, d2;  // Tx -> RIS
  CMatrix g1, g2;  // RIS -> Rx
  std::uint64_t seed = 0;
};

struct RisVector {
  CVector psi;
  double max_magnitude = 0.0;
  double residual = 0.0;      // ||A psi - b||
  double rhs_norm = 0.0;      // ||b||
  double sigma_ratio = 1.0;   // smallest / largest singular value of A (1 when empty)
};

struct EffectiveChannels {
  CMatrix hbar11, hbar21, hbar12, hbar22;
  EliminationPlan plan;
};

// Rows of gamma1 / gamma2 are the RIS responses of the entries to be zeroed;
// rhs stacks the negated original entries in the same order.
struct GammaSystem {
  CMatrix gamma1;
  CMatrix gamma2;
  CVector rhs;

  Eigen::Index rows() const { return gamma1.rows() + gamma2.rows(); }
  CMatrix stacked() const;
};

// Numerical rank with singular values below rel_tol * max(sigma_max, reference)
// treated as zero. A nonzero reference measures a matrix that may have been
// cancelled to round-off against the scale of the channel it came from.
int numeric_rank(const CMatrix& m, double rel_tol = 1e-8, double reference = 0.0);

// i.i.d. CN(0, 1) entries from a generator seeded with `seed`. Rank-deficient
// draws are redrawn from the same stream, at most 10 times.
ChannelSet generate_channels(const AntennaConfig& cfg, RisConfig ris, std::uint64_t seed);

// Row-mode links are vectorized as vec(H^T) (row-major), column-mode links as
// vec(H) (column-major); only the leading f1 (resp. f2) rows/columns are kept.
GammaSystem build_gamma(const ChannelSet& ch, const EliminationPlan& plan);

// Minimum-norm solution of [gamma1; gamma2] psi = rhs via SVD.
// Throws InfeasibleBudget when rows > r and IllConditioned when the stacked
// matrix is numerically rank deficient or the residual misses tolerance.
RisVector solve_psi(const GammaSystem& sys, RisConfig ris, const Tolerances& tol = {});

// Applies psi to every link. Throws ZeroBlockViolation if a cancelled entry
// of hbar21 / hbar12 exceeds tolerance.
EffectiveChannels effective_channels(const ChannelSet& ch, const RisVector& psi,
                                     const EliminationPlan& plan, const Tolerances& tol = {});

struct SchemeInstance {
  AntennaConfig config;
  RisConfig ris;
  CaseLabel label = CaseLabel::Case1;
  EliminationPlan plan;
  ChannelSet channels;
  GammaSystem gamma;
  RisVector psi;
  EffectiveChannels effective;
  std::uint64_t requested_seed = 0;
  int attempts = 1;  // channel draws used, including the accepted one
};

// generate -> optimal plan -> gamma -> psi -> effective channels. Resamples
// with a derived seed when the system is ill-conditioned (at most 10 draws).
SchemeInstance synthesize(const AntennaConfig& cfg, RisConfig ris, CaseLabel label,
                          std::uint64_t seed, const Tolerances& tol = {});

// Same pipeline with a caller-chosen plan instead of the optimal one.
SchemeInstance synthesize_with_plan(const AntennaConfig& cfg, RisConfig ris, CaseLabel label,
                                    const EliminationPlan& plan, std::uint64_t seed,
                                    const Tolerances& tol = {});

struct SchemeDiagnostics {
  double residual_ratio = 0.0;     // ||A psi - b|| / (1 + ||b||)
  double zero_block_ratio = 0.0;   // worst cancelled entry / (1 + ||H||_F)
  int rank21 = 0, expected_rank21 = 0;
  int rank12 = 0, expected_rank12 = 0;
  bool residual_blocks_full_rank = false;
  bool direct_links_full_rank = false;

  bool residual_ok = false;
  bool zero_blocks_ok = false;
  bool ranks_ok = false;

  bool all_ok() const {
    return residual_ok && zero_blocks_ok && ranks_ok && residual_blocks_full_rank &&
           direct_links_full_rank;
  }
};

// Measures an instance against `tol` without throwing.
SchemeDiagnostics diagnose(const SchemeInstance& inst, const Tolerances& tol = {});

// JSON document with config, r, seed, case, plan, psi, residual, ranks and
// all channel matrices; complex numbers are [re, im] pairs and matrices are
// arrays of rows.
std::string instance_to_json(const SchemeInstance& inst, int indent = 2);

}  // namespace risdof
