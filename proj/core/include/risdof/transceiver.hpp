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

// Transmit zero-forcing plus receive interference decoding on top of the
// RIS-cancelled effective channels, and the high-SNR rate slope that
// certifies the sum-DoF numerically.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "risdof/dof.hpp"
#include "risdof/model.hpp"
#include "risdof/scheme.hpp"

namespace risdof {

enum class Transmitter { Tx1, Tx2 };

std::string_view to_string(Transmitter tx) noexcept;

// Stream counts of one scheme instance.
//
// d1_zf / d2_zf streams are nulled at the unintended receiver. The d_id
// interference-decoded streams are split between the transmitters
// (d_id = id_tx1 + id_tx2); id_owner is the transmitter that was filled
// first. Every stream of Tx i is desired at Rx i.
struct StreamAllocation {
  int d1_zf = 0;
  int d2_zf = 0;
  int d_id = 0;
  int id_tx1 = 0;
  int id_tx2 = 0;
  Transmitter id_owner = Transmitter::Tx1;

  int tx1_streams() const { return d1_zf + id_tx1; }
  int tx2_streams() const { return d2_zf + id_tx2; }
  int total() const { return d1_zf + d2_zf + d_id; }

  friend bool operator==(const StreamAllocation&, const StreamAllocation&) = default;
};

// Counts zero-forcing and interference-decoding dimensions for `plan`, fills
// the ID streams into the preferred owner's spare antennas first (default:
// the transmitter with more spare antennas, ties to Tx1) and trims the result
// to the case objective at (plan.f1, plan.f2).
StreamAllocation allocate_streams(const AntennaConfig& cfg, const EliminationPlan& plan,
                                  CaseLabel label,
                                  std::optional<Transmitter> preferred_owner = std::nullopt);

// Column blocks: p1 = [zf1 | id1], p2 = [zf2 | id2]. Columns are orthonormal.
struct PrecoderPair {
  CMatrix p1;
  CMatrix p2;
  int zf1 = 0;  // leading ZF columns of p1
  int zf2 = 0;

  auto p1_zf() const { return p1.leftCols(zf1); }
  auto p1_id() const { return p1.rightCols(p1.cols() - zf1); }
  auto p2_zf() const { return p2.leftCols(zf2); }
  auto p2_id() const { return p2.rightCols(p2.cols() - zf2); }
};

// Row-mode cross link: ZF columns span the null space of the uncancelled
// rows. Column-mode cross link: the unit vectors of the cancelled columns,
// topped up from the null space if needed. ID columns are seeded random
// directions orthogonal to the ZF block. Throws AllocationInfeasible when a
// block needs more directions than exist.
PrecoderPair build_precoders(const EffectiveChannels& eff, const StreamAllocation& alloc,
                             std::uint64_t seed, double rank_tol = 1e-8);

struct DecodabilityTolerances {
  double nulling = 1e-9;  // ||cross * zf block||_F <= nulling * (1 + ||cross||_F ||zf||_F)
  double rank = 1e-8;
};

// True iff at each receiver [own channel * own precoder | cross channel * ID
// block of the other transmitter] has full column rank, the precoders have
// independent columns, and the cross channel annihilates the other
// transmitter's ZF block.
bool verify_decodability(const EffectiveChannels& eff, const StreamAllocation& alloc,
                         const PrecoderPair& pre, const DecodabilityTolerances& tol = {});

struct RateProbe {
  double snr_db = 0.0;
  double sum_rate = 0.0;  // bits per channel use
};

// Each transmitter spreads power P = 10^(snr_db / 10) evenly over its
// streams. Rx j's rate is log2 det(I + S S^H + L L^H) - log2 det(I + B B^H + L L^H)
// with S the desired and decoded-interference columns, B the decoded
// interference alone and L any leakage of the other ZF block. Decoded
// interference is thereby credited once, at its own receiver.
RateProbe sum_rate(const EffectiveChannels& eff, const PrecoderPair& pre,
                   const StreamAllocation& alloc, double snr_db);

// Everything estimate_slope builds, kept for reporting.
struct SchemeRun {
  SchemeInstance instance;
  StreamAllocation alloc;
  PrecoderPair precoders;
  bool decodable = false;
  int predicted = 0;  // case objective at the plan
};

// synthesize -> allocate -> precode -> verify. When the preferred owner
// fails the rank test the other owner is tried; throws DecodabilityFailure
// if both fail.
SchemeRun run_scheme(const AntennaConfig& cfg, RisConfig ris, CaseLabel label, std::uint64_t seed);

// (sum_rate(hi) - sum_rate(lo)) / (log2 P_hi - log2 P_lo).
// Requires snr_hi_db > snr_lo_db >= 60.
double estimate_slope(const SchemeRun& run, double snr_lo_db, double snr_hi_db);
double estimate_slope(const AntennaConfig& cfg, RisConfig ris, CaseLabel label, std::uint64_t seed,
                      double snr_lo_db, double snr_hi_db);

}  // namespace risdof
