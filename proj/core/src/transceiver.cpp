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

#include "risdof/transceiver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "risdof/errors.hpp"

namespace risdof {

namespace {

constexpr int pos(int x) noexcept { return std::max(x, 0); }

// Orthonormal basis of the null space of `a` (p x m). An empty or all-zero
// matrix has the whole space as null space.
CMatrix null_space(const CMatrix& a, Eigen::Index m, double rel_tol) {
  if (a.rows() == 0) return CMatrix::Identity(m, m);
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  if (sv.size() > 0 && sv(0) > 0.0) {
    while (rank < sv.size() && sv(rank) > rel_tol * sv(0)) ++rank;
  }
  return svd.matrixV().rightCols(m - rank);
}

// Orthonormal basis of span(a), dropping numerically dependent directions.
CMatrix orthonormal_span(const CMatrix& a, double rel_tol) {
  if (a.cols() == 0) return CMatrix(a.rows(), 0);
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  if (sv.size() > 0 && sv(0) > 0.0) {
    while (rank < sv.size() && sv(rank) > rel_tol * sv(0)) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

// ZF directions of one transmitter against its cross channel `cross`
// (receiver x transmitter) whose leading f rows/columns were cancelled.
CMatrix zero_forcing_block(const CMatrix& cross, int f, ElimMode mode, int count, double rel_tol,
                           const char* who) {
  const Eigen::Index m = cross.cols();
  CMatrix basis;
  if (mode == ElimMode::Row) {
    basis = null_space(cross.bottomRows(cross.rows() - f), m, rel_tol);
  } else {
    const CMatrix unit = CMatrix::Identity(m, m).leftCols(f);
    if (count <= f) {
      basis = unit;
    } else {
      // Top up with null-space directions orthogonal to the unit vectors.
      CMatrix extra = null_space(cross, m, rel_tol);
      extra -= unit * (unit.adjoint() * extra);
      const CMatrix more = orthonormal_span(extra, rel_tol);
      basis.resize(m, unit.cols() + more.cols());
      basis << unit, more;
    }
  }
  if (count > basis.cols()) {
    throw AllocationInfeasible(std::string(who) + " needs " + std::to_string(count) +
                               " zero-forcing directions, only " +
                               std::to_string(basis.cols()) + " exist");
  }
  return basis.leftCols(count);
}

// `count` random orthonormal directions orthogonal to `zf`.
CMatrix decoding_block(const CMatrix& zf, Eigen::Index m, int count, std::mt19937_64& rng,
                       double rel_tol, const char* who) {
  if (count == 0) return CMatrix(m, 0);
  const CMatrix complement = zf.cols() == 0 ? CMatrix(CMatrix::Identity(m, m))
                                            : null_space(zf.adjoint(), m, rel_tol);
  if (count > complement.cols()) {
    throw AllocationInfeasible(std::string(who) + " needs " + std::to_string(count) +
                               " decoding directions, only " +
                               std::to_string(complement.cols()) + " remain");
  }
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix mix(complement.cols(), count);
  for (Eigen::Index j = 0; j < mix.cols(); ++j) {
    for (Eigen::Index i = 0; i < mix.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      mix(i, j) = {re, im};
    }
  }
  const CMatrix directions = complement * mix;
  Eigen::HouseholderQR<CMatrix> qr(directions);
  return qr.householderQ() * CMatrix::Identity(m, count);
}

bool full_column_rank(const CMatrix& a, double rel_tol) {
  if (a.cols() == 0) return true;
  if (a.cols() > a.rows()) return false;
  return numeric_rank(a, rel_tol) == a.cols();
}

CMatrix hstack(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

// log2 det(I + m m^H) from the singular values of m. Forming the Gram
// matrix first loses the unit eigenvalues next to ones of order P at high SNR.
double log2det_gram(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    sum += std::log2(1.0 + svd.singularValues()(i) * svd.singularValues()(i));
  }
  return sum;
}

double receiver_rate(const CMatrix& desired, const CMatrix& decoded, const CMatrix& leak) {
  if (desired.rows() == 0) return 0.0;
  const CMatrix interference = hstack(decoded, leak);
  const CMatrix signal = hstack(desired, interference);
  return std::max(0.0, log2det_gram(signal) - log2det_gram(interference));
}

}  // namespace

std::string_view to_string(Transmitter tx) noexcept {
  return tx == Transmitter::Tx1 ? "Tx1" : "Tx2";
}

StreamAllocation allocate_streams(const AntennaConfig& cfg, const EliminationPlan& plan,
                                  CaseLabel label, std::optional<Transmitter> preferred_owner) {
  const int m1 = cfg.m1, m2 = cfg.m2, n1 = cfg.n1, n2 = cfg.n2;
  const int f1 = plan.f1, f2 = plan.f2;
  StreamAllocation a;
  int id = 0;
  switch (label) {
    case CaseLabel::Case1:
      a.d1_zf = pos(std::min(m1 - (n2 - f2), n1));
      a.d2_zf = pos(std::min(m2 - (n1 - f1), n2));
      id = std::min(pos(n1 + n2 - m1 - f2), pos(n1 + n2 - m2 - f1));
      break;
    case CaseLabel::Case2_1:
    case CaseLabel::Case2_2:
      a.d1_zf = pos(std::min(m1 - (n2 - f2), n1));
      a.d2_zf = std::min(f1, n2);
      id = std::min(pos(n1 + n2 - m1 - f2), pos(n2 - f1));
      break;
    case CaseLabel::Case3:
      a.d1_zf = f2;
      a.d2_zf = std::min(f1, n2);
      id = std::min(pos(n1 - f2), pos(n2 - f1));
      break;
  }

  const int spare1 = pos(m1 - a.d1_zf);
  const int spare2 = pos(m2 - a.d2_zf);
  a.id_owner = preferred_owner.value_or(spare1 >= spare2 ? Transmitter::Tx1 : Transmitter::Tx2);
  int& owner_ids = a.id_owner == Transmitter::Tx1 ? a.id_tx1 : a.id_tx2;
  int& other_ids = a.id_owner == Transmitter::Tx1 ? a.id_tx2 : a.id_tx1;
  const int owner_spare = a.id_owner == Transmitter::Tx1 ? spare1 : spare2;
  const int other_spare = a.id_owner == Transmitter::Tx1 ? spare2 : spare1;
  owner_ids = std::min(id, owner_spare);
  other_ids = std::min(id - owner_ids, other_spare);

  // The counting can exceed the transmit dimension m1 + m2; trim down to the
  // objective, decoded streams first.
  int excess = a.d1_zf + a.d2_zf + a.id_tx1 + a.id_tx2 - elimination_objective(cfg, label, f1, f2);
  for (int* slot : {&other_ids, &owner_ids, &a.d2_zf, &a.d1_zf}) {
    const int cut = std::clamp(excess, 0, *slot);
    *slot -= cut;
    excess -= cut;
  }
  a.d_id = a.id_tx1 + a.id_tx2;
  return a;
}

PrecoderPair build_precoders(const EffectiveChannels& eff, const StreamAllocation& alloc,
                             std::uint64_t seed, double rank_tol) {
  const EliminationPlan& plan = eff.plan;
  PrecoderPair pre;
  const Eigen::Index m1 = eff.hbar11.cols();
  const Eigen::Index m2 = eff.hbar22.cols();
  const CMatrix zf1 = zero_forcing_block(eff.hbar12, plan.f2, plan.mode2, alloc.d1_zf, rank_tol, "Tx1");
  const CMatrix zf2 = zero_forcing_block(eff.hbar21, plan.f1, plan.mode1, alloc.d2_zf, rank_tol, "Tx2");
  std::mt19937_64 rng(seed);
  const CMatrix id1 = decoding_block(zf1, m1, alloc.id_tx1, rng, rank_tol, "Tx1");
  const CMatrix id2 = decoding_block(zf2, m2, alloc.id_tx2, rng, rank_tol, "Tx2");
  pre.p1 = hstack(zf1, id1);
  pre.p2 = hstack(zf2, id2);
  pre.zf1 = alloc.d1_zf;
  pre.zf2 = alloc.d2_zf;
  return pre;
}

bool verify_decodability(const EffectiveChannels& eff, const StreamAllocation& alloc,
                         const PrecoderPair& pre, const DecodabilityTolerances& tol) {
  if (pre.p1.cols() != alloc.tx1_streams() || pre.p2.cols() != alloc.tx2_streams() ||
      pre.zf1 != alloc.d1_zf || pre.zf2 != alloc.d2_zf) {
    return false;
  }
  if (!full_column_rank(pre.p1, tol.rank) || !full_column_rank(pre.p2, tol.rank)) return false;

  const auto nulled = [&](const CMatrix& cross, const CMatrix& zf) {
    if (zf.cols() == 0) return true;
    return (cross * zf).norm() <= tol.nulling * (1.0 + cross.norm() * zf.norm());
  };
  if (!nulled(eff.hbar21, pre.p2_zf()) || !nulled(eff.hbar12, pre.p1_zf())) return false;

  const CMatrix rx1 = hstack(eff.hbar11 * pre.p1, eff.hbar21 * pre.p2_id());
  const CMatrix rx2 = hstack(eff.hbar22 * pre.p2, eff.hbar12 * pre.p1_id());
  return full_column_rank(rx1, tol.rank) && full_column_rank(rx2, tol.rank);
}

RateProbe sum_rate(const EffectiveChannels& eff, const PrecoderPair& pre,
                   const StreamAllocation& alloc, double snr_db) {
  RateProbe probe;
  probe.snr_db = snr_db;
  const double power = std::pow(10.0, snr_db / 10.0);
  const double amp1 = std::sqrt(power / std::max(1, alloc.tx1_streams()));
  const double amp2 = std::sqrt(power / std::max(1, alloc.tx2_streams()));

  const double rate1 = receiver_rate(amp1 * (eff.hbar11 * pre.p1), amp2 * (eff.hbar21 * pre.p2_id()),
                                     amp2 * (eff.hbar21 * pre.p2_zf()));
  const double rate2 = receiver_rate(amp2 * (eff.hbar22 * pre.p2), amp1 * (eff.hbar12 * pre.p1_id()),
                                     amp1 * (eff.hbar12 * pre.p1_zf()));
  probe.sum_rate = rate1 + rate2;
  return probe;
}

SchemeRun run_scheme(const AntennaConfig& cfg, RisConfig ris, CaseLabel label, std::uint64_t seed) {
  SchemeRun run;
  run.instance = synthesize(cfg, ris, label, seed);
  const EliminationPlan& plan = run.instance.plan;
  run.predicted = elimination_objective(cfg, label, plan.f1, plan.f2);

  const StreamAllocation first = allocate_streams(cfg, plan, label);
  const Transmitter other = first.id_owner == Transmitter::Tx1 ? Transmitter::Tx2 : Transmitter::Tx1;
  const std::uint64_t precoder_seed = seed ^ 0x5DEECE66DULL;
  std::string last_error = "rank test failed";
  for (const StreamAllocation& alloc : {first, allocate_streams(cfg, plan, label, other)}) {
    try {
      PrecoderPair pre = build_precoders(run.instance.effective, alloc, precoder_seed);
      if (verify_decodability(run.instance.effective, alloc, pre)) {
        run.alloc = alloc;
        run.precoders = std::move(pre);
        run.decodable = true;
        return run;
      }
    } catch (const AllocationInfeasible& e) {
      last_error = e.what();
    }
  }
  throw DecodabilityFailure("no decodable owner choice for " + std::string(to_string(label)) +
                            " with plan (" + std::to_string(plan.f1) + ", " +
                            std::to_string(plan.f2) + "): " + last_error);
}

double estimate_slope(const SchemeRun& run, double snr_lo_db, double snr_hi_db) {
  if (!(snr_lo_db >= 60.0) || !(snr_hi_db > snr_lo_db)) {
    throw InvalidArgument("slope estimation needs snr_hi_db > snr_lo_db >= 60");
  }
  const EffectiveChannels& eff = run.instance.effective;
  const double lo = sum_rate(eff, run.precoders, run.alloc, snr_lo_db).sum_rate;
  const double hi = sum_rate(eff, run.precoders, run.alloc, snr_hi_db).sum_rate;
  const double log_power_span = (snr_hi_db - snr_lo_db) / 10.0 * std::log2(10.0);
  return (hi - lo) / log_power_span;
}

double estimate_slope(const AntennaConfig& cfg, RisConfig ris, CaseLabel label, std::uint64_t seed,
                      double snr_lo_db, double snr_hi_db) {
  if (!(snr_lo_db >= 60.0) || !(snr_hi_db > snr_lo_db)) {
    throw InvalidArgument("slope estimation needs snr_hi_db > snr_lo_db >= 60");
  }
  return estimate_slope(run_scheme(cfg, ris, label, seed), snr_lo_db, snr_hi_db);
}

}  // namespace risdof
