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

#include <string>

#include <json.hpp>

#include "risdof/scheme.hpp"

namespace risdof {

namespace {

using nlohmann::json;

json complex_pair(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

json matrix_rows(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_pair(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string instance_to_json(const SchemeInstance& inst, int indent) {
  const SchemeDiagnostics diag = diagnose(inst);
  json psi = json::array();
  for (Eigen::Index i = 0; i < inst.psi.psi.size(); ++i) psi.push_back(complex_pair(inst.psi.psi(i)));

  json doc;
  doc["config"] = {{"m1", inst.config.m1},
                   {"m2", inst.config.m2},
                   {"n1", inst.config.n1},
                   {"n2", inst.config.n2},
                   {"swapped", inst.config.swapped}};
  doc["r"] = inst.ris.r;
  doc["seed"] = inst.requested_seed;
  doc["channel_seed"] = inst.channels.seed;
  doc["case"] = std::string(to_string(inst.label));
  doc["plan"] = {{"f1", inst.plan.f1},
                 {"f2", inst.plan.f2},
                 {"mode1", std::string(to_string(inst.plan.mode1))},
                 {"mode2", std::string(to_string(inst.plan.mode2))},
                 {"cost", inst.plan.cost}};
  doc["psi"] = std::move(psi);
  doc["psi_max_magnitude"] = inst.psi.max_magnitude;
  doc["residual"] = inst.psi.residual;
  doc["ranks"] = {{"hbar21", diag.rank21},
                  {"hbar12", diag.rank12},
                  {"expected_hbar21", diag.expected_rank21},
                  {"expected_hbar12", diag.expected_rank12}};
  doc["channels"] = {{"h11", matrix_rows(inst.channels.h11)}, {"h21", matrix_rows(inst.channels.h21)},
                     {"h12", matrix_rows(inst.channels.h12)}, {"h22", matrix_rows(inst.channels.h22)},
                     {"d1", matrix_rows(inst.channels.d1)},   {"d2", matrix_rows(inst.channels.d2)},
                     {"g1", matrix_rows(inst.channels.g1)},   {"g2", matrix_rows(inst.channels.g2)}};
  doc["effective"] = {{"hbar11", matrix_rows(inst.effective.hbar11)},
                      {"hbar21", matrix_rows(inst.effective.hbar21)},
                      {"hbar12", matrix_rows(inst.effective.hbar12)},
                      {"hbar22", matrix_rows(inst.effective.hbar22)}};
  return doc.dump(indent);
}

}  // namespace risdof
