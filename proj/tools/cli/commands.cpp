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

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "risdof/dof.hpp"
#include "risdof/errors.hpp"
#include "risdof/model.hpp"
#include "risdof/scheme.hpp"
#include "risdof/transceiver.hpp"

namespace risdof::cli {

namespace {

using nlohmann::json;

constexpr const char* kCsvHeader = "m1,m2,n1,n2,r,case,achievable,baseline,gain,ris_helps";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigFlags {
  std::optional<int> m1, m2, n1, n2;
  int r = 0;
  std::string config;
  bool json = false;

  AntennaConfig antennas() const {
    if (!m1 || !m2 || !n1 || !n2) throw UsageError("--m1, --m2, --n1 and --n2 are required");
    return canonicalize(*m1, *m2, *n1, *n2);
  }
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f) {
  cmd->add_option("--m1", f.m1, "antennas at Tx1");
  cmd->add_option("--m2", f.m2, "antennas at Tx2");
  cmd->add_option("--n1", f.n1, "antennas at Rx1");
  cmd->add_option("--n2", f.n2, "antennas at Rx2");
  cmd->add_option("--r", f.r, "RIS elements")->capture_default_str();
  cmd->add_option("--config", f.config, "JSON file with flag values; flags take precedence");
  cmd->add_flag("--json", f.json, "emit JSON instead of text");
}

// Budget values given either as a comma list or as an inclusive range.
struct BudgetFlags {
  std::string list;
  std::optional<int> lo, hi;
  int step = 1;

  void add(CLI::App* cmd) {
    cmd->add_option("--r-list", list, "comma-separated RIS budgets");
    cmd->add_option("--r-min", lo, "first budget of a range");
    cmd->add_option("--r-max", hi, "last budget of a range");
    cmd->add_option("--r-step", step, "range step")->capture_default_str();
  }

  std::vector<int> values(std::optional<int> single) const {
    std::vector<int> out;
    if (!list.empty()) {
      std::stringstream ss(list);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(item, &used);
        } catch (const std::exception&) {
          throw UsageError("bad --r-list entry '" + item + "'");
        }
        if (used != item.size()) throw UsageError("bad --r-list entry '" + item + "'");
        out.push_back(v);
      }
    } else if (lo || hi) {
      if (!lo || !hi) throw UsageError("--r-min and --r-max go together");
      if (step < 1) throw UsageError("--r-step must be >= 1");
      if (*hi < *lo) throw UsageError("--r-max is below --r-min");
      for (long v = *lo; v <= *hi; v += step) out.push_back(static_cast<int>(v));
    } else if (single) {
      out.push_back(*single);
    }
    if (out.empty()) throw UsageError("no RIS budget given (--r, --r-list or --r-min/--r-max)");
    for (int v : out) make_ris(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

// Turns a JSON config file into "--key value" tokens placed before the user's
// own flags; with TakeLast the user's flags then win.
std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
  std::vector<std::string> tokens;
  for (const auto& [key, value] : doc.items()) {
    if (key == "config") continue;
    const std::string flag = "--" + key;
    if (value.is_boolean()) {
      if (value.get<bool>()) tokens.push_back(flag);
    } else if (value.is_string()) {
      tokens.push_back(flag);
      tokens.push_back(value.get<std::string>());
    } else if (value.is_number()) {
      tokens.push_back(flag);
      tokens.push_back(value.dump());
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& v : value) {
        if (!v.is_number_integer()) throw UsageError("config key '" + key + "' needs integers");
        joined += (joined.empty() ? "" : ",") + v.dump();
      }
      tokens.push_back(flag);
      tokens.push_back(joined);
    } else {
      throw UsageError("unsupported value for config key '" + key + "'");
    }
  }
  return tokens;
}

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path || args.empty()) return args;
  std::vector<std::string> merged{args.front()};
  const auto tokens = config_tokens(*path);
  merged.insert(merged.end(), tokens.begin(), tokens.end());
  merged.insert(merged.end(), args.begin() + 1, args.end());
  return merged;
}

std::string config_line(const AntennaConfig& c) {
  std::ostringstream os;
  os << "m1=" << c.m1 << " m2=" << c.m2 << " n1=" << c.n1 << " n2=" << c.n2;
  return os.str();
}

json plan_json(const EliminationPlan& p) {
  return {{"f1", p.f1},
          {"f2", p.f2},
          {"mode1", std::string(to_string(p.mode1))},
          {"mode2", std::string(to_string(p.mode2))},
          {"cost", p.cost}};
}

json report_json(const DofReport& rep) {
  json cases = json::array();
  for (const auto& c : rep.per_case) {
    cases.push_back({{"case", std::string(to_string(c.label))},
                     {"plan", plan_json(c.plan)},
                     {"sumdof", c.sumdof}});
  }
  const auto& cfg = rep.config;
  return {{"config",
           {{"m1", cfg.m1}, {"m2", cfg.m2}, {"n1", cfg.n1}, {"n2", cfg.n2}, {"swapped", cfg.swapped}}},
          {"r", rep.ris.r},
          {"per_case", cases},
          {"best_case", std::string(to_string(rep.best().label))},
          {"achievable", rep.achievable},
          {"baseline", rep.baseline},
          {"gain", rep.gain},
          {"ris_helps", rep.ris_helps}};
}

int cmd_compute(const ConfigFlags& f, std::ostream& out) {
  const AntennaConfig cfg = f.antennas();
  const DofReport rep = achievable_sumdof(cfg, make_ris(f.r));
  if (f.json) {
    out << report_json(rep).dump(2) << '\n';
    return kOk;
  }
  out << "config      " << config_line(rep.config) << " r=" << rep.ris.r << '\n';
  if (rep.config.swapped) out << "            (users relabelled so that max(m1,n1) >= max(m2,n2))\n";
  for (const auto& c : rep.per_case) {
    out << std::left << std::setw(12) << to_string(c.label) << std::right << "plan f1=" << c.plan.f1
        << " f2=" << c.plan.f2 << " (" << to_string(c.plan.mode1) << '/' << to_string(c.plan.mode2)
        << ") cost " << c.plan.cost << "  sum-DoF " << c.sumdof << '\n';
  }
  out << "achievable  " << rep.achievable << " (" << to_string(rep.best().label) << ")\n"
      << "baseline    " << rep.baseline << '\n'
      << "gain        " << rep.gain << '\n'
      << "ris_helps   " << (rep.ris_helps ? "yes" : "no") << '\n';
  return kOk;
}

struct VerifyFlags {
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::string label;
  std::string out;
  double snr_lo = 80.0;
  double snr_hi = 120.0;
  double slope_tol = 0.15;
};

struct Check {
  std::string name;
  std::string detail;
  bool ok = false;
};

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

int cmd_verify(const ConfigFlags& f, const VerifyFlags& v, std::ostream& out, std::ostream& err) {
  const AntennaConfig cfg = f.antennas();
  const RisConfig ris = make_ris(f.r);
  if (v.tol && !(*v.tol > 0.0)) throw UsageError("--tol must be positive");
  if (!(v.snr_lo >= 60.0) || !(v.snr_hi > v.snr_lo)) {
    throw UsageError("need --snr-hi > --snr-lo >= 60");
  }
  const DofReport rep = achievable_sumdof(cfg, ris);
  CaseLabel label = rep.best().label;
  if (!v.label.empty()) {
    const auto parsed = parse_case_label(v.label);
    if (!parsed) throw UsageError("unknown case '" + v.label + "'");
    if (!case_applies(rep.config, *parsed)) {
      throw UsageError(v.label + " does not apply to " + config_line(rep.config));
    }
    label = *parsed;
  }

  SchemeRun run;
  try {
    run = run_scheme(rep.config, ris, label, v.seed);
  } catch (const std::runtime_error& e) {
    out << "FAIL " << e.what() << '\n';
    return kCheckFailed;
  }
  Tolerances tol;
  if (v.tol) tol.residual = tol.zero_block = *v.tol;
  const SchemeDiagnostics d = diagnose(run.instance, tol);
  const double slope = estimate_slope(run, v.snr_lo, v.snr_hi);
  const int expected = case_sumdof(rep.config, ris, label);

  std::vector<Check> checks;
  checks.push_back({"residual", sci(d.residual_ratio) + " <= " + sci(tol.residual), d.residual_ok});
  checks.push_back(
      {"zero blocks", sci(d.zero_block_ratio) + " <= " + sci(tol.zero_block), d.zero_blocks_ok});
  checks.push_back({"rank H21",
                    std::to_string(d.rank21) + " expected " + std::to_string(d.expected_rank21),
                    d.rank21 == d.expected_rank21});
  checks.push_back({"rank H12",
                    std::to_string(d.rank12) + " expected " + std::to_string(d.expected_rank12),
                    d.rank12 == d.expected_rank12});
  checks.push_back({"generic blocks", d.residual_blocks_full_rank && d.direct_links_full_rank ? "full rank" : "rank deficient",
                    d.residual_blocks_full_rank && d.direct_links_full_rank});
  const StreamAllocation& a = run.alloc;
  std::ostringstream streams;
  streams << "zf " << a.d1_zf << '+' << a.d2_zf << " id " << a.id_tx1 << '+' << a.id_tx2
          << " total " << a.total() << " expected " << expected;
  checks.push_back({"streams", streams.str(), a.total() == expected && run.predicted == expected});
  checks.push_back({"decodable", run.decodable ? "rank test passed" : "rank test failed", run.decodable});
  std::ostringstream sl;
  sl << std::fixed << std::setprecision(4) << slope << " vs " << expected << std::defaultfloat << " (" << v.snr_lo
     << "->" << v.snr_hi << " dB)";
  checks.push_back({"slope", sl.str(), std::abs(slope - expected) <= v.slope_tol});

  const bool pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });

  if (!v.out.empty()) {
    std::ofstream file(v.out);
    file << instance_to_json(run.instance) << '\n';
    if (!file) {
      err << "error: cannot write '" << v.out << "'\n";
      return kCheckFailed;
    }
  }

  if (f.json) {
    json doc = {{"config", report_json(rep)["config"]},
                {"r", ris.r},
                {"seed", v.seed},
                {"channel_draws", run.instance.attempts},
                {"case", std::string(to_string(label))},
                {"plan", plan_json(run.instance.plan)},
                {"psi_max_magnitude", run.instance.psi.max_magnitude},
                {"slope", slope},
                {"expected", expected},
                {"pass", pass}};
    json list = json::array();
    for (const auto& c : checks) list.push_back({{"check", c.name}, {"detail", c.detail}, {"ok", c.ok}});
    doc["checks"] = list;
    out << doc.dump(2) << '\n';
  } else {
    const auto& p = run.instance.plan;
    out << "config         " << config_line(rep.config) << " r=" << ris.r << " seed=" << v.seed
        << '\n'
        << "case           " << to_string(label) << " plan f1=" << p.f1 << " f2=" << p.f2 << " ("
        << to_string(p.mode1) << '/' << to_string(p.mode2) << ") cost " << p.cost << '\n'
        << "channel draws  " << run.instance.attempts << '\n'
        << "max |psi|      " << sci(run.instance.psi.max_magnitude) << '\n';
    for (const auto& c : checks) {
      out << std::left << std::setw(15) << c.name << std::setw(44) << c.detail << std::right
          << (c.ok ? "ok" : "FAILED") << '\n';
    }
    out << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kOk : kCheckFailed;
}

struct SweepFlags {
  std::string vary;
  int m_min = 1, m_max = 20;
  std::optional<int> m;
  int n = 10;
  std::string out;
};

void csv_row(std::ostream& os, int m1, int m2, int n1, int n2, const DofReport& rep) {
  os << m1 << ',' << m2 << ',' << n1 << ',' << n2 << ',' << rep.ris.r << ','
     << to_string(rep.best().label) << ',' << rep.achievable << ',' << rep.baseline << ','
     << rep.gain << ',' << (rep.ris_helps ? 1 : 0) << '\n';
}

int cmd_sweep(const ConfigFlags& f, const SweepFlags& s, const BudgetFlags& b, std::ostream& out,
              std::ostream& err) {
  std::ostringstream csv;
  csv << kCsvHeader << '\n';
  if (s.vary == "m") {
    if (s.m_min < 1 || s.m_max < s.m_min) throw UsageError("need 1 <= --m-min <= --m-max");
    const auto budgets = b.values(std::nullopt);
    for (int m = s.m_min; m <= s.m_max; ++m) {
      const AntennaConfig cfg = canonicalize(m, m, s.n, s.n);
      for (int r : budgets) csv_row(csv, m, m, s.n, s.n, achievable_sumdof(cfg, make_ris(r)));
    }
  } else {
    const int m1 = f.m1.value_or(s.m.value_or(0));
    const int m2 = f.m2.value_or(s.m.value_or(0));
    const int n1 = f.n1.value_or(s.n);
    const int n2 = f.n2.value_or(s.n);
    if (m1 == 0 || m2 == 0) throw UsageError("--vary r needs --m or --m1/--m2");
    const AntennaConfig cfg = canonicalize(m1, m2, n1, n2);
    for (int r : b.values(std::nullopt)) csv_row(csv, m1, m2, n1, n2, achievable_sumdof(cfg, make_ris(r)));
  }

  if (s.out.empty()) {
    out << csv.str();
    return kOk;
  }
  std::ofstream file(s.out, std::ios::binary);
  file << csv.str();
  file.close();
  if (!file) {
    err << "error: cannot write '" << s.out << "'\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_gain(int m, int n, const BudgetFlags& b, std::optional<int> single, bool as_json,
             std::ostream& out) {
  const AntennaConfig cfg = canonicalize(m, m, n, n);
  bool all_match = true;
  json rows = json::array();
  if (!as_json) {
    out << std::setw(8) << "r" << std::setw(14) << "closed_form" << std::setw(14) << "table_gain"
        << "  match\n";
  }
  for (int r : b.values(single)) {
    const int closed = ris_gain_symmetric(m, n, r);
    const int table = achievable_sumdof(cfg, make_ris(r)).gain;
    const bool match = closed == table;
    all_match = all_match && match;
    if (as_json) {
      rows.push_back({{"r", r}, {"closed_form", closed}, {"table_gain", table}, {"match", match}});
    } else {
      out << std::setw(8) << r << std::setw(14) << closed << std::setw(14) << table << "  "
          << (match ? "yes" : "MISMATCH") << '\n';
    }
  }
  if (as_json) {
    out << json{{"m", m}, {"n", n}, {"rows", rows}, {"all_match", all_match}}.dump(2) << '\n';
  }
  return all_match ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-DoF of active-RIS-assisted two-user MIMO interference channels", "risdof"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  ConfigFlags cf;
  VerifyFlags vf;
  SweepFlags sf;
  BudgetFlags sweep_budgets, gain_budgets;
  int gain_m = 0, gain_n = 0;
  std::optional<int> gain_r;

  auto* compute = app.add_subcommand("compute", "sum-DoF per case, baseline and RIS gain");
  add_config_flags(compute, cf);

  auto* verify = app.add_subcommand("verify", "synthesize the scheme on random channels and check it");
  add_config_flags(verify, cf);
  verify->add_option("--seed", vf.seed, "channel seed")->capture_default_str();
  verify->add_option("--tol", vf.tol, "residual and zero-block tolerance");
  verify->add_option("--case", vf.label, "case label (default: best case)");
  verify->add_option("--out", vf.out, "write the instance as JSON");
  verify->add_option("--snr-lo", vf.snr_lo, "lower SNR in dB")->capture_default_str();
  verify->add_option("--snr-hi", vf.snr_hi, "upper SNR in dB")->capture_default_str();
  verify->add_option("--slope-tol", vf.slope_tol, "allowed slope error")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "CSV of sum-DoF over a symmetric M or RIS-size grid");
  add_config_flags(sweep, cf);
  sweep->add_option("--vary", sf.vary, "sweep variable")
      ->required()
      ->check(CLI::IsMember({"m", "r"}));
  sweep->add_option("--m-min", sf.m_min, "first M (vary m)")->capture_default_str();
  sweep->add_option("--m-max", sf.m_max, "last M (vary m)")->capture_default_str();
  sweep->add_option("--m", sf.m, "M1 = M2 (vary r)");
  sweep->add_option("--n", sf.n, "N1 = N2")->capture_default_str();
  sweep->add_option("--out", sf.out, "CSV path (default: stdout)");
  sweep_budgets.add(sweep);

  auto* gain = app.add_subcommand("gain", "symmetric RIS gain, closed form against the table");
  gain->add_option("--m", gain_m, "M1 = M2")->required();
  gain->add_option("--n", gain_n, "N1 = N2")->required();
  gain->add_option("--r", gain_r, "single RIS budget");
  gain->add_option("--config", cf.config, "JSON file with flag values; flags take precedence");
  gain->add_flag("--json", cf.json, "emit JSON instead of text");
  gain_budgets.add(gain);

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const auto usage = [&](const char* what) {
    err << "error: " << what << "\n\n" << app.get_subcommands().front()->help();
    return kUsage;
  };
  try {
    if (compute->parsed()) return cmd_compute(cf, out);
    if (verify->parsed()) return cmd_verify(cf, vf, out, err);
    if (sweep->parsed()) return cmd_sweep(cf, sf, sweep_budgets, out, err);
    if (gain->parsed()) return cmd_gain(gain_m, gain_n, gain_budgets, gain_r, cf.json, out);
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const InvalidArgument& e) {
    return usage(e.what());
  }
  return kUsage;
}

}  // namespace risdof::cli
