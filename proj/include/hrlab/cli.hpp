/**
 * Copyright 2026 The hrlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command line front end. Exit codes: 0 all assertions hold, 1 an assertion
// failed (including any INCONSISTENT verdict), 2 usage or configuration error.

#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hrlab/campaign.hpp"

namespace hrlab {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hrlab: exact Hodge-Riemann checks for Schur classes of positive (1,1)-forms"};
  app.require_subcommand(1);

  CampaignConfig cfg;
  std::string d_text, e_text, lambda_text, t_text, out_path;
  bool lambda_given = false;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub, const char* d_default, const char* e_default) {
    sub->add_option("--d", d_text, "dimension or range a..b (2..8)")->default_str(d_default);
    sub->add_option("--e", e_text, "rank or range a..b")->default_str(e_default);
    sub->add_option_function<std::string>(
        "--lambda", [&](const std::string& s) { lambda_text = s, lambda_given = true; }, "partition such as 2,1; \"\" is empty");
    sub->add_option("--trials", cfg.trials, "random instances per configuration");
    sub->add_option("--seed", seed, "campaign seed (required for random data)");
    sub->add_option("--out", out_path, "report path (default stdout)");
    sub->add_option("--jobs", cfg.jobs, "worker threads");
    sub->add_option("--forms", cfg.forms_path, "JSON file {\"forms\": [...], \"h\": ...}");
  };

  auto* verify = app.add_subcommand("verify-hr", "signature of the Schur intersection form");
  add_common(verify, "2..4", "1..2");
  auto* family = app.add_subcommand("family", "properties (A)/(B), recursion and augmentation verdicts");
  add_common(family, "4", "2");
  family->add_option("--t-samples", t_text, "comma separated rationals");
  family->add_option("--check", cfg.checks, "A, B, recursion, aug1, aug2")->delimiter(',');
  family->add_option("--builtin", cfg.builtin, "remark-3.7 or minkowski");
  family->add_option("--i", cfg.i_spec, "index, range or d");
  auto* scan = app.add_subcommand("gamma-scan", "HR scan of convex combinations of Schur classes");
  add_common(scan, "4", "2");
  scan->add_option("--grid", cfg.grid, "simplex grid resolution");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& ex) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  try {
    if (sub->count("--seed")) cfg.seed = seed;
    cfg.d = parse_range(d_text.empty() ? (cfg.command == "verify-hr" ? "2..4" : "4") : d_text, "--d");
    cfg.e = parse_range(e_text.empty() ? (cfg.command == "verify-hr" ? "1..2" : "2") : e_text, "--e");
    if (lambda_given) {
      try {
        cfg.lambda = Partition::parse(lambda_text);
      } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
      }
    }
    if (!t_text.empty()) cfg.t_samples = parse_rational_list(t_text);
    json report = run_campaign(cfg);
    std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path);
      if (!f) throw UsageError("cannot write " + out_path);
      f << text;
    }
    bool pass = report["summary"]["pass"].get<bool>();
    err << cfg.command << ": " << (pass ? "PASS" : "FAIL") << " (" << report["summary"].dump() << ")\n";
    return pass ? kExitPass : kExitFail;
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hrlab
