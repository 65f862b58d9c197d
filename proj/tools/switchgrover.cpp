// Copyright 2026 The switchgrover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "switchgrover/framework1.hpp"
#include "switchgrover/framework2.hpp"
#include "switchgrover/grover.hpp"
#include "switchgrover/hooks.hpp"
#include "switchgrover/sweep.hpp"
#include "switchgrover/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct SweepFlags {
  int n = 0;
  std::string k;
  int noise_points = 0;
  double theta = 0.0;
  std::string frameworks;
  std::string out;
  std::string config;
};

int run_sweep(const SweepFlags& f, const CLI::App& cmd) {
  sg::sweep::SweepConfig cfg;
  try {
    if (!f.config.empty()) {
      std::ifstream in(f.config);
      if (!in) {
        std::cerr << "error: cannot read config file " << f.config << "\n";
        return kExitIo;
      }
      sg::sweep::apply_config_file(cfg, in);
    }
    if (cmd.count("--n")) cfg.n = f.n;
    if (cmd.count("--k")) cfg.k_list = sg::sweep::parse_int_list(f.k);
    if (cmd.count("--noise-points")) cfg.noise_points = f.noise_points;
    if (cmd.count("--theta")) cfg.theta = f.theta;
    if (cmd.count("--frameworks")) sg::sweep::set_frameworks(cfg, f.frameworks);
    if (cmd.count("--out")) cfg.output_path = f.out;
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto rows = sg::sweep::run_sweep(cfg);
  if (cfg.output_path.empty() || cfg.output_path == "-") {
    sg::sweep::write_csv(rows, std::cout);
    std::cout.flush();
    return std::cout ? kExitOk : kExitIo;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << cfg.output_path << " for writing\n";
    return kExitIo;
  }
  sg::sweep::write_csv(rows, out);
  out.close();
  if (!out) {
    std::cerr << "error: failed writing " << cfg.output_path << "\n";
    return kExitIo;
  }
  std::cerr << "wrote " << rows.size() << " rows to " << cfg.output_path << "\n";
  return kExitOk;
}

int run_verify(const std::string& preset_name, bool poison) {
  const auto start = std::chrono::steady_clock::now();
  const sg::verify::VerifyGrid grid = sg::verify::preset(preset_name);
  if (poison) sg::hooks::set_closed_form_poison(true);
  const auto reports = sg::verify::verify_all(grid);
  std::size_t failed = 0;
  for (const auto& r : reports) {
    std::cout << sg::verify::format_report(r) << "\n";
    if (!r.passed) ++failed;
  }
  const auto claims = sg::verify::published_formula_claims(grid);
  std::size_t claim_mismatches = 0;
  double worst = 0.0;
  for (const auto& c : claims) {
    if (!c.passed) ++claim_mismatches;
    if (c.max_abs_error > worst) worst = c.max_abs_error;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "\npublished closed-form displays (informational, not gating):\n";
  for (const auto& c : claims) {
    if (!c.passed) std::cout << "  " << sg::verify::format_report(c) << "\n";
  }
  std::printf("  %zu of %zu display checks differ from the oracle; largest difference %.3e\n", claim_mismatches,
              claims.size(), worst);
  std::printf("\n%zu cases, %zu passed, %zu failed (%.2f s, preset %s)\n", reports.size(), reports.size() - failed,
              failed, secs, preset_name.c_str());
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int run_point(int n, int k, double noise, double theta, const std::string& framework) {
  double p = 0.0;
  try {
    const sg::GroverConfig cfg(n, 0);
    const sg::NoiseParams t = sg::NoiseParams::from_noise_strength(noise);
    const sg::ControlSpec spec(theta);
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (framework == "none") {
      p = sg::noisy_success_probability(k, t, cfg.dim());
    } else if (framework == "f1") {
      p = theta == 0.5 ? sg::p_framework1(k, t, cfg.dim()) : sg::p_framework1_sim(k, t, spec, cfg);
    } else {
      p = (std::size_t{1} << k) * cfg.dim() <= sg::kMaxDenseDim ? sg::p_framework2_sim(k, t, spec, cfg)
                                                                 : sg::p_framework2_symbolic(k, t, spec, cfg.dim());
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::printf("%.12f\n", p);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noisy Grover search with quantum-switch error mitigation"};
  app.require_subcommand(1);

  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Success probability against noise strength (1 - t), as CSV");
  sweep->add_option("--n", sweep_flags.n, "Number of qubits (default 4)");
  sweep->add_option("--k", sweep_flags.k, "Comma-separated iteration counts (default 1,2,3)");
  sweep->add_option("--noise-points", sweep_flags.noise_points, "Samples of (1 - t) in [0, 1] (default 101)");
  sweep->add_option("--theta", sweep_flags.theta, "Control amplitude theta (default 0.5)");
  sweep->add_option("--frameworks", sweep_flags.frameworks, "Subset of none,f1,f2 (default all)");
  sweep->add_option("--out", sweep_flags.out, "Output CSV path (default stdout)");
  sweep->add_option("--config", sweep_flags.config, "key=value config file; flags take precedence");

  std::string preset = "quick";
  bool poison = false;
  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against the brute-force oracle");
  verify->add_option("--preset", preset, "Parameter grid")->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--poison-closed-forms", poison)->group("");

  int point_n = 4;
  int point_k = 1;
  double point_noise = 0.0;
  double point_theta = 0.5;
  std::string framework = "none";
  auto* point = app.add_subcommand("point", "Single success probability");
  point->add_option("--n", point_n, "Number of qubits");
  point->add_option("--k", point_k, "Grover iterations");
  point->add_option("--noise", point_noise, "Noise strength 1 - t");
  point->add_option("--theta", point_theta, "Control amplitude theta");
  point->add_option("--framework", framework, "none, f1 or f2")->check(CLI::IsMember({"none", "f1", "f2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*sweep) return run_sweep(sweep_flags, *sweep);
  if (*verify) return run_verify(preset, poison);
  return run_point(point_n, point_k, point_noise, point_theta, framework);
}
