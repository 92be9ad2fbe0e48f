// Copyright 2026 The qwalk Authors
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

// qwalk: two-walker quantum walk entanglement traces.
//
//   qwalk run --bell psi-minus --theta pi/4 --steps 20 --postselect up-up
//   qwalk period --in trace.csv
//   qwalk verify

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/experiment.hpp"
#include "qwalk/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerification = 3;

struct RunArgs {
  std::string bell;
  std::string theta;
  int steps = 30;
  std::string postselect;
  std::string out;
  double rank_tol = qwalk::kDefaultRankTolerance;
  double class_tol = qwalk::kDefaultClassTolerance;
};

struct PeriodArgs {
  std::string in;
  double tol = 1e-9;
};

qwalk::RunConfig make_config(const RunArgs& args) {
  qwalk::RunConfig config;
  const auto bell = qwalk::parse_bell(args.bell);
  if (!bell) throw qwalk::InvalidConfigError("unknown Bell state '" + args.bell + "'");
  config.bell = *bell;
  config.theta = qwalk::CoinAngle::parse(args.theta);
  config.steps = args.steps;
  if (args.postselect != "none") {
    const auto selector = qwalk::parse_selector(args.postselect);
    if (!selector) {
      throw qwalk::InvalidConfigError("unknown post-selection '" + args.postselect + "'");
    }
    config.selector = *selector;
  }
  config.rank_tol = args.rank_tol;
  config.class_tol = args.class_tol;
  config.validate();
  return config;
}

int do_run(const RunArgs& args) {
  const qwalk::RunConfig config = make_config(args);
  const qwalk::EntanglementTrace trace = qwalk::run(config);
  if (args.out.empty()) {
    qwalk::emit_csv(trace, std::cout);
  } else {
    qwalk::write_csv_file(trace, args.out);
  }
  return kExitOk;
}

int do_period(const PeriodArgs& args) {
  if (!(args.tol > 0.0)) throw qwalk::InvalidConfigError("tolerance must be positive");
  const auto values = qwalk::read_log_negativity_csv(std::filesystem::path(args.in));
  qwalk::PeriodOptions options;
  options.tol = args.tol;
  if (const auto period = qwalk::detect_period(values, options)) {
    std::cout << *period << '\n';
  } else {
    std::cout << "not periodic\n";
  }
  return kExitOk;
}

int do_verify() {
  bool all_passed = true;
  for (const auto& result : qwalk::run_verification_suite()) {
    std::cout << (result.passed ? "PASS  " : "FAIL  ") << result.name;
    if (!result.detail.empty()) std::cout << "  [" << result.detail << "]";
    std::cout << '\n';
    all_passed = all_passed && result.passed;
  }
  return all_passed ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement dynamics of two quantum walkers with Bell-state coins"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Compute a per-step entanglement trace as CSV");
  run_cmd->add_option("--bell", run_args.bell, "psi-plus|psi-minus|phi-plus|phi-minus")
      ->required();
  run_cmd->add_option("--theta", run_args.theta, "Coin angle, e.g. pi/4, 2pi/9 or 0.5")
      ->required();
  run_cmd->add_option("--steps", run_args.steps, "Number of steps")->capture_default_str();
  run_cmd
      ->add_option("--postselect", run_args.postselect,
                   "up-up|up-down|down-up|down-down|triplet-plus|singlet|none")
      ->required();
  run_cmd->add_option("--out", run_args.out, "Output CSV path (default: stdout)");
  run_cmd->add_option("--rank-tol", run_args.rank_tol, "Eigenvalue tolerance for ranks")
      ->capture_default_str();
  run_cmd->add_option("--class-tol", run_args.class_tol, "Residual tolerance for symmetry")
      ->capture_default_str();

  PeriodArgs period_args;
  auto* period_cmd = app.add_subcommand("period", "Detect the period of a trace CSV");
  period_cmd->add_option("--in", period_args.in, "Trace CSV written by 'run'")->required();
  period_cmd->add_option("--tol", period_args.tol, "Exact-repetition tolerance")
      ->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run the exchange-symmetry and rank property checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    if (run_cmd->parsed()) return do_run(run_args);
    if (period_cmd->parsed()) return do_period(period_args);
    if (verify_cmd->parsed()) return do_verify();
  } catch (const qwalk::InvalidConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const qwalk::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitInvalidConfig;
}
