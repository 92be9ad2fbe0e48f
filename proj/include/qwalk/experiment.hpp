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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qwalk/coin_angle.hpp"
#include "qwalk/core_state.hpp"
#include "qwalk/entanglement.hpp"
#include "qwalk/measurement.hpp"
#include "qwalk/symmetry.hpp"

namespace qwalk {

/** Parameters of one entanglement trace. */
struct RunConfig {
  BellType bell = BellType::PsiMinus;
  CoinAngle theta = CoinAngle::pi_fraction(1, 4);
  int steps = 30;
  /** nullopt traces out both coins instead of post-selecting. */
  std::optional<PostSelector> selector;
  double rank_tol = kDefaultRankTolerance;
  double class_tol = kDefaultClassTolerance;

  /** Throws InvalidConfigError for steps < 1 or non-positive tolerances. */
  void validate() const;
};

/**
 * Entanglement data for a walk measured at one step. When the post-selected
 * outcome is impossible the probability is 0 and the optional fields are
 * empty.
 */
struct TraceRecord {
  int step = 0;
  double probability = 0.0;
  std::optional<double> log_negativity;
  std::optional<int> reduced_rank;  // of walker 1's reduced state
  std::optional<SymmetryClass> symmetry;

  bool realized() const { return log_negativity.has_value(); }
};

struct EntanglementTrace {
  RunConfig config;
  std::vector<TraceRecord> records;  // steps 1..config.steps in order

  std::vector<std::optional<double>> log_negativities() const;
};

/**
 * Evaluates the measurement of `config` on an already evolved state. Without
 * post-selection the symmetry is that of the full coin-walker state.
 */
TraceRecord evaluate_step(const PureState& state, const RunConfig& config);

/** One record per step 1..steps, each measuring a walk of that length. */
EntanglementTrace run(const RunConfig& config);

struct PeriodOptions {
  /** Absolute tolerance for exact repetition. */
  double tol = 1e-9;
  /** Leading records ignored when matching damped patterns. */
  int transient_steps = 1;
  /** Largest normalized window residual accepted for a damped pattern. */
  double pattern_threshold = 0.5;
};

/**
 * Period of a per-step sequence; missing values are skipped pairwise.
 *
 * First looks for the smallest p <= n/2 with |E(k+p) - E(k)| < tol for every
 * comparable k, which returns 1 for constant sequences. Damped oscillations
 * never repeat exactly, so the fallback drops the transient records and
 * scores each lag by the residual
 *
 *     q(p) = rms(E(k+p) - E(k)) / (sqrt(2) * stddev(E))
 *
 * which is about 1 for uncorrelated data and 0 for an exact repetition. The
 * answer is the local minimum of q with the smallest value, provided it is
 * below the pattern threshold. Multiples of the true period score worse
 * because the damping grows with the lag. Returns nullopt when not periodic.
 */
std::optional<int> detect_period(std::span<const std::optional<double>> values,
                                 const PeriodOptions& options = {});
std::optional<int> detect_period(const EntanglementTrace& trace,
                                 const PeriodOptions& options = {});

inline constexpr std::string_view kCsvHeader =
    "step,theta,bell,selector,probability,log_negativity,reduced_rank,symmetry";

std::string_view selection_name(const std::optional<PostSelector>& selector);

/** Writes the header and one row per record. Throws IoError on sink failure. */
void emit_csv(const EntanglementTrace& trace, std::ostream& out);
void write_csv_file(const EntanglementTrace& trace,
                    const std::filesystem::path& path);

/**
 * log_negativity column of a trace CSV, one entry per step, empty cells as
 * nullopt. Throws IoError on a malformed file.
 */
std::vector<std::optional<double>> read_log_negativity_csv(std::istream& in);
std::vector<std::optional<double>> read_log_negativity_csv(
    const std::filesystem::path& path);

}  // namespace qwalk
