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

#include "qwalk/experiment.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/format.hpp"
#include "qwalk/operators.hpp"

namespace qwalk {

void RunConfig::validate() const {
  if (steps < 1) throw InvalidConfigError("steps must be at least 1");
  if (!(rank_tol > 0.0)) throw InvalidConfigError("rank tolerance must be positive");
  if (!(class_tol > 0.0)) {
    throw InvalidConfigError("classification tolerance must be positive");
  }
}

std::vector<std::optional<double>> EntanglementTrace::log_negativities() const {
  std::vector<std::optional<double>> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.log_negativity);
  return out;
}

TraceRecord evaluate_step(const PureState& state, const RunConfig& config) {
  TraceRecord record;
  record.step = state.step_count();
  if (!config.selector) {
    const DensityMatrix rho = density_no_postselect(state);
    record.probability = 1.0;
    record.log_negativity = log_negativity(rho);
    record.reduced_rank = numerical_rank(
        reduced_single_walker(rho, Walker::First), config.rank_tol);
    record.symmetry = classify(state, config.class_tol);
    return record;
  }

  PostSelectionResult selected;
  try {
    selected = post_select(state, *config.selector);
  } catch (const ZeroProbabilityError&) {
    return record;
  }
  const DensityMatrix rho = density_from_walker_pure(selected.walker_state);
  record.probability = selected.probability;
  record.log_negativity = log_negativity(rho);
  record.reduced_rank = numerical_rank(
      reduced_single_walker(rho, Walker::First), config.rank_tol);
  record.symmetry = classify(selected.walker_state, config.class_tol);
  return record;
}

EntanglementTrace run(const RunConfig& config) {
  config.validate();
  EntanglementTrace trace{config, {}};
  trace.records.reserve(static_cast<std::size_t>(config.steps));
  // Measurement is terminal, so step n measures a fresh n-step walk. The
  // n-step state is the n-fold composition either way, so it is carried
  // forward rather than recomputed.
  const CoinMatrix coin = coin_matrix(config.theta);
  PureState state = build_initial(config.bell);
  for (int n = 1; n <= config.steps; ++n) {
    state = apply_step(state, coin);
    trace.records.push_back(evaluate_step(state, config));
  }
  return trace;
}

namespace {

std::optional<int> exact_period(std::span<const std::optional<double>> values,
                                double tol) {
  const std::size_t n = values.size();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    bool compared = false;
    bool repeats = true;
    for (std::size_t k = 0; k + p < n && repeats; ++k) {
      if (!values[k] || !values[k + p]) continue;
      compared = true;
      repeats = std::abs(*values[k + p] - *values[k]) < tol;
    }
    if (compared && repeats) return static_cast<int>(p);
  }
  return std::nullopt;
}

std::optional<int> damped_period(std::span<const std::optional<double>> values,
                                 const PeriodOptions& options) {
  const std::size_t skip = std::min(
      values.size(), static_cast<std::size_t>(std::max(0, options.transient_steps)));
  const auto tail = values.subspan(skip);
  const std::size_t max_lag = tail.size() / 2;
  if (max_lag < 2) return std::nullopt;

  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& v : tail) {
    if (!v) continue;
    sum += *v;
    ++count;
  }
  if (count < 2) return std::nullopt;
  const double mean = sum / static_cast<double>(count);
  double variance = 0.0;
  for (const auto& v : tail) {
    if (v) variance += (*v - mean) * (*v - mean);
  }
  variance /= static_cast<double>(count);
  if (!(variance > 0.0)) return std::nullopt;
  const double scale = std::sqrt(2.0 * variance);

  constexpr double kNoData = std::numeric_limits<double>::infinity();
  std::vector<double> residual(max_lag + 1, kNoData);
  for (std::size_t p = 1; p <= max_lag; ++p) {
    double acc = 0.0;
    std::size_t pairs = 0;
    for (std::size_t k = 0; k + p < tail.size(); ++k) {
      if (!tail[k] || !tail[k + p]) continue;
      const double d = *tail[k + p] - *tail[k];
      acc += d * d;
      ++pairs;
    }
    if (pairs > 0) residual[p] = std::sqrt(acc / static_cast<double>(pairs)) / scale;
  }

  std::optional<std::size_t> best;
  for (std::size_t p = 2; p <= max_lag; ++p) {
    const bool left = residual[p] < residual[p - 1];
    const bool right = p == max_lag || residual[p] <= residual[p + 1];
    if (left && right && (!best || residual[p] < residual[*best])) best = p;
  }
  if (best && residual[*best] < options.pattern_threshold) {
    return static_cast<int>(*best);
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> detect_period(std::span<const std::optional<double>> values,
                                 const PeriodOptions& options) {
  if (values.size() < 2) return std::nullopt;
  if (auto p = exact_period(values, options.tol)) return p;
  return damped_period(values, options);
}

std::optional<int> detect_period(const EntanglementTrace& trace,
                                 const PeriodOptions& options) {
  const auto values = trace.log_negativities();
  return detect_period(std::span<const std::optional<double>>(values), options);
}

std::string_view selection_name(const std::optional<PostSelector>& selector) {
  return selector ? to_string(*selector) : std::string_view("none");
}

void emit_csv(const EntanglementTrace& trace, std::ostream& out) {
  const std::string theta = trace.config.theta.to_string();
  const std::string_view bell = to_string(trace.config.bell);
  const std::string_view selector = selection_name(trace.config.selector);

  out << kCsvHeader << '\n';
  for (const TraceRecord& r : trace.records) {
    out << r.step << ',' << theta << ',' << bell << ',' << selector << ','
        << format_real(r.probability) << ',';
    if (r.log_negativity) out << format_real(*r.log_negativity);
    out << ',';
    if (r.reduced_rank) out << *r.reduced_rank;
    out << ',' << (r.symmetry ? to_string(*r.symmetry) : std::string_view("na"))
        << '\n';
  }
  out.flush();
  if (!out) throw IoError("failed to write trace CSV");
}

void write_csv_file(const EntanglementTrace& trace,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  emit_csv(trace, out);
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

std::vector<std::optional<double>> read_log_negativity_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("trace CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw IoError("unexpected trace CSV header: " + line);

  std::vector<std::optional<double>> values;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 8) {
      throw IoError("line " + std::to_string(line_no) + ": expected 8 fields");
    }
    int step = 0;
    auto [sp, se] = std::from_chars(fields[0].data(),
                                    fields[0].data() + fields[0].size(), step);
    if (se != std::errc() || sp != fields[0].data() + fields[0].size() ||
        step != static_cast<int>(values.size()) + 1) {
      throw IoError("line " + std::to_string(line_no) +
                    ": steps must run 1, 2, 3, ... without gaps");
    }
    const std::string_view cell = fields[5];
    if (cell.empty()) {
      values.emplace_back(std::nullopt);
      continue;
    }
    double value = 0.0;
    auto [vp, ve] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ve != std::errc() || vp != cell.data() + cell.size()) {
      throw IoError("line " + std::to_string(line_no) +
                    ": invalid log_negativity '" + std::string(cell) + "'");
    }
    values.emplace_back(value);
  }
  if (in.bad()) throw IoError("failed reading trace CSV");
  return values;
}

std::vector<std::optional<double>> read_log_negativity_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return read_log_negativity_csv(in);
}

}  // namespace qwalk
