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

#include "qwalk/measurement.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace qwalk {

namespace {

constexpr std::pair<PostSelector, std::string_view> kSelectorNames[] = {
    {PostSelector::UpUp, "up-up"},
    {PostSelector::UpDown, "up-down"},
    {PostSelector::DownUp, "down-up"},
    {PostSelector::DownDown, "down-down"},
    {PostSelector::TripletPlus, "triplet-plus"},
    {PostSelector::Singlet, "singlet"},
};

constexpr std::size_t sector_index(const BasisLabel& k) {
  return 2 * static_cast<std::size_t>(k.c1) + static_cast<std::size_t>(k.c2);
}

// Unnormalized walker amplitudes <v|_coin |state>.
WalkerPureState project(const PureState& state, PostSelector selector) {
  const std::array<double, 4> v = coin_vector(selector);
  std::vector<WalkerPureState::Entry> out;
  const auto& entries = state.entries();
  std::size_t i = 0;
  while (i < entries.size()) {
    const PositionPair pos{entries[i].first.x1, entries[i].first.x2};
    Complex w{0.0, 0.0};
    bool touched = false;
    while (i < entries.size() && entries[i].first.x1 == pos.x1 &&
           entries[i].first.x2 == pos.x2) {
      const double weight = v[sector_index(entries[i].first)];
      if (weight != 0.0) {
        w += weight * entries[i].second;
        touched = true;
      }
      ++i;
    }
    if (touched) out.emplace_back(pos, w);
  }
  return WalkerPureState(std::move(out), state.step_count());
}

}  // namespace

std::array<PostSelector, 4> selectors_of(MeasurementBasis basis) {
  if (basis == MeasurementBasis::Local) {
    return {PostSelector::UpUp, PostSelector::UpDown, PostSelector::DownUp,
            PostSelector::DownDown};
  }
  return {PostSelector::UpUp, PostSelector::DownDown,
          PostSelector::TripletPlus, PostSelector::Singlet};
}

std::string_view to_string(PostSelector selector) {
  for (const auto& [s, name] : kSelectorNames) {
    if (s == selector) return name;
  }
  return "unknown";
}

std::optional<PostSelector> parse_selector(std::string_view text) {
  for (const auto& [s, name] : kSelectorNames) {
    if (name == text) return s;
  }
  return std::nullopt;
}

std::array<double, 4> coin_vector(PostSelector selector) {
  const double h = 1.0 / std::numbers::sqrt2;
  switch (selector) {
    case PostSelector::UpUp:
      return {1.0, 0.0, 0.0, 0.0};
    case PostSelector::UpDown:
      return {0.0, 1.0, 0.0, 0.0};
    case PostSelector::DownUp:
      return {0.0, 0.0, 1.0, 0.0};
    case PostSelector::DownDown:
      return {0.0, 0.0, 0.0, 1.0};
    case PostSelector::TripletPlus:
      return {0.0, h, h, 0.0};
    case PostSelector::Singlet:
      return {0.0, h, -h, 0.0};
  }
  return {};
}

double outcome_probability(const PureState& state, PostSelector selector) {
  return project(state, selector).norm_squared();
}

PostSelectionResult post_select(const PureState& state, PostSelector selector) {
  WalkerPureState projected = project(state, selector);
  const double probability = projected.norm_squared();
  if (!(probability > kZeroProbability)) {
    throw ZeroProbabilityError("outcome " + std::string(to_string(selector)) +
                               " has zero probability at step " +
                               std::to_string(state.step_count()));
  }
  return {projected.scaled(1.0 / std::sqrt(probability)), probability};
}

std::map<PostSelector, double> outcome_distribution(
    const PureState& state, MeasurementBasis basis) {
  std::map<PostSelector, double> out;
  for (PostSelector s : selectors_of(basis)) {
    const double p = outcome_probability(state, s);
    out[s] = p > kZeroProbability ? p : 0.0;
  }
  return out;
}

}  // namespace qwalk
