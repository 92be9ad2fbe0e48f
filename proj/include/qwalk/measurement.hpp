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

#include <array>
#include <map>
#include <optional>
#include <string_view>

#include "qwalk/core_state.hpp"

namespace qwalk {

/** Outcomes of the local and triplet-singlet coin measurements. */
enum class PostSelector { UpUp, UpDown, DownUp, DownDown, TripletPlus, Singlet };

enum class MeasurementBasis { Local, TripletSinglet };

inline constexpr std::array<PostSelector, 6> kAllSelectors = {
    PostSelector::UpUp,     PostSelector::UpDown,      PostSelector::DownUp,
    PostSelector::DownDown, PostSelector::TripletPlus, PostSelector::Singlet};

/** Probability at or below which an outcome is considered impossible. */
inline constexpr double kZeroProbability = 1e-15;

std::array<PostSelector, 4> selectors_of(MeasurementBasis basis);

std::string_view to_string(PostSelector selector);
std::optional<PostSelector> parse_selector(std::string_view text);

/**
 * Coin vector the selector projects onto, as real components over the
 * sectors (UU, UD, DU, DD).
 */
std::array<double, 4> coin_vector(PostSelector selector);

struct PostSelectionResult {
  WalkerPureState walker_state;  // normalized
  double probability;
};

/**
 * Projects the coins onto the selector's state and strips the coin factor.
 * Throws ZeroProbabilityError if the outcome probability is at or below
 * kZeroProbability.
 */
PostSelectionResult post_select(const PureState& state, PostSelector selector);

/** Squared norm of the projection; no threshold applied. */
double outcome_probability(const PureState& state, PostSelector selector);

/** Outcome probabilities over one basis, with impossible outcomes set to 0. */
std::map<PostSelector, double> outcome_distribution(
    const PureState& state, MeasurementBasis basis);

}  // namespace qwalk
