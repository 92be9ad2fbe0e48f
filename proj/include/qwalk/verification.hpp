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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qwalk/coin_angle.hpp"
#include "qwalk/core_state.hpp"
#include "qwalk/measurement.hpp"
#include "qwalk/symmetry.hpp"

namespace qwalk {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationOptions {
  std::uint64_t seed = 0x5eed'2024;
  int random_states = 100;
  int max_support = 16;
  int max_steps = 12;
};

/** Coin angles the property checks sweep: pi/6, pi/4, 2pi/9, pi/3. */
std::vector<CoinAngle> verification_angles();

/**
 * Normalized random state with 1..max_support entries, positions drawn from
 * [-radius, radius] and complex Gaussian amplitudes.
 */
PureState random_pure_state(std::mt19937_64& rng, int max_support, int radius);
WalkerPureState random_walker_state(std::mt19937_64& rng, int max_support,
                                    int radius);

/**
 * Walker symmetry forced by post-selecting `selector` after a walk from
 * `bell`: identical local outcomes and the triplet keep the initial class,
 * the singlet flips it, and mixed local outcomes leave no symmetry.
 */
SymmetryClass expected_walker_symmetry(BellType bell, PostSelector selector);

PropertyResult check_exchange_covariance(const VerificationOptions& options);
PropertyResult check_symmetry_conservation(const VerificationOptions& options);
PropertyResult check_local_tensor_structure(const VerificationOptions& options);
PropertyResult check_norm_preservation(const VerificationOptions& options);
PropertyResult check_local_rank_bound(const VerificationOptions& options);
PropertyResult check_postselection_symmetry(const VerificationOptions& options);
PropertyResult check_constant_entanglement(const VerificationOptions& options);
PropertyResult check_down_spectrum(const VerificationOptions& options);

/** All of the above, in order. */
std::vector<PropertyResult> run_verification_suite(
    const VerificationOptions& options = {});

}  // namespace qwalk
