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

#include <Eigen/Dense>

#include "qwalk/coin_angle.hpp"
#include "qwalk/core_state.hpp"

namespace qwalk {

/**
 * Real 2x2 coin in the (Up, Down) basis:
 *
 *     [ cos t   sin t ]
 *     [ sin t  -cos t ]
 *
 * The family is real, symmetric and orthogonal, hence unitary and Hermitian.
 */
using CoinMatrix = Eigen::Matrix2d;

CoinMatrix coin_matrix(const CoinAngle& angle);

/**
 * One step of the two-walker evolution: the same coin on both coins, then
 * each walker moves +1 if its coin is Up and -1 if Down.
 *
 * The shift is a relabelling of sparse entries. Every output element has a
 * single source position pair, so no amplitudes from different positions are
 * ever summed, and the coin sum is grouped so that the result commutes
 * bit-exactly with exchange of the two parties.
 */
PureState apply_step(const PureState& state, const CoinAngle& angle);
PureState apply_step(const PureState& state, const CoinMatrix& coin);

/** n-fold apply_step; n == 0 returns the input. Throws on negative n. */
PureState apply_n_steps(PureState state, const CoinAngle& angle, int n);

}  // namespace qwalk
