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

// Test-only reference implementations. Nothing here calls the sparse
// evolution, the post-selection, or the library's density matrix code.

#pragma once

#include <Eigen/Dense>
#include <random>

#include "qwalk/core_state.hpp"

namespace qwalk::oracle {

// Dense layout over (c1, c2, x1, x2) with x in [-radius, radius]; the
// composite ordering matches (H_c1 (x) H_c2) (x) (H_w1 (x) H_w2).
Eigen::Index dense_dim(int radius);
Eigen::Index oracle_index(const BasisLabel& label, int radius);

/** C(theta) (x) C(theta) acting on the coins, identity on the walkers. */
Eigen::MatrixXd coin_operator(double theta, int radius);

/**
 * Sum over coin sectors of |c1 c2><c1 c2| (x) sum_ij |i +- 1, j +- 1><i, j|,
 * truncated to the lattice (terms leaving it are dropped).
 */
Eigen::MatrixXd shift_operator(int radius);

/** S (C (x) I). */
Eigen::MatrixXd evolution_operator(double theta, int radius);

Eigen::VectorXcd to_oracle_vector(const PureState& state, int radius);

/** Max |sparse - dense| over every lattice element. */
double max_deviation(const PureState& state, const Eigen::VectorXcd& dense,
                     int radius);

/** Amplitude matrix A(x1, x2) over the bounding box of the support. */
Eigen::MatrixXcd amplitude_matrix(const WalkerPureState& state);

/** log2((sum of Schmidt coefficients)^2) from the singular values. */
double schmidt_log_negativity(const WalkerPureState& state);

/**
 * Spectrum of |psi><psi|^T2 assembled entry by entry over the bounding box.
 */
Eigen::VectorXd brute_partial_transpose_spectrum(const WalkerPureState& state);

/** A A^dagger: walker 1's reduced state over the bounding box. */
Eigen::MatrixXcd brute_reduced_first(const WalkerPureState& state);

/**
 * Random normalized walker states of the forms
 *   sum_ij a_ij (|i,j> - |j,i>)                  (antisymmetric)
 *   sum_{i<j} a_ij (|i,j> + |j,i>) + sum_i b_i |i,i>   (symmetric)
 * over positions in [-radius, radius].
 */
WalkerPureState random_antisymmetric(std::mt19937_64& rng, int pairs, int radius);
WalkerPureState random_symmetric(std::mt19937_64& rng, int pairs, int radius);

}  // namespace qwalk::oracle
