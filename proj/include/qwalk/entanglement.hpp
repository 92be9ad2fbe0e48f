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
#include <cstddef>
#include <optional>
#include <vector>

#include "qwalk/core_state.hpp"

namespace qwalk {

/** Eigenvalues in (-kNegativityFloor, 0) count as zero in the negativity. */
inline constexpr double kNegativityFloor = 1e-10;
inline constexpr double kDefaultRankTolerance = 1e-10;

/** Strictly increasing lattice positions indexing one walker's factor. */
class PositionBasis {
 public:
  PositionBasis() = default;
  /** Throws std::invalid_argument unless strictly increasing. */
  explicit PositionBasis(std::vector<int> positions);

  /** Sorted unique positions of the given walker (1 or 2) in the support. */
  static PositionBasis of_walker(const WalkerPureState& state, int walker);

  const std::vector<int>& positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  int operator[](std::size_t i) const { return positions_[i]; }
  /** Index of `position`, or nullopt if absent. */
  std::optional<std::size_t> index_of(int position) const;

  friend bool operator==(const PositionBasis&, const PositionBasis&) = default;

 private:
  std::vector<int> positions_;
};

enum class Walker { First = 1, Second = 2 };

/**
 * Density matrix of the two walkers over basis1 x basis2. Row/column index of
 * |basis1[i], basis2[j]> is i * basis2.size() + j.
 */
class DensityMatrix {
 public:
  /** Throws std::invalid_argument on a dimension mismatch. */
  DensityMatrix(PositionBasis basis1, PositionBasis basis2,
                Eigen::MatrixXcd entries);

  const PositionBasis& basis1() const { return basis1_; }
  const PositionBasis& basis2() const { return basis2_; }
  const Eigen::MatrixXcd& matrix() const { return entries_; }
  Eigen::Index dimension() const { return entries_.rows(); }

  Eigen::Index index(std::size_t i1, std::size_t i2) const {
    return static_cast<Eigen::Index>(i1 * basis2_.size() + i2);
  }

 private:
  PositionBasis basis1_;
  PositionBasis basis2_;
  Eigen::MatrixXcd entries_;
};

/** |psi><psi| over the minimal support bases of the two walkers. */
DensityMatrix density_from_walker_pure(const WalkerPureState& state);

/** Walker state with both coins traced out. */
DensityMatrix density_no_postselect(const PureState& state);

/**
 * Transposes the indices of one walker:
 * <a,b| rho^T2 |c,d> = <a,d| rho |c,b>, and likewise for the first walker.
 */
Eigen::MatrixXcd partial_transpose(
    const DensityMatrix& rho, Walker which = Walker::Second);

/**
 * Eigenvalues of a Hermitian matrix in ascending order. Matrices with an
 * exactly zero imaginary part go through the real symmetric solver.
 */
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m);

/** log2(sum_j (|l_j| - l_j) + 1) over the partial-transpose spectrum. */
double log_negativity(const DensityMatrix& rho, Walker which = Walker::Second);

/** Partial trace over the other walker; indexed by that walker's basis. */
Eigen::MatrixXcd reduced_single_walker(const DensityMatrix& rho, Walker which);

/** Number of eigenvalues with magnitude above `tol`. */
int numerical_rank(const Eigen::MatrixXcd& m, double tol = kDefaultRankTolerance);

}  // namespace qwalk
