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

#include "qwalk/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qwalk {

PositionBasis::PositionBasis(std::vector<int> positions)
    : positions_(std::move(positions)) {
  for (std::size_t i = 1; i < positions_.size(); ++i) {
    if (positions_[i - 1] >= positions_[i]) {
      throw std::invalid_argument("position basis must be strictly increasing");
    }
  }
}

PositionBasis PositionBasis::of_walker(const WalkerPureState& state, int walker) {
  std::vector<int> xs;
  xs.reserve(state.size());
  for (const auto& [pos, amp] : state) xs.push_back(walker == 1 ? pos.x1 : pos.x2);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return PositionBasis(std::move(xs));
}

std::optional<std::size_t> PositionBasis::index_of(int position) const {
  auto it = std::lower_bound(positions_.begin(), positions_.end(), position);
  if (it == positions_.end() || *it != position) return std::nullopt;
  return static_cast<std::size_t>(it - positions_.begin());
}

DensityMatrix::DensityMatrix(PositionBasis basis1, PositionBasis basis2,
                             Eigen::MatrixXcd entries)
    : basis1_(std::move(basis1)),
      basis2_(std::move(basis2)),
      entries_(std::move(entries)) {
  const auto dim = static_cast<Eigen::Index>(basis1_.size() * basis2_.size());
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw std::invalid_argument("density matrix does not match its bases");
  }
}

namespace {

Eigen::VectorXcd amplitude_vector(const WalkerPureState& state,
                                  const PositionBasis& b1,
                                  const PositionBasis& b2) {
  Eigen::VectorXcd v =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(b1.size() * b2.size()));
  for (const auto& [pos, amp] : state) {
    const auto i1 = b1.index_of(pos.x1);
    const auto i2 = b2.index_of(pos.x2);
    if (!i1 || !i2) throw std::invalid_argument("state support outside basis");
    v(static_cast<Eigen::Index>(*i1 * b2.size() + *i2)) = amp;
  }
  return v;
}

}  // namespace

DensityMatrix density_from_walker_pure(const WalkerPureState& state) {
  PositionBasis b1 = PositionBasis::of_walker(state, 1);
  PositionBasis b2 = PositionBasis::of_walker(state, 2);
  const Eigen::VectorXcd v = amplitude_vector(state, b1, b2);
  Eigen::MatrixXcd m = v * v.adjoint();
  return DensityMatrix(std::move(b1), std::move(b2), std::move(m));
}

DensityMatrix density_no_postselect(const PureState& state) {
  std::set<int> xs1;
  std::set<int> xs2;
  for (const auto& [label, amp] : state) {
    xs1.insert(label.x1);
    xs2.insert(label.x2);
  }
  PositionBasis b1({xs1.begin(), xs1.end()});
  PositionBasis b2({xs2.begin(), xs2.end()});
  const auto dim = static_cast<Eigen::Index>(b1.size() * b2.size());

  // One walker vector per coin sector; the coins are orthogonal, so tracing
  // them out sums the sector projectors.
  std::array<Eigen::VectorXcd, 4> sectors;
  for (auto& v : sectors) v = Eigen::VectorXcd::Zero(dim);
  for (const auto& [label, amp] : state) {
    const std::size_t s =
        2 * static_cast<std::size_t>(label.c1) + static_cast<std::size_t>(label.c2);
    const auto i = static_cast<Eigen::Index>(*b1.index_of(label.x1) * b2.size() +
                                             *b2.index_of(label.x2));
    sectors[s](i) = amp;
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& v : sectors) {
    if (!v.isZero(0.0)) m.noalias() += v * v.adjoint();
  }
  return DensityMatrix(std::move(b1), std::move(b2), std::move(m));
}

Eigen::MatrixXcd partial_transpose(const DensityMatrix& rho, Walker which) {
  const std::size_t n1 = rho.basis1().size();
  const std::size_t n2 = rho.basis2().size();
  const Eigen::MatrixXcd& m = rho.matrix();
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      for (std::size_t c = 0; c < n1; ++c) {
        for (std::size_t d = 0; d < n2; ++d) {
          out(rho.index(a, b), rho.index(c, d)) =
              which == Walker::Second ? m(rho.index(a, d), rho.index(c, b))
                                      : m(rho.index(c, b), rho.index(a, d));
        }
      }
    }
  }
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return {};
  if (m.imag().isZero(0.0)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        m.real(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double log_negativity(const DensityMatrix& rho, Walker which) {
  const Eigen::VectorXd spectrum = hermitian_eigenvalues(partial_transpose(rho, which));
  double total = 0.0;
  for (double lambda : spectrum) {
    if (lambda <= -kNegativityFloor) total += std::abs(lambda) - lambda;
  }
  return std::log2(total + 1.0);
}

Eigen::MatrixXcd reduced_single_walker(const DensityMatrix& rho, Walker which) {
  const std::size_t n1 = rho.basis1().size();
  const std::size_t n2 = rho.basis2().size();
  const Eigen::MatrixXcd& m = rho.matrix();
  if (which == Walker::First) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(
        static_cast<Eigen::Index>(n1), static_cast<Eigen::Index>(n1));
    for (std::size_t a = 0; a < n1; ++a)
      for (std::size_t c = 0; c < n1; ++c)
        for (std::size_t b = 0; b < n2; ++b)
          out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(c)) +=
              m(rho.index(a, b), rho.index(c, b));
    return out;
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(n2), static_cast<Eigen::Index>(n2));
  for (std::size_t b = 0; b < n2; ++b)
    for (std::size_t d = 0; d < n2; ++d)
      for (std::size_t a = 0; a < n1; ++a)
        out(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(d)) +=
            m(rho.index(a, b), rho.index(a, d));
  return out;
}

int numerical_rank(const Eigen::MatrixXcd& m, double tol) {
  const Eigen::VectorXd spectrum = hermitian_eigenvalues(m);
  return static_cast<int>(
      std::count_if(spectrum.begin(), spectrum.end(),
                    [tol](double l) { return std::abs(l) > tol; }));
}

}  // namespace qwalk
