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

#include "oracle/dense_walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qwalk::oracle {

namespace {

Eigen::Index width(int radius) { return 2 * radius + 1; }

struct Box {
  int lo1, hi1, lo2, hi2;
  Eigen::Index n1() const { return hi1 - lo1 + 1; }
  Eigen::Index n2() const { return hi2 - lo2 + 1; }
};

Box bounding_box(const WalkerPureState& state) {
  Box b{std::numeric_limits<int>::max(), std::numeric_limits<int>::min(),
        std::numeric_limits<int>::max(), std::numeric_limits<int>::min()};
  for (const auto& [pos, amp] : state) {
    b.lo1 = std::min(b.lo1, pos.x1);
    b.hi1 = std::max(b.hi1, pos.x1);
    b.lo2 = std::min(b.lo2, pos.x2);
    b.hi2 = std::max(b.hi2, pos.x2);
  }
  return b;
}

}  // namespace

Eigen::Index dense_dim(int radius) { return 4 * width(radius) * width(radius); }

Eigen::Index oracle_index(const BasisLabel& label, int radius) {
  const Eigen::Index w = width(radius);
  const Eigen::Index coins = 2 * static_cast<int>(label.c1) + static_cast<int>(label.c2);
  return (coins * w + (label.x1 + radius)) * w + (label.x2 + radius);
}

Eigen::MatrixXd coin_operator(double theta, int radius) {
  Eigen::Matrix2d c;
  c << std::cos(theta), std::sin(theta), std::sin(theta), -std::cos(theta);
  Eigen::Matrix4d cc;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) cc(i, j) = c(i / 2, j / 2) * c(i % 2, j % 2);
  const Eigen::Index walkers = width(radius) * width(radius);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(4 * walkers, 4 * walkers);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out.block(i * walkers, j * walkers, walkers, walkers) =
          cc(i, j) * Eigen::MatrixXd::Identity(walkers, walkers);
  return out;
}

Eigen::MatrixXd shift_operator(int radius) {
  const Eigen::Index d = dense_dim(radius);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d, d);
  for (auto c1 : {CoinFace::Up, CoinFace::Down}) {
    for (auto c2 : {CoinFace::Up, CoinFace::Down}) {
      const int s1 = c1 == CoinFace::Up ? 1 : -1;
      const int s2 = c2 == CoinFace::Up ? 1 : -1;
      for (int i = -radius; i <= radius; ++i) {
        for (int j = -radius; j <= radius; ++j) {
          if (std::abs(i + s1) > radius || std::abs(j + s2) > radius) continue;
          out(oracle_index({c1, c2, i + s1, j + s2}, radius),
              oracle_index({c1, c2, i, j}, radius)) = 1.0;
        }
      }
    }
  }
  return out;
}

Eigen::MatrixXd evolution_operator(double theta, int radius) {
  return shift_operator(radius) * coin_operator(theta, radius);
}

Eigen::VectorXcd to_oracle_vector(const PureState& state, int radius) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dense_dim(radius));
  for (const auto& [label, amp] : state) v(oracle_index(label, radius)) = amp;
  return v;
}

double max_deviation(const PureState& state, const Eigen::VectorXcd& dense,
                     int radius) {
  return (to_oracle_vector(state, radius) - dense).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd amplitude_matrix(const WalkerPureState& state) {
  const Box b = bounding_box(state);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(b.n1(), b.n2());
  for (const auto& [pos, amp] : state) a(pos.x1 - b.lo1, pos.x2 - b.lo2) = amp;
  return a;
}

double schmidt_log_negativity(const WalkerPureState& state) {
  const Eigen::MatrixXcd a = amplitude_matrix(state);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const double sum = svd.singularValues().sum() / a.norm();
  return std::log2(sum * sum);
}

Eigen::VectorXd brute_partial_transpose_spectrum(const WalkerPureState& state) {
  const Eigen::MatrixXcd a = amplitude_matrix(state);
  const Eigen::Index n1 = a.rows();
  const Eigen::Index n2 = a.cols();
  Eigen::MatrixXcd pt(n1 * n2, n1 * n2);
  // <i,j| rho^T2 |k,l> = <i,l| rho |k,j> = a(i,l) conj(a(k,j))
  for (Eigen::Index i = 0; i < n1; ++i)
    for (Eigen::Index j = 0; j < n2; ++j)
      for (Eigen::Index k = 0; k < n1; ++k)
        for (Eigen::Index l = 0; l < n2; ++l)
          pt(i * n2 + j, k * n2 + l) = a(i, l) * std::conj(a(k, j));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(pt, false);
  Eigen::VectorXd out = solver.eigenvalues().real();
  std::sort(out.data(), out.data() + out.size());
  return out;
}

Eigen::MatrixXcd brute_reduced_first(const WalkerPureState& state) {
  const Eigen::MatrixXcd a = amplitude_matrix(state);
  return a * a.adjoint();
}

WalkerPureState random_antisymmetric(std::mt19937_64& rng, int pairs, int radius) {
  std::uniform_int_distribution<int> pos(-radius, radius);
  std::normal_distribution<double> normal;
  std::vector<WalkerPureState::Entry> entries;
  for (int n = 0; n < pairs; ++n) {
    const int i = pos(rng);
    int j = pos(rng);
    if (i == j) j = i == radius ? i - 1 : i + 1;
    const Complex a{normal(rng), normal(rng)};
    entries.push_back({{i, j}, a});
    entries.push_back({{j, i}, -a});
  }
  WalkerPureState s(std::move(entries), 0);
  return s.empty() ? random_antisymmetric(rng, pairs, radius) : normalize(s);
}

WalkerPureState random_symmetric(std::mt19937_64& rng, int pairs, int radius) {
  std::uniform_int_distribution<int> pos(-radius, radius);
  std::normal_distribution<double> normal;
  std::vector<WalkerPureState::Entry> entries;
  for (int n = 0; n < pairs; ++n) {
    const int i = pos(rng);
    const int j = pos(rng);
    const Complex a{normal(rng), normal(rng)};
    if (i == j) {
      entries.push_back({{i, i}, a});
    } else {
      entries.push_back({{i, j}, a});
      entries.push_back({{j, i}, a});
    }
  }
  return normalize(WalkerPureState(std::move(entries), 0));
}

}  // namespace qwalk::oracle
