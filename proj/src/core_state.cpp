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

#include "qwalk/core_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr std::pair<BellType, std::string_view> kBellNames[] = {
    {BellType::PsiPlus, "psi-plus"},
    {BellType::PsiMinus, "psi-minus"},
    {BellType::PhiPlus, "phi-plus"},
    {BellType::PhiMinus, "phi-minus"},
};

}  // namespace

std::string_view to_string(BellType bell) {
  for (const auto& [type, name] : kBellNames) {
    if (type == bell) return name;
  }
  return "unknown";
}

std::optional<BellType> parse_bell(std::string_view text) {
  for (const auto& [type, name] : kBellNames) {
    if (name == text) return type;
  }
  return std::nullopt;
}

PureState build_initial(BellType bell) {
  const double h = 1.0 / std::numbers::sqrt2;
  using enum CoinFace;
  std::vector<PureState::Entry> entries;
  switch (bell) {
    case BellType::PsiPlus:
      entries = {{{Up, Down, 0, 0}, h}, {{Down, Up, 0, 0}, h}};
      break;
    case BellType::PsiMinus:
      entries = {{{Up, Down, 0, 0}, h}, {{Down, Up, 0, 0}, -h}};
      break;
    case BellType::PhiPlus:
      entries = {{{Up, Up, 0, 0}, h}, {{Down, Down, 0, 0}, h}};
      break;
    case BellType::PhiMinus:
      entries = {{{Up, Up, 0, 0}, h}, {{Down, Down, 0, 0}, -h}};
      break;
  }
  return PureState(std::move(entries), 0);
}

std::size_t dense_dimension(int radius) {
  const auto width = static_cast<std::size_t>(2 * radius + 1);
  return width * width * 4;
}

std::size_t dense_index(const BasisLabel& label, int radius) {
  if (std::abs(label.x1) > radius || std::abs(label.x2) > radius) {
    throw std::out_of_range("basis label outside the dense lattice");
  }
  const auto width = static_cast<std::size_t>(2 * radius + 1);
  const auto i1 = static_cast<std::size_t>(label.x1 + radius);
  const auto i2 = static_cast<std::size_t>(label.x2 + radius);
  return ((i1 * width + i2) * 2 + static_cast<std::size_t>(label.c1)) * 2 +
         static_cast<std::size_t>(label.c2);
}

Eigen::VectorXcd to_dense(const PureState& state, int radius) {
  Eigen::VectorXcd vec =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dense_dimension(radius)));
  for (const auto& [label, amp] : state) {
    vec(static_cast<Eigen::Index>(dense_index(label, radius))) = amp;
  }
  return vec;
}

PureState from_dense(const Eigen::VectorXcd& vec, int radius, int step_count) {
  if (static_cast<std::size_t>(vec.size()) != dense_dimension(radius)) {
    throw std::invalid_argument("dense vector does not match lattice radius");
  }
  const int width = 2 * radius + 1;
  std::vector<PureState::Entry> entries;
  Eigen::Index idx = 0;
  for (int i1 = 0; i1 < width; ++i1) {
    for (int i2 = 0; i2 < width; ++i2) {
      for (auto c1 : {CoinFace::Up, CoinFace::Down}) {
        for (auto c2 : {CoinFace::Up, CoinFace::Down}) {
          const Complex amp = vec(idx++);
          if (amp != 0.0) {
            entries.push_back({{c1, c2, i1 - radius, i2 - radius}, amp});
          }
        }
      }
    }
  }
  return PureState(std::move(entries), step_count);
}

}  // namespace qwalk
