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

#include "qwalk/operators.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr int shift_of(CoinFace c) { return c == CoinFace::Up ? 1 : -1; }

// Coin sectors in canonical order UU, UD, DU, DD.
constexpr std::array<std::pair<CoinFace, CoinFace>, 4> kSectors = {{
    {CoinFace::Up, CoinFace::Up},
    {CoinFace::Up, CoinFace::Down},
    {CoinFace::Down, CoinFace::Up},
    {CoinFace::Down, CoinFace::Down},
}};

constexpr std::size_t sector_index(CoinFace c1, CoinFace c2) {
  return 2 * static_cast<std::size_t>(c1) + static_cast<std::size_t>(c2);
}

}  // namespace

CoinMatrix coin_matrix(const CoinAngle& angle) {
  const double c = std::cos(angle.radians());
  const double s = std::sin(angle.radians());
  CoinMatrix m;
  m << c, s, s, -c;
  return m;
}

PureState apply_step(const PureState& state, const CoinMatrix& coin) {
  // k[d][c] = C(d1, c1) * C(d2, c2): amplitude from coin sector c to d.
  std::array<std::array<double, 4>, 4> k{};
  for (std::size_t d = 0; d < 4; ++d) {
    for (std::size_t c = 0; c < 4; ++c) {
      const auto [d1, d2] = kSectors[d];
      const auto [c1, c2] = kSectors[c];
      k[d][c] = coin(static_cast<int>(d1), static_cast<int>(c1)) *
                coin(static_cast<int>(d2), static_cast<int>(c2));
    }
  }

  std::vector<PureState::Entry> out;
  out.reserve(state.size() * 4);

  const auto& entries = state.entries();
  std::size_t i = 0;
  while (i < entries.size()) {
    // Entries are sorted by position first, so one position pair is a run.
    const int x1 = entries[i].first.x1;
    const int x2 = entries[i].first.x2;
    std::array<Complex, 4> a{};
    while (i < entries.size() && entries[i].first.x1 == x1 &&
           entries[i].first.x2 == x2) {
      a[sector_index(entries[i].first.c1, entries[i].first.c2)] =
          entries[i].second;
      ++i;
    }
    for (std::size_t d = 0; d < 4; ++d) {
      // (UU + DD) + (UD + DU): invariant under swapping UD and DU.
      const Complex value = (k[d][0] * a[0] + k[d][3] * a[3]) +
                            (k[d][1] * a[1] + k[d][2] * a[2]);
      if (value == 0.0) continue;
      const auto [d1, d2] = kSectors[d];
      out.push_back({{d1, d2, x1 + shift_of(d1), x2 + shift_of(d2)}, value});
    }
  }
  return PureState(std::move(out), state.step_count() + 1);
}

PureState apply_step(const PureState& state, const CoinAngle& angle) {
  return apply_step(state, coin_matrix(angle));
}

PureState apply_n_steps(PureState state, const CoinAngle& angle, int n) {
  if (n < 0) throw std::invalid_argument("step count must be non-negative");
  const CoinMatrix coin = coin_matrix(angle);
  for (int i = 0; i < n; ++i) state = apply_step(state, coin);
  return state;
}

}  // namespace qwalk
