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

#include <optional>
#include <string_view>
#include <vector>

#include "qwalk/core_state.hpp"

namespace qwalk {

enum class SymmetryClass { Symmetric, AntiSymmetric, None };

inline constexpr double kDefaultClassTolerance = 1e-9;

std::string_view to_string(SymmetryClass cls);

/** Swaps the two coin-walker parties: (c1, c2, x1, x2) -> (c2, c1, x2, x1). */
PureState exchange(const PureState& state);

/** Swaps the walkers: (x1, x2) -> (x2, x1). */
WalkerPureState exchange_walkers(const WalkerPureState& state);

template <typename Key>
SparseState<Key> exchanged(const SparseState<Key>& state) {
  std::vector<typename SparseState<Key>::Entry> out;
  out.reserve(state.size());
  for (const auto& [key, amp] : state) out.emplace_back(swapped(key), amp);
  return SparseState<Key>(std::move(out), state.step_count());
}

/**
 * Exchange eigenclass of a normalized state, decided on the residual norms
 * |P s - s| and |P s + s|. Since P^2 = I these are the only eigenvalues, so a
 * global phase on s cannot change the outcome.
 */
template <typename Key>
SymmetryClass classify(
    const SparseState<Key>& state, double tol = kDefaultClassTolerance) {
  const SparseState<Key> image = exchanged(state);
  if (combination_norm(image, state, -1.0) < tol) return SymmetryClass::Symmetric;
  if (combination_norm(image, state, +1.0) < tol) {
    return SymmetryClass::AntiSymmetric;
  }
  return SymmetryClass::None;
}

}  // namespace qwalk
